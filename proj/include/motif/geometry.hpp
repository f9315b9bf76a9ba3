// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0
//
// Small 2D geometry kit shared by every module. All coordinates are image
// coordinates: origin at the top-left corner, x grows right, y grows DOWN.

#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace motif {

struct Vec2 {
  double x{0};
  double y{0};

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
  friend Vec2 operator*(double s, Vec2 a) { return a * s; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// z component of the 3D cross product. In image coordinates a positive
/// value means `b` points to the right of `a` (clockwise on screen).
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

inline Vec2 normalized(Vec2 a) {
  const double n = norm(a);
  return n > 0 ? Vec2{a.x / n, a.y / n} : Vec2{0, 0};
}

/// Unit normal pointing to the agent's left when travelling along `d`
/// (screen east when moving down-screen).
inline Vec2 left_normal(Vec2 d) {
  const Vec2 u = normalized(d);
  return {u.y, -u.x};
}

/// Unit normal pointing to the agent's right when travelling along `d`.
inline Vec2 right_normal(Vec2 d) {
  const Vec2 u = normalized(d);
  return {-u.y, u.x};
}

/// Signed angle from `a` to `b` in (-pi, pi]; positive = clockwise on screen.
inline double signed_angle(Vec2 a, Vec2 b) {
  return std::atan2(cross(a, b), dot(a, b));
}

struct BBox {
  double min_x{0}, min_y{0}, max_x{0}, max_y{0};

  [[nodiscard]] double width() const { return max_x - min_x; }
  [[nodiscard]] double height() const { return max_y - min_y; }
  [[nodiscard]] double diagonal() const { return std::hypot(width(), height()); }
  [[nodiscard]] bool contains(Vec2 p) const {
    return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
  }

  friend bool operator==(const BBox&, const BBox&) = default;
};

BBox bounds_of(std::span<const Vec2> points);

double polyline_length(std::span<const Vec2> points);

/// Cumulative arc length per point; front() == 0, back() == total length.
std::vector<double> cumulative_arclength(std::span<const Vec2> points);

/// Resamples a piecewise-linear path to `n` points at equal arc-length
/// spacing. First/last points are preserved exactly; points that land on an
/// original sample (within fp tolerance) are copied verbatim. Throws
/// invalid-argument for n < 2, degenerate-path for zero total length.
std::vector<Vec2> resample_polyline(std::span<const Vec2> points, int n);

/// Drops consecutive points closer than `eps` (generator leg concatenation
/// duplicates junction samples).
std::vector<Vec2> collapse_duplicates(std::span<const Vec2> points,
                                      double eps = 1e-12);

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

}  // namespace motif
