// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#include "motif/geometry.hpp"

#include <algorithm>

#include "motif/error.hpp"

namespace motif {

BBox bounds_of(std::span<const Vec2> points) {
  if (points.empty()) return {};
  BBox box{points[0].x, points[0].y, points[0].x, points[0].y};
  for (const Vec2& p : points) {
    box.min_x = std::min(box.min_x, p.x);
    box.min_y = std::min(box.min_y, p.y);
    box.max_x = std::max(box.max_x, p.x);
    box.max_y = std::max(box.max_y, p.y);
  }
  return box;
}

double polyline_length(std::span<const Vec2> points) {
  double total = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    total += norm(points[i] - points[i - 1]);
  }
  return total;
}

std::vector<double> cumulative_arclength(std::span<const Vec2> points) {
  std::vector<double> cum(points.size(), 0.0);
  for (std::size_t i = 1; i < points.size(); ++i) {
    cum[i] = cum[i - 1] + norm(points[i] - points[i - 1]);
  }
  return cum;
}

std::vector<Vec2> resample_polyline(std::span<const Vec2> points, int n) {
  if (n < 2) raise("invalid-argument", "resample needs n >= 2");
  if (points.size() < 2) raise("invalid-argument", "path needs >= 2 points");

  const std::vector<double> cum = cumulative_arclength(points);
  const double total = cum.back();
  if (total <= 0) raise("degenerate-path", "path has zero arc length");

  const double snap = 1e-12 * total;
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back(points.front());

  std::size_t seg = 0;
  for (int i = 1; i < n - 1; ++i) {
    const double target = total * static_cast<double>(i) / (n - 1);
    while (seg + 2 < points.size() && cum[seg + 1] < target) ++seg;
    // Copy verbatim when the target lands on an original sample, so
    // resampling an already-uniform path is the identity.
    if (std::abs(cum[seg] - target) <= snap) {
      out.push_back(points[seg]);
      continue;
    }
    if (std::abs(cum[seg + 1] - target) <= snap) {
      out.push_back(points[seg + 1]);
      continue;
    }
    const double len = cum[seg + 1] - cum[seg];
    const double u = len > 0 ? (target - cum[seg]) / len : 0.0;
    out.push_back(points[seg] + (points[seg + 1] - points[seg]) * u);
  }
  out.push_back(points.back());
  return out;
}

std::vector<Vec2> collapse_duplicates(std::span<const Vec2> points, double eps) {
  std::vector<Vec2> out;
  out.reserve(points.size());
  for (const Vec2& p : points) {
    if (out.empty() || norm(p - out.back()) > eps) out.push_back(p);
  }
  return out;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 <= 0) return norm(p - a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return norm(p - (a + ab * t));
}

namespace {

int orientation(Vec2 a, Vec2 b, Vec2 c) {
  const double v = cross(b - a, c - a);
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

}  // namespace motif
