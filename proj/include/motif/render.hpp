// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic renderers for the three visual motion representations:
// single-keypoint gradient overlay, multi-keypoint flow overlay, and the
// N-frame storyboard. All rasterization is integer Bresenham; repeated
// renders are byte-identical.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "motif/core.hpp"

namespace motif {

struct Rgb {
  std::uint8_t r{0}, g{0}, b{0};
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

struct RenderConfig {
  int line_width{4};
  int endpoint_radius{6};
  Rgb start_color{255, 255, 255};
  Rgb end_color{0, 255, 0};
  Rgb endpoint_color{255, 0, 0};
  int label_strip{9};   // storyboard pixels reserved for the index label
  int resample_points{0};  // 0 = draw the track samples as given

  /// keypoint k draws with palette[k mod 12]
  static const std::array<Rgb, 12>& flow_palette();

  /// Storyboard layout per frame count: 2 -> 1x2, 4 -> 2x2, 9 -> 3x3.
  static std::pair<int, int> storyboard_grid(int n);
};

/// Gradient polyline over the base frame: segment i of m takes
/// lerp(start_color, end_color, i/(m-1)) rounded half-up per channel, and a
/// filled disc of endpoint_color marks the final sample. Pixels away from
/// the stroke keep their base values.
Frame render_keypoint_overlay(const Frame& base, const KeypointTrack& track,
                              const RenderConfig& cfg = {});

/// Every track as a constant-color polyline, drawn in ascending keypoint_id
/// order (later tracks overdraw earlier ones).
Frame render_flow_overlay(const Frame& base,
                          std::span<const KeypointTrack> tracks,
                          const RenderConfig& cfg = {});

/// K-means (k-means++ init, seeded) over 16x16 grayscale downsamples; one
/// representative frame per cluster (closest to centroid, ties to the lowest
/// index; empty clusters take the lowest unused index). Returned ascending.
std::vector<int> select_keyframes(std::span<const Frame> frames, int n,
                                  std::uint64_t seed);

/// Selected keyframes composited into the configured grid; each cell carries
/// its frame index in a 5x7 bitmap font on a label strip.
Frame render_storyboard(std::span<const Frame> frames, int n,
                        const RenderConfig& cfg = {}, std::uint64_t seed = 0);

/// 16x16 grayscale block-average embedding in [0,1], 256 values.
std::vector<double> frame_embedding(const Frame& frame);

}  // namespace motif
