// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0
//
// Span-level feature computations shared between the feature extractor and
// the clause scorer. Internal to the analyzer.

#pragma once

#include <span>
#include <vector>

#include "motif/analyzer.hpp"

namespace motif::detail {

std::vector<Vec2> smoothed_displacements(std::span<const Vec2> path,
                                         int window);

/// Alternating significant extremes of the detrended projection onto `axis`
/// (hysteresis band of half-width `epsilon`). Swing count = size - 1.
struct SwingProfile {
  std::vector<double> extremes;
  std::vector<std::size_t> extreme_indices;  // sample index of each extreme
};
SwingProfile swing_profile(std::span<const Vec2> path, Vec2 axis,
                           double epsilon, bool detrend = true);

AxisOscillation count_swings(std::span<const Vec2> path, Vec2 axis,
                             double epsilon);

Vec2 axis_vector(dsl::Axis axis, std::span<const Vec2> path);

WindingInfo winding_of_span(std::span<const Vec2> path, double diag,
                            const AnalyzerConfig& cfg);

GroundingEvent grounding_of_span(std::span<const Vec2> path,
                                 const SceneObject& object, double diag,
                                 const AnalyzerConfig& cfg);

std::vector<PathSegment> segment_span(std::span<const Vec2> path,
                                      const AnalyzerConfig& cfg);

}  // namespace motif::detail
