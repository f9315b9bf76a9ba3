// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0
//
// Analytic motion discriminator: extracts path-shape and grounding features
// from a trajectory, scores every clause of a motion description against
// them, and emits a binary verdict with a calibrated score in [0, 1].

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "motif/core.hpp"
#include "motif/dsl.hpp"

namespace motif {

/// Every calibration constant in one place; all distance thresholds are
/// fractions of the trajectory bounding-box diagonal, so verdict labels are
/// scale and translation invariant.
struct AnalyzerConfig {
  int n_analysis{256};            // resampled analysis points
  int smoothing_window{5};        // moving-average window over displacements
  double split_angle_deg{60};     // heading departure that opens a new segment
  int split_sustain{3};           // samples the departure must persist
  double min_segment_frac{0.05};  // segments below this arc share are merged
  double epsilon_amp{0.02};       // oscillation significance threshold
  double epsilon_slope{0.01};     // distance-trend flatness threshold
  double grounding_margin{0.05};  // soft margin for over/avoid/detour scores
  double follow_margin{0.05};     // corridor width for follow-path scores
  double theta{0.7};              // verdict decision threshold
  double surplus_segment_penalty{0.8};
  double count_decay{0.5};        // score lost per cycle/revolution mismatch
  double straight_ramp_lo{0.90};  // sinuosity ramp for "in a straight line"
  double straight_ramp_hi{0.98};
  dsl::Direction forward{dsl::Direction::kUp};  // what "forward" means
};

struct PathSegment {
  std::size_t begin{0};  // [begin, end) into the analysis path
  std::size_t end{0};
  Vec2 net_displacement;
  dsl::Direction dominant_direction{dsl::Direction::kUp};
  double magnitude{0};
  double arc_length{0};
  bool oscillating{false};  // merged alternating-heading block
  bool rotating{false};     // merged consistent-turning block
};

struct AxisOscillation {
  int cycle_count{0};
  double mean_amplitude{0};  // peak-to-peak, input units
};

struct WindingInfo {
  double total_turning{0};  // radians, positive = clockwise on screen
  int revolution_count{0};
  std::optional<dsl::TurnDirection> direction;
  double radial_cv{0};  // radius scatter about the centroid (roundness)
};

struct GroundingEvent {
  std::string label;
  double min_distance{0};
  double distance_slope{0};  // distance change per unit arc fraction
  bool flat{false};
  bool entered_region{false};
  std::optional<dsl::Side> passing_side;
  bool chord_crossed{false};
};

struct MotionFeatures {
  std::vector<Vec2> path;  // duplicate-collapsed, arc-resampled
  double diag{0};
  double total_arc{0};
  std::vector<PathSegment> segments;
  std::map<dsl::Axis, AxisOscillation> oscillations;
  WindingInfo winding;
  std::vector<GroundingEvent> grounding;
};

struct ClauseScore {
  std::string clause;
  double score{0};
  std::string evidence;
};

struct Verdict {
  int label{0};
  double score{0};
  std::vector<ClauseScore> clause_scores;
};

struct RankEntry {
  std::size_t index{0};
  double score{0};
};

// ---- Feature operations ----------------------------------------------------

/// Duplicate-collapsed, equal-arc resampled point-of-interest path.
std::vector<Vec2> analysis_path(const Trajectory& traj,
                                const AnalyzerConfig& cfg = {});

std::vector<PathSegment> segment_primitives(const Trajectory& traj,
                                            const AnalyzerConfig& cfg = {});

/// Swings of the detrended projection onto `axis` that clear the significance
/// band (epsilon_amp of the diagonal). One swing = one monotone run between
/// alternating significant extremes, so a shaking motion of frequency f
/// counts f and a full sine period counts 2.
AxisOscillation count_oscillations(const Trajectory& traj, dsl::Axis axis,
                                   const AnalyzerConfig& cfg = {});

WindingInfo winding(const Trajectory& traj, const AnalyzerConfig& cfg = {});

std::vector<GroundingEvent> grounding_events(
    const Trajectory& traj, std::span<const SceneObject> scene,
    const AnalyzerConfig& cfg = {});

MotionFeatures extract_features(const Trajectory& traj,
                                std::span<const SceneObject> scene,
                                const AnalyzerConfig& cfg = {});

// ---- Discrimination ----------------------------------------------------------

/// Scores one clause against the whole trajectory. Throws unknown-object if
/// the clause names an object that is not in the scene.
ClauseScore check_clause(const Trajectory& traj,
                         std::span<const SceneObject> scene,
                         const dsl::Clause& clause,
                         const AnalyzerConfig& cfg = {});

/// Scores a motion description against a trajectory. Path-shape steps are
/// matched to temporal segments in order (unmatched steps score 0; each
/// surplus segment multiplies the score by the surplus penalty); grounding
/// and straightness steps are judged over the whole path. Clause scores
/// combine as a geometric mean within a step and an arithmetic mean across
/// steps. Throws unknown-object if a clause names an object that is not in
/// the scene.
Verdict discriminate(const Trajectory& traj,
                     std::span<const SceneObject> scene,
                     const dsl::MotionAst& ast, const AnalyzerConfig& cfg = {});

/// Descending by score; ties keep input order.
std::vector<RankEntry> rank(std::span<const Trajectory> trajectories,
                            std::span<const SceneObject> scene,
                            const dsl::MotionAst& ast,
                            const AnalyzerConfig& cfg = {});

}  // namespace motif
