// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "analyzer_internal.hpp"
#include "motif/analyzer.hpp"
#include "motif/error.hpp"
#include "motif/generators.hpp"

namespace motif {

namespace {

constexpr double kPi = std::numbers::pi;

double deg_to_rad(double deg) { return deg * kPi / 180.0; }

}  // namespace

namespace detail {

// Moving-average smoothing of displacement vectors; averaging components
// sidesteps angle wraparound.
std::vector<Vec2> smoothed_displacements(std::span<const Vec2> path,
                                         int window) {
  std::vector<Vec2> raw;
  raw.reserve(path.size());
  for (std::size_t i = 1; i < path.size(); ++i) {
    raw.push_back(path[i] - path[i - 1]);
  }
  if (window <= 1 || raw.size() < 3) return raw;
  const int half = window / 2;
  std::vector<Vec2> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Vec2 sum{0, 0};
    int count = 0;
    for (int k = -half; k <= half; ++k) {
      const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) + k;
      if (j < 0 || j >= static_cast<std::ptrdiff_t>(raw.size())) continue;
      sum = sum + raw[static_cast<std::size_t>(j)];
      ++count;
    }
    out[i] = sum * (1.0 / count);
  }
  return out;
}

SwingProfile swing_profile(std::span<const Vec2> path, Vec2 axis,
                           double epsilon, bool detrend) {
  SwingProfile out;
  if (path.size() < 3) return out;
  const std::size_t n = path.size();
  std::vector<double> r(n);
  double sum_v = 0;
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = dot(path[i], axis);
    sum_v += r[i];
  }
  const double mean = sum_v / n;
  if (detrend) {
    // Travel along the axis is removed with the endpoint secant; when the
    // net axis displacement is itself within the wobble (a round trip or a
    // perpendicular travel), plain centering is the right baseline — a
    // least-squares fit would tilt into phase-unbalanced zigzags and invent
    // extremes at the endpoints.
    const double net = r[n - 1] - r[0];
    std::vector<double> secant(n);
    double peak = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double u = static_cast<double>(i) / (n - 1);
      secant[i] = r[i] - (r[0] + net * u);
      peak = std::max(peak, std::abs(secant[i]));
    }
    if (std::abs(net) > 2 * peak) {
      double secant_mean = 0;
      for (double v : secant) secant_mean += v;
      secant_mean /= n;
      for (std::size_t i = 0; i < n; ++i) r[i] = secant[i] - secant_mean;
    } else {
      for (double& v : r) v -= mean;
    }
  } else {
    for (double& v : r) v -= mean;
  }

  // Hysteresis band walk: collects alternating significant extremes;
  // entering the opposite band starts a new one. A swing is one
  // extreme-to-extreme run, so shaking of frequency f counts f.
  int state = 0;  // -1 below band, +1 above band, 0 not yet significant
  for (std::size_t i = 0; i < n; ++i) {
    const double value = r[i];
    if (state == 0) {
      if (value >= epsilon || value <= -epsilon) {
        state = value > 0 ? 1 : -1;
        out.extremes.push_back(value);
        out.extreme_indices.push_back(i);
      }
      continue;
    }
    if (state == 1) {
      if (value >= out.extremes.back()) {
        out.extremes.back() = value;
        out.extreme_indices.back() = i;
      } else if (value <= -epsilon) {
        state = -1;
        out.extremes.push_back(value);
        out.extreme_indices.push_back(i);
      }
    } else {
      if (value <= out.extremes.back()) {
        out.extremes.back() = value;
        out.extreme_indices.back() = i;
      } else if (value >= epsilon) {
        state = 1;
        out.extremes.push_back(value);
        out.extreme_indices.push_back(i);
      }
    }
  }
  return out;
}

AxisOscillation count_swings(std::span<const Vec2> path, Vec2 axis,
                             double epsilon) {
  const SwingProfile profile = swing_profile(path, axis, epsilon);
  AxisOscillation out;
  if (profile.extremes.size() < 2) return out;
  out.cycle_count = static_cast<int>(profile.extremes.size()) - 1;
  double amplitude_sum = 0;
  for (std::size_t i = 1; i < profile.extremes.size(); ++i) {
    amplitude_sum += std::abs(profile.extremes[i] - profile.extremes[i - 1]);
  }
  out.mean_amplitude = amplitude_sum / out.cycle_count;
  return out;
}

Vec2 axis_vector(dsl::Axis axis, std::span<const Vec2> path) {
  constexpr double kDiag = 0.7071067811865476;
  switch (axis) {
    case dsl::Axis::kHorizontal:
      return {1, 0};
    case dsl::Axis::kVertical:
      return {0, 1};
    case dsl::Axis::kDiagonal: {
      // Pick the diagonal with more detrended energy.
      const Vec2 d1{kDiag, kDiag};
      const Vec2 d2{kDiag, -kDiag};
      const AxisOscillation o1 = count_swings(path, d1, 0);
      const AxisOscillation o2 = count_swings(path, d2, 0);
      return o1.mean_amplitude * o1.cycle_count >=
                     o2.mean_amplitude * o2.cycle_count
                 ? d1
                 : d2;
    }
    case dsl::Axis::kBackAndForth:
    default: {
      const Vec2 net = path.empty() ? Vec2{0, 0} : path.back() - path.front();
      if (norm(net) > 1e-12) return normalized(net);
      // Closed or stationary path: fall back to the dominant raw direction.
      Vec2 longest{1, 0};
      double best = 0;
      for (std::size_t i = 1; i < path.size(); ++i) {
        const Vec2 d = path[i] - path[i - 1];
        if (norm(d) > best) {
          best = norm(d);
          longest = d;
        }
      }
      return normalized(longest);
    }
  }
}

namespace {

double turning_sum(std::span<const Vec2> path, double diag, int window) {
  const std::vector<Vec2> disp = smoothed_displacements(path, window);
  std::vector<Vec2> d;
  d.reserve(disp.size());
  for (const Vec2& v : disp) {
    if (norm(v) > 1e-12) d.push_back(v);
  }
  if (d.size() < 2) return 0;
  double total = 0;
  for (std::size_t i = 1; i < d.size(); ++i) {
    total += signed_angle(d[i - 1], d[i]);
  }
  const bool closed =
      norm(path.front() - path.back()) < 1e-6 * std::max(diag, 1e-12);
  if (closed) total += signed_angle(d.back(), d.front());
  return total;
}

}  // namespace

WindingInfo winding_of_span(std::span<const Vec2> path, double diag,
                            const AnalyzerConfig& cfg) {
  WindingInfo out;
  if (path.size() < 3) return out;
  const double total = turning_sum(path, diag, cfg.smoothing_window);
  out.total_turning = total;

  // Sub-sample-scale jitter can fabricate whole revolutions in the fine
  // turning sum, so the revolution count and direction take the median over
  // coarser resamplings of the same span (identical on clean geometry).
  std::vector<double> totals{total};
  for (int scale : {64, 32, 16}) {
    if (static_cast<int>(path.size()) <= scale) continue;
    const std::vector<Vec2> coarse =
        resample_polyline(path, scale);
    totals.push_back(turning_sum(coarse, diag, cfg.smoothing_window));
  }
  std::vector<double> sorted = totals;
  std::sort(sorted.begin(), sorted.end());
  const double robust = sorted[sorted.size() / 2];

  out.revolution_count =
      static_cast<int>(std::lround(std::abs(robust) / (2 * kPi)));
  if (std::abs(robust) > 1e-6) {
    out.direction = robust > 0 ? dsl::TurnDirection::kClockwise
                               : dsl::TurnDirection::kCounterClockwise;
  }
  Vec2 center{0, 0};
  for (const Vec2& p : path) center = center + p;
  center = center * (1.0 / static_cast<double>(path.size()));
  double mean_r = 0;
  for (const Vec2& p : path) mean_r += norm(p - center);
  mean_r /= static_cast<double>(path.size());
  if (mean_r > 1e-12) {
    double var = 0;
    for (const Vec2& p : path) {
      const double dr = norm(p - center) - mean_r;
      var += dr * dr;
    }
    out.radial_cv = std::sqrt(var / static_cast<double>(path.size())) / mean_r;
  }
  return out;
}

GroundingEvent grounding_of_span(std::span<const Vec2> path,
                                 const SceneObject& object, double diag,
                                 const AnalyzerConfig& cfg) {
  GroundingEvent ev;
  ev.label = object.label;
  ev.min_distance = std::numeric_limits<double>::max();
  std::size_t argmin = 0;
  double sum_u = 0, sum_v = 0, sum_uu = 0, sum_uv = 0;
  const std::size_t n = path.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double dist = object.region.distance(path[i]);
    if (dist < ev.min_distance) {
      ev.min_distance = dist;
      argmin = i;
    }
    if (object.region.contains(path[i])) ev.entered_region = true;
    const double u = n > 1 ? static_cast<double>(i) / (n - 1) : 0.0;
    sum_u += u;
    sum_v += dist;
    sum_uu += u * u;
    sum_uv += u * dist;
  }
  const double denom = n * sum_uu - sum_u * sum_u;
  ev.distance_slope = denom != 0 ? (n * sum_uv - sum_u * sum_v) / denom : 0;
  ev.flat = std::abs(ev.distance_slope) < cfg.epsilon_slope * diag;

  const Vec2 chord = path.back() - path.front();
  const Vec2 v = path[argmin] - object.region.centroid();
  if (norm(chord) > 1e-12 && norm(v) > 1e-12) {
    const double c = cross(chord, v);
    if (c > 0) {
      ev.passing_side = dsl::Side::kRight;
    } else if (c < 0) {
      ev.passing_side = dsl::Side::kLeft;
    }
  }
  ev.chord_crossed =
      object.region.segment_intersects(path.front(), path.back());
  return ev;
}

std::vector<PathSegment> segment_span(std::span<const Vec2> path,
                                      const AnalyzerConfig& cfg) {
  const std::vector<Vec2> disp =
      smoothed_displacements(path, cfg.smoothing_window);
  const double split_angle = deg_to_rad(cfg.split_angle_deg);

  // Initial split: open a new segment where the smoothed heading departs
  // from the segment's running mean direction for split_sustain samples.
  std::vector<std::size_t> cuts;  // displacement indices that start a segment
  cuts.push_back(0);
  Vec2 running = disp.empty() ? Vec2{0, 0} : disp[0];
  for (std::size_t i = 1; i < disp.size(); ++i) {
    if (norm(disp[i]) < 1e-12 || norm(running) < 1e-12) {
      running = running + disp[i];
      continue;
    }
    const double dev = std::abs(signed_angle(running, disp[i]));
    bool sustained = dev > split_angle;
    for (int k = 1; sustained && k < cfg.split_sustain; ++k) {
      const std::size_t j = i + static_cast<std::size_t>(k);
      if (j >= disp.size()) break;
      sustained = std::abs(signed_angle(running, disp[j])) > split_angle;
    }
    if (sustained) {
      cuts.push_back(i);
      running = disp[i];
    } else {
      running = running + disp[i];
    }
  }

  auto build = [&](std::size_t d_begin, std::size_t d_end) {
    // Displacement k connects points k and k+1.
    PathSegment seg;
    seg.begin = d_begin;
    seg.end = d_end + 1;
    seg.net_displacement = path[seg.end - 1] - path[seg.begin];
    seg.magnitude = norm(seg.net_displacement);
    seg.arc_length = 0;
    for (std::size_t k = d_begin; k < d_end; ++k) {
      seg.arc_length += norm(path[k + 1] - path[k]);
    }
    if (seg.magnitude > 1e-12) {
      seg.dominant_direction = gen::classify_direction(seg.net_displacement);
    }
    return seg;
  };

  std::vector<PathSegment> segments;
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    const std::size_t d_begin = cuts[c];
    const std::size_t d_end = c + 1 < cuts.size() ? cuts[c + 1] : disp.size();
    segments.push_back(build(d_begin, d_end));
  }

  const double total_arc = polyline_length(path);
  auto segment_mean_dir = [&](const PathSegment& s) {
    Vec2 sum{0, 0};
    for (std::size_t k = s.begin; k + 1 < s.end; ++k) {
      sum = sum + (path[k + 1] - path[k]);
    }
    return sum;
  };
  auto merge_range = [&](std::size_t first, std::size_t last, bool oscillating,
                         bool rotating) {
    PathSegment merged = build(segments[first].begin, segments[last].end - 1);
    merged.oscillating = oscillating;
    merged.rotating = rotating;
    segments.erase(segments.begin() + static_cast<std::ptrdiff_t>(first),
                   segments.begin() + static_cast<std::ptrdiff_t>(last + 1));
    segments.insert(segments.begin() + static_cast<std::ptrdiff_t>(first),
                    merged);
  };

  // Absorb slivers below min_segment_frac of the arc into the closer-heading
  // neighbour.
  bool changed = true;
  while (changed && segments.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < segments.size(); ++i) {
      if (segments[i].arc_length >= cfg.min_segment_frac * total_arc) continue;
      const std::size_t buddy = i == 0 ? 1 : i - 1;
      const std::size_t first = std::min(i, buddy);
      const std::size_t last = std::max(i, buddy);
      merge_range(first, last, segments[first].oscillating || segments[last].oscillating,
                  segments[first].rotating || segments[last].rotating);
      changed = true;
      break;
    }
  }

  // Oscillating blocks: runs where consecutive headings flip by more than the
  // split angle but every second heading agrees again.
  for (std::size_t i = 0; i + 2 < segments.size();) {
    const Vec2 d0 = segment_mean_dir(segments[i]);
    const Vec2 d1 = segment_mean_dir(segments[i + 1]);
    const Vec2 d2 = segment_mean_dir(segments[i + 2]);
    const bool pattern =
        std::abs(signed_angle(d0, d1)) > split_angle &&
        std::abs(signed_angle(d1, d2)) > split_angle &&
        std::abs(signed_angle(d0, d2)) < split_angle;
    if (!pattern) {
      ++i;
      continue;
    }
    std::size_t last = i + 2;
    while (last + 1 < segments.size()) {
      const Vec2 prev = segment_mean_dir(segments[last - 1]);
      const Vec2 next = segment_mean_dir(segments[last + 1]);
      const Vec2 cur = segment_mean_dir(segments[last]);
      if (std::abs(signed_angle(cur, next)) > split_angle &&
          std::abs(signed_angle(prev, next)) < split_angle) {
        ++last;
      } else {
        break;
      }
    }
    merge_range(i, last, /*oscillating=*/true, /*rotating=*/false);
    ++i;
  }

  // Rotating blocks: consecutive segments that each curve internally and
  // keep turning the same way across the junction.
  auto internal_turning = [&](const PathSegment& s) {
    double total = 0;
    for (std::size_t k = s.begin; k + 2 < s.end; ++k) {
      const Vec2 a = path[k + 1] - path[k];
      const Vec2 b = path[k + 2] - path[k + 1];
      if (norm(a) > 1e-12 && norm(b) > 1e-12) total += signed_angle(a, b);
    }
    return total;
  };
  for (std::size_t i = 0; i + 1 < segments.size();) {
    const double t0 = internal_turning(segments[i]);
    const double t1 = internal_turning(segments[i + 1]);
    const bool both_curved = std::abs(t0) > deg_to_rad(30) &&
                             std::abs(t1) > deg_to_rad(30);
    if (both_curved && t0 * t1 > 0) {
      merge_range(i, i + 1, false, /*rotating=*/true);
    } else {
      ++i;
    }
  }

  return segments;
}

}  // namespace detail

std::vector<Vec2> analysis_path(const Trajectory& traj,
                                const AnalyzerConfig& cfg) {
  const std::vector<Vec2> raw = traj.poi_track().points();
  if (raw.size() < 2) raise("degenerate-path", "track has fewer than 2 samples");
  const std::vector<Vec2> clean = collapse_duplicates(raw);
  if (clean.size() < 2) raise("degenerate-path", "track has no extent");
  return resample_polyline(clean, cfg.n_analysis);
}

std::vector<PathSegment> segment_primitives(const Trajectory& traj,
                                            const AnalyzerConfig& cfg) {
  const std::vector<Vec2> path = analysis_path(traj, cfg);
  return detail::segment_span(path, cfg);
}

AxisOscillation count_oscillations(const Trajectory& traj, dsl::Axis axis,
                                   const AnalyzerConfig& cfg) {
  std::vector<Vec2> path;
  try {
    path = analysis_path(traj, cfg);
  } catch (const Error&) {
    return {};  // flat or degenerate paths oscillate zero times
  }
  const double diag = bounds_of(path).diagonal();
  return detail::count_swings(path, detail::axis_vector(axis, path),
                              cfg.epsilon_amp * diag);
}

WindingInfo winding(const Trajectory& traj, const AnalyzerConfig& cfg) {
  const std::vector<Vec2> path = analysis_path(traj, cfg);
  return detail::winding_of_span(path, bounds_of(path).diagonal(), cfg);
}

std::vector<GroundingEvent> grounding_events(
    const Trajectory& traj, std::span<const SceneObject> scene,
    const AnalyzerConfig& cfg) {
  const std::vector<Vec2> path = analysis_path(traj, cfg);
  const double diag = bounds_of(path).diagonal();
  std::vector<GroundingEvent> events;
  events.reserve(scene.size());
  for (const SceneObject& object : scene) {
    events.push_back(detail::grounding_of_span(path, object, diag, cfg));
  }
  return events;
}

MotionFeatures extract_features(const Trajectory& traj,
                                std::span<const SceneObject> scene,
                                const AnalyzerConfig& cfg) {
  MotionFeatures out;
  out.path = analysis_path(traj, cfg);
  out.diag = bounds_of(out.path).diagonal();
  out.total_arc = polyline_length(out.path);
  out.segments = detail::segment_span(out.path, cfg);
  for (dsl::Axis axis :
       {dsl::Axis::kHorizontal, dsl::Axis::kVertical, dsl::Axis::kDiagonal,
        dsl::Axis::kBackAndForth}) {
    out.oscillations[axis] =
        detail::count_swings(out.path, detail::axis_vector(axis, out.path),
                             cfg.epsilon_amp * out.diag);
  }
  out.winding = detail::winding_of_span(out.path, out.diag, cfg);
  for (const SceneObject& object : scene) {
    out.grounding.push_back(
        detail::grounding_of_span(out.path, object, out.diag, cfg));
  }
  return out;
}

}  // namespace motif
