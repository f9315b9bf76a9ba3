// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#include "motif/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "motif/error.hpp"

namespace motif {

std::vector<Vec2> KeypointTrack::points() const {
  std::vector<Vec2> pts;
  pts.reserve(samples.size());
  for (const TrackSample& s : samples) pts.push_back({s.x, s.y});
  return pts;
}

const KeypointTrack& Trajectory::poi_track() const {
  for (const KeypointTrack& track : tracks) {
    if (track.keypoint_id == point_of_interest) return track;
  }
  raise("missing-poi-track", "point_of_interest " +
                                 std::to_string(point_of_interest) +
                                 " has no matching track");
}

double Region::area() const {
  if (kind == Kind::kBox) return (x1 - x0) * (y1 - y0);
  double twice = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Vec2& a = points[i];
    const Vec2& b = points[(i + 1) % points.size()];
    twice += cross(a, b);
  }
  return std::abs(twice) / 2;
}

Vec2 Region::centroid() const {
  if (kind == Kind::kBox) return {(x0 + x1) / 2, (y0 + y1) / 2};
  Vec2 sum{0, 0};
  for (const Vec2& p : points) sum = sum + p;
  return points.empty() ? sum : sum * (1.0 / static_cast<double>(points.size()));
}

bool Region::contains(Vec2 p) const {
  if (kind == Kind::kBox) {
    return p.x > x0 && p.x < x1 && p.y > y0 && p.y < y1;
  }
  // Ray cast to +x; strictly-inside semantics are good enough for grounding
  // checks (boundary points count as outside).
  bool inside = false;
  for (std::size_t i = 0, j = points.size() - 1; i < points.size(); j = i++) {
    const Vec2& a = points[i];
    const Vec2& b = points[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_at = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < x_at) inside = !inside;
    }
  }
  return inside;
}

double Region::distance(Vec2 p) const {
  if (contains(p)) return 0;
  double best = std::numeric_limits<double>::max();
  if (kind == Kind::kBox) {
    const Vec2 c00{x0, y0}, c10{x1, y0}, c11{x1, y1}, c01{x0, y1};
    best = std::min({point_segment_distance(p, c00, c10),
                     point_segment_distance(p, c10, c11),
                     point_segment_distance(p, c11, c01),
                     point_segment_distance(p, c01, c00)});
  } else {
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Vec2& a = points[i];
      const Vec2& b = points[(i + 1) % points.size()];
      best = std::min(best, point_segment_distance(p, a, b));
    }
  }
  return best;
}

bool Region::segment_intersects(Vec2 a, Vec2 b) const {
  if (contains(a) || contains(b)) return true;
  if (kind == Kind::kBox) {
    const Vec2 c00{x0, y0}, c10{x1, y0}, c11{x1, y1}, c01{x0, y1};
    return segments_intersect(a, b, c00, c10) ||
           segments_intersect(a, b, c10, c11) ||
           segments_intersect(a, b, c11, c01) ||
           segments_intersect(a, b, c01, c00);
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (segments_intersect(a, b, points[i], points[(i + 1) % points.size()])) {
      return true;
    }
  }
  // Midpoint inside covers a segment fully contained in a polygon.
  return contains((a + b) * 0.5);
}

KeypointTrack resample_arclength(const KeypointTrack& track, int n) {
  if (n < 2) raise("invalid-argument", "resample_arclength needs n >= 2");
  if (track.samples.size() < 2) {
    raise("invalid-argument", "track needs >= 2 samples");
  }
  const std::vector<Vec2> pts = track.points();
  const std::vector<double> cum = cumulative_arclength(pts);
  const double total = cum.back();
  if (total <= 0) raise("degenerate-path", "track has zero arc length");

  const double snap = 1e-12 * total;
  KeypointTrack out;
  out.keypoint_id = track.keypoint_id;
  out.samples.reserve(static_cast<std::size_t>(n));
  out.samples.push_back(track.samples.front());

  std::size_t seg = 0;
  for (int i = 1; i < n - 1; ++i) {
    const double target = total * static_cast<double>(i) / (n - 1);
    while (seg + 2 < pts.size() && cum[seg + 1] < target) ++seg;
    if (std::abs(cum[seg] - target) <= snap) {
      out.samples.push_back(track.samples[seg]);
      continue;
    }
    if (std::abs(cum[seg + 1] - target) <= snap) {
      out.samples.push_back(track.samples[seg + 1]);
      continue;
    }
    const double len = cum[seg + 1] - cum[seg];
    const double u = len > 0 ? (target - cum[seg]) / len : 0.0;
    const TrackSample& a = track.samples[seg];
    const TrackSample& b = track.samples[seg + 1];
    out.samples.push_back({a.t + (b.t - a.t) * u, a.x + (b.x - a.x) * u,
                           a.y + (b.y - a.y) * u});
  }
  out.samples.push_back(track.samples.back());
  return out;
}

BBox bounding_box(const KeypointTrack& track) {
  const std::vector<Vec2> pts = track.points();
  return bounds_of(pts);
}

namespace {

void validate_track(const KeypointTrack& track, std::vector<Violation>& out) {
  const std::string where = "track " + std::to_string(track.keypoint_id);
  if (track.samples.size() < 2) {
    out.push_back({"track-too-short", where + " has fewer than 2 samples"});
  }
  for (std::size_t i = 0; i < track.samples.size(); ++i) {
    const TrackSample& s = track.samples[i];
    if (!std::isfinite(s.x) || !std::isfinite(s.y)) {
      out.push_back({"non-finite-coordinate",
                     where + " sample " + std::to_string(i)});
      break;
    }
  }
  for (std::size_t i = 1; i < track.samples.size(); ++i) {
    if (track.samples[i].t <= track.samples[i - 1].t) {
      out.push_back(
          {"non-increasing-time", where + " at sample " + std::to_string(i)});
      break;
    }
  }
}

}  // namespace

std::vector<Violation> validate_episode(const Episode& episode) {
  std::vector<Violation> out;
  if (episode.id.empty()) out.push_back({"empty-id", "episode id is empty"});
  if (episode.task_instruction.empty()) {
    out.push_back({"empty-task-instruction", "task_instruction is empty"});
  }
  if (episode.motion_description.empty()) {
    out.push_back({"empty-motion-description", "motion_description is empty"});
  }
  if (episode.trajectory.tracks.empty()) {
    out.push_back({"no-tracks", "trajectory has no tracks"});
  }
  for (const KeypointTrack& track : episode.trajectory.tracks) {
    validate_track(track, out);
  }
  const bool poi_found = std::any_of(
      episode.trajectory.tracks.begin(), episode.trajectory.tracks.end(),
      [&](const KeypointTrack& t) {
        return t.keypoint_id == episode.trajectory.point_of_interest;
      });
  if (!poi_found) {
    out.push_back({"missing-poi-track",
                   "point_of_interest " +
                       std::to_string(episode.trajectory.point_of_interest) +
                       " has no matching track"});
  }
  // All tracks must share one frame-index range.
  if (episode.trajectory.tracks.size() > 1) {
    const auto& first = episode.trajectory.tracks.front().samples;
    if (!first.empty()) {
      for (const KeypointTrack& track : episode.trajectory.tracks) {
        if (track.samples.empty()) continue;
        if (track.samples.front().t != first.front().t ||
            track.samples.back().t != first.back().t) {
          out.push_back({"mismatched-frame-range",
                         "track " + std::to_string(track.keypoint_id)});
        }
      }
    }
  }
  for (const SceneObject& obj : episode.scene) {
    if (obj.label.empty()) {
      out.push_back({"empty-object-label", "scene object with empty label"});
    }
    if (obj.region.area() <= 0) {
      out.push_back({"degenerate-region", "object '" + obj.label + "'"});
    }
  }
  for (const Frame& frame : episode.frames) {
    if (frame.width < 1 || frame.height < 1) {
      out.push_back({"bad-frame-size",
                     "frame " + std::to_string(frame.index)});
    } else if (frame.has_pixels() &&
               frame.pixels.size() !=
                   static_cast<std::size_t>(frame.width) * frame.height * 3) {
      out.push_back({"bad-raster-size",
                     "frame " + std::to_string(frame.index)});
    }
  }
  return out;
}

}  // namespace motif
