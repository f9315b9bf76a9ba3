// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0
//
// Canonical data model for trajectories, scenes and episodes. All types are
// immutable by convention once constructed; every operation here is a pure
// function, so values can be shared freely across threads.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "motif/geometry.hpp"

namespace motif {

/// One RGB8 video frame; `pixels` may be empty for geometry-only episodes.
struct Frame {
  int index{0};
  int width{0};
  int height{0};
  std::vector<std::uint8_t> pixels;  // row-major RGB8, size = w*h*3 when set

  [[nodiscard]] bool has_pixels() const { return !pixels.empty(); }
  [[nodiscard]] std::size_t offset(int x, int y) const {
    return 3 * (static_cast<std::size_t>(y) * width + x);
  }
};

struct TrackSample {
  double t{0};  // frame index; fractional after resampling
  double x{0};
  double y{0};

  friend bool operator==(const TrackSample&, const TrackSample&) = default;
};

/// Trace of one tracked keypoint in image coordinates (y grows downward).
struct KeypointTrack {
  int keypoint_id{0};
  std::vector<TrackSample> samples;

  [[nodiscard]] std::vector<Vec2> points() const;

  friend bool operator==(const KeypointTrack&, const KeypointTrack&) = default;
};

struct Trajectory {
  std::vector<KeypointTrack> tracks;
  int point_of_interest{0};

  /// Track whose keypoint_id equals point_of_interest; throws
  /// missing-poi-track when absent.
  [[nodiscard]] const KeypointTrack& poi_track() const;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

struct Region {
  enum class Kind { kBox, kPolygon };
  Kind kind{Kind::kBox};
  double x0{0}, y0{0}, x1{0}, y1{0};  // box corners, x0<x1 and y0<y1
  std::vector<Vec2> points;           // polygon vertices (kPolygon)

  [[nodiscard]] double area() const;
  [[nodiscard]] Vec2 centroid() const;
  [[nodiscard]] bool contains(Vec2 p) const;  // strict interior
  /// Distance from p to the region; 0 when inside.
  [[nodiscard]] double distance(Vec2 p) const;
  [[nodiscard]] bool segment_intersects(Vec2 a, Vec2 b) const;

  friend bool operator==(const Region&, const Region&) = default;
};

struct SceneObject {
  std::string label;
  Region region;

  friend bool operator==(const SceneObject&, const SceneObject&) = default;
};

struct Episode {
  std::string id;
  std::string task_instruction;
  std::string motion_description;
  std::string category;
  std::vector<SceneObject> scene;
  Trajectory trajectory;
  std::vector<Frame> frames;   // loaded from frames_dir when present
  std::string frames_dir;      // optional path to frame_%06d.png files
  std::string heading;         // maps "forward"; empty = "up"
  std::optional<double> time_dt;  // carried as metadata only
};

struct Violation {
  std::string code;    // e.g. "track-too-short", "missing-poi-track"
  std::string detail;
};

// ---- Operations -----------------------------------------------------------

/// Resamples a track to n samples at equal arc-length spacing. Endpoints are
/// preserved exactly; t values interpolate linearly along arc length.
KeypointTrack resample_arclength(const KeypointTrack& track, int n);

/// Tight axis-aligned bounds over all samples.
BBox bounding_box(const KeypointTrack& track);

/// Checks every type invariant; returns one violation per failure. Never
/// throws: violations are data.
std::vector<Violation> validate_episode(const Episode& episode);

// ---- Episode JSON (UTF-8, one episode per file; corpus = directory) -------

Episode episode_from_json_text(const std::string& text);
std::string episode_to_json_text(const Episode& episode);

Episode load_episode(const std::filesystem::path& file);
void save_episode(const Episode& episode, const std::filesystem::path& file);

/// Loads every *.json file in the directory, sorted by episode id.
std::vector<Episode> load_corpus(const std::filesystem::path& dir);

}  // namespace motif
