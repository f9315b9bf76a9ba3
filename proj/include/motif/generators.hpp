// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0
//
// Parametric synthetic-trajectory generators. Each generator returns the
// trajectory together with the motion description it realizes, which makes
// the pair a ground-truth oracle for the discriminator. Coordinates live in
// the unit square; to_episode scales them to pixels.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>

#include "motif/core.hpp"
#include "motif/dsl.hpp"

namespace motif::gen {

/// Seeded uniform/gaussian stream. Gaussian values come from an explicit
/// Box-Muller transform over mt19937_64 output, so identical seeds give
/// bit-identical trajectories on every platform.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  double uniform() {
    return static_cast<double>(engine_()) / 18446744073709551616.0;  // 2^64
  }

  double gaussian();

  std::uint64_t next_index(std::uint64_t bound) {
    return bound > 0 ? engine_() % bound : 0;
  }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

struct GeneratorParams {
  int n{16};                  // samples per leg (or per revolution)
  Vec2 start{0.0, 0.5};
  Vec2 end{0.5, 1.0};
  double amplitude{0.1};      // leg length / peak-to-peak offset
  int frequency{2};           // oscillation swings
  Vec2 center{0.5, 0.5};
  double radius{0.2};
  int count{1};               // revolutions
  dsl::TurnDirection turn{dsl::TurnDirection::kClockwise};
  dsl::Convexity convexity{dsl::Convexity::kConvex};
  double bulge{0.15};
  dsl::Direction direction{dsl::Direction::kLeft};
  dsl::Axis axis{dsl::Axis::kVertical};
  double length{0.5};         // travel distance for oscillating translation
  dsl::Side side{dsl::Side::kRight};
  double clearance{0.05};
  double noise_sigma{0};
  std::uint64_t seed{0};
  std::optional<double> time_dt;  // metadata only, never affects geometry
};

struct Generated {
  Trajectory trajectory;  // single keypoint track, unit-square coordinates
  dsl::MotionAst ast;
};

/// Unit vector for a description direction in image coordinates. "forward"
/// maps to up unless the caller overrides it.
Vec2 direction_vector(dsl::Direction d,
                      dsl::Direction forward = dsl::Direction::kUp);

/// 8-way classification of a displacement (sectors centered on the axes and
/// diagonals).
dsl::Direction classify_direction(Vec2 displacement);

Generated gen_line(const GeneratorParams& params);
Generated gen_vertical_shaking(const GeneratorParams& params);
Generated gen_horizontal_shaking(const GeneratorParams& params);
Generated gen_circle(const GeneratorParams& params);
Generated gen_arc(const GeneratorParams& params);

/// Linear travel from start along `direction` for `length`, with a zigzag
/// offset of `frequency` swings and peak-to-peak `amplitude` along `axis`.
Generated gen_oscillating_translate(const GeneratorParams& params);

/// Path from start to end around `obstacle` on the given side, clearing the
/// region by `clearance`. Requires the straight chord to cross the obstacle.
Generated gen_detour(const GeneratorParams& params, const SceneObject& obstacle);

/// Concatenates legs (plain concatenation, so junction samples appear
/// twice) and sequences their descriptions.
Generated gen_composite(std::span<const Generated> legs);

/// Sequential straight legs from `start`, one per (direction, length) pair.
Generated gen_line_sequence(
    Vec2 start, std::span<const std::pair<dsl::Direction, double>> legs,
    int n_per_leg, const GeneratorParams& base = {});

struct EpisodeOptions {
  double scale{512};
  std::string task{"draw the path"};
  std::string category{"draw path"};
  std::vector<SceneObject> scene;  // unit-square coords, scaled with the path
  std::string heading;
};

Episode to_episode(const std::string& id, const Generated& generated,
                   const EpisodeOptions& options = {});

/// Deterministic mixed corpus cycling through every generator family with
/// seeded parameter variety. Shared by the CLI's batch mode and the test
/// suites, so both talk about the same episodes.
std::vector<Episode> synthetic_corpus(int count, std::uint64_t seed,
                                      double noise_sigma = 0,
                                      double scale = 512);

}  // namespace motif::gen
