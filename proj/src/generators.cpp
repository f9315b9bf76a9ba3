// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#include "motif/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "motif/error.hpp"

namespace motif::gen {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Vec2> linspace(Vec2 a, Vec2 b, int n) {
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = n > 1 ? static_cast<double>(i) / (n - 1) : 0.0;
    pts.push_back(a + (b - a) * t);
  }
  if (n > 1) pts.back() = b;
  return pts;
}

Trajectory make_trajectory(std::vector<Vec2> points) {
  KeypointTrack track;
  track.keypoint_id = 0;
  track.samples.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    track.samples.push_back(
        {static_cast<double>(i), points[i].x, points[i].y});
  }
  Trajectory traj;
  traj.tracks.push_back(std::move(track));
  traj.point_of_interest = 0;
  return traj;
}

void apply_noise(std::vector<Vec2>& points, const GeneratorParams& params) {
  if (params.noise_sigma <= 0 || points.size() < 3) return;
  RandomStream rng(params.seed);
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    points[i].x += params.noise_sigma * rng.gaussian();
    points[i].y += params.noise_sigma * rng.gaussian();
  }
}

Generated finish(std::vector<Vec2> points, dsl::MotionAst ast,
                 const GeneratorParams& params) {
  apply_noise(points, params);
  return {make_trajectory(std::move(points)), std::move(ast)};
}

dsl::MotionAst single_step(dsl::Clause primary,
                           std::vector<dsl::Clause> modifiers = {}) {
  dsl::MotionAst ast;
  ast.steps.push_back({std::move(primary), std::move(modifiers)});
  return ast;
}

// Shaking: one leg of n samples repeated `frequency` times with every odd
// leg reversed, concatenated without deduplication (the junction sample
// appears twice; consumers tolerate repeated consecutive samples).
Generated shaking(const GeneratorParams& params, Vec2 leg_offset,
                  dsl::Axis axis) {
  if (params.amplitude <= 0) raise("invalid-argument", "amplitude must be > 0");
  if (params.frequency < 1) raise("invalid-argument", "frequency must be >= 1");
  if (params.n < 2) raise("invalid-argument", "n must be >= 2");
  const std::vector<Vec2> leg =
      linspace(params.start, params.start + leg_offset, params.n);
  std::vector<Vec2> points;
  points.reserve(leg.size() * static_cast<std::size_t>(params.frequency));
  for (int i = 0; i < params.frequency; ++i) {
    if (i % 2 == 0) {
      points.insert(points.end(), leg.begin(), leg.end());
    } else {
      points.insert(points.end(), leg.rbegin(), leg.rend());
    }
  }
  return finish(std::move(points),
                single_step(dsl::Oscillate{axis, params.frequency}), params);
}

}  // namespace

double RandomStream::gaussian() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  double u1 = uniform();
  while (u1 <= 1e-300) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * kPi * u2);
  return r * std::cos(2.0 * kPi * u2);
}

Vec2 direction_vector(dsl::Direction d, dsl::Direction forward) {
  using dsl::Direction;
  constexpr double kDiag = 0.7071067811865476;
  switch (d) {
    case Direction::kUp: return {0, -1};
    case Direction::kDown: return {0, 1};
    case Direction::kLeft: return {-1, 0};
    case Direction::kRight: return {1, 0};
    case Direction::kUpLeft: return {-kDiag, -kDiag};
    case Direction::kUpRight: return {kDiag, -kDiag};
    case Direction::kDownLeft: return {-kDiag, kDiag};
    case Direction::kDownRight: return {kDiag, kDiag};
    case Direction::kForward:
      return forward == Direction::kForward ? Vec2{0, -1}
                                            : direction_vector(forward);
  }
  return {0, -1};
}

dsl::Direction classify_direction(Vec2 displacement) {
  using dsl::Direction;
  if (norm(displacement) <= 0) {
    raise("degenerate-path", "cannot classify a zero displacement");
  }
  const double angle = std::atan2(displacement.y, displacement.x);
  // Sector index around the compass, 45 degrees each, centered on the axes.
  const int sector =
      static_cast<int>(std::lround(angle / (kPi / 4)) + 8) % 8;
  static constexpr Direction kByIndex[8] = {
      Direction::kRight,    Direction::kDownRight, Direction::kDown,
      Direction::kDownLeft, Direction::kLeft,      Direction::kUpLeft,
      Direction::kUp,       Direction::kUpRight};
  return kByIndex[sector];
}

Generated gen_line(const GeneratorParams& params) {
  if (params.n < 2) raise("invalid-argument", "n must be >= 2");
  if (norm(params.end - params.start) <= 0) {
    raise("degenerate-path", "line start equals end");
  }
  return finish(linspace(params.start, params.end, params.n),
                single_step(dsl::Translate{
                    classify_direction(params.end - params.start)}),
                params);
}

Generated gen_vertical_shaking(const GeneratorParams& params) {
  return shaking(params, {0, params.amplitude}, dsl::Axis::kVertical);
}

Generated gen_horizontal_shaking(const GeneratorParams& params) {
  return shaking(params, {params.amplitude, 0}, dsl::Axis::kHorizontal);
}

Generated gen_circle(const GeneratorParams& params) {
  if (params.radius <= 0) raise("invalid-argument", "radius must be > 0");
  if (params.count < 1) raise("invalid-argument", "count must be >= 1");
  if (params.n < 3) raise("invalid-argument", "need n >= 3 per revolution");
  // Increasing angle with (cos, sin) runs clockwise as seen on screen
  // (y grows downward).
  const double sign = params.turn == dsl::TurnDirection::kClockwise ? 1 : -1;
  const int total = params.count * params.n;
  std::vector<Vec2> points;
  points.reserve(static_cast<std::size_t>(total) + 1);
  for (int k = 0; k <= total; ++k) {
    const double theta = sign * 2.0 * kPi * k / params.n;
    points.push_back(params.center +
                     Vec2{std::cos(theta), std::sin(theta)} * params.radius);
  }
  return finish(std::move(points),
                single_step(dsl::Rotate{params.turn, params.count}), params);
}

Generated gen_arc(const GeneratorParams& params) {
  if (params.n < 2) raise("invalid-argument", "n must be >= 2");
  const Vec2 chord = params.end - params.start;
  if (norm(chord) <= 0) raise("degenerate-path", "arc start equals end");
  // Convex bulges to the left of the directed chord (image coordinates).
  const Vec2 normal = params.convexity == dsl::Convexity::kConvex
                          ? left_normal(chord)
                          : right_normal(chord);
  std::vector<Vec2> points;
  points.reserve(static_cast<std::size_t>(params.n));
  for (int i = 0; i < params.n; ++i) {
    const double t = static_cast<double>(i) / (params.n - 1);
    points.push_back(params.start + chord * t +
                     normal * (std::sin(kPi * t) * params.bulge));
  }
  points.back() = params.end;
  return finish(std::move(points),
                single_step(dsl::CurveShape{classify_direction(chord),
                                            params.convexity}),
                params);
}

Generated gen_oscillating_translate(const GeneratorParams& params) {
  if (params.amplitude <= 0) raise("invalid-argument", "amplitude must be > 0");
  if (params.frequency < 1) raise("invalid-argument", "frequency must be >= 1");
  if (params.length <= 0) raise("invalid-argument", "length must be > 0");
  const Vec2 travel = direction_vector(params.direction) * params.length;
  Vec2 axis_vec;
  switch (params.axis) {
    case dsl::Axis::kHorizontal: axis_vec = {1, 0}; break;
    case dsl::Axis::kVertical: axis_vec = {0, 1}; break;
    case dsl::Axis::kDiagonal: {
      constexpr double kDiag = 0.7071067811865476;
      axis_vec = {kDiag, kDiag};
      break;
    }
    case dsl::Axis::kBackAndForth:
      axis_vec = normalized(travel);
      break;
  }
  // Zigzag wave through (0,0), alternating peaks +-1/2 at (2j-1)/(2*peaks)
  // and back to (1,0). `frequency` swings between peaks, so the analyzer's
  // swing counter reads exactly `frequency`.
  const int peaks = params.frequency + 1;
  std::vector<double> node_t{0.0}, node_v{0.0};
  for (int j = 1; j <= peaks; ++j) {
    node_t.push_back((2.0 * j - 1.0) / (2.0 * peaks));
    node_v.push_back(j % 2 == 1 ? 0.5 : -0.5);
  }
  node_t.push_back(1.0);
  node_v.push_back(0.0);

  const int total = std::max(params.n * peaks, 4 * peaks);
  std::vector<Vec2> points;
  points.reserve(static_cast<std::size_t>(total) + 1);
  std::size_t k = 0;
  for (int i = 0; i <= total; ++i) {
    const double t = static_cast<double>(i) / total;
    while (k + 2 < node_t.size() && node_t[k + 1] < t) ++k;
    const double span = node_t[k + 1] - node_t[k];
    const double u = span > 0 ? (t - node_t[k]) / span : 0.0;
    const double m = node_v[k] + (node_v[k + 1] - node_v[k]) * u;
    points.push_back(params.start + travel * t +
                     axis_vec * (m * params.amplitude));
  }
  points.front() = params.start;
  points.back() = params.start + travel;
  return finish(std::move(points),
                single_step(dsl::Translate{params.direction},
                            {dsl::Oscillate{params.axis, params.frequency}}),
                params);
}

Generated gen_detour(const GeneratorParams& params,
                     const SceneObject& obstacle) {
  if (params.n < 4) raise("invalid-argument", "detour needs n >= 4");
  const Vec2 chord = params.end - params.start;
  const double chord_len = norm(chord);
  if (chord_len <= 0) raise("degenerate-path", "detour start equals end");
  if (!obstacle.region.segment_intersects(params.start, params.end)) {
    raise("invalid-argument",
          "chord does not cross the obstacle; a detour is vacuous");
  }
  if (obstacle.region.contains(params.start) ||
      obstacle.region.contains(params.end)) {
    raise("infeasible", "detour endpoint lies inside the obstacle");
  }
  const Vec2 d = normalized(chord);
  const Vec2 side_n = params.side == dsl::Side::kRight ? right_normal(d)
                                                       : left_normal(d);

  std::vector<Vec2> corners;
  if (obstacle.region.kind == Region::Kind::kBox) {
    corners = {{obstacle.region.x0, obstacle.region.y0},
               {obstacle.region.x1, obstacle.region.y0},
               {obstacle.region.x1, obstacle.region.y1},
               {obstacle.region.x0, obstacle.region.y1}};
  } else {
    corners = obstacle.region.points;
  }
  double s_min = chord_len, s_max = 0, lat_max = 0;
  for (const Vec2& c : corners) {
    const Vec2 rel = c - params.start;
    s_min = std::min(s_min, dot(rel, d));
    s_max = std::max(s_max, dot(rel, d));
    lat_max = std::max(lat_max, dot(rel, side_n));
  }
  const double offset = lat_max + params.clearance;
  if (offset > 1.0) raise("infeasible", "obstacle covers the viewport");

  const double ramp = 1.7 * offset;  // keeps ramp headings well under 60 deg
  auto at = [&](double s, double lat) { return params.start + d * s + side_n * lat; };
  std::vector<Vec2> waypoints;
  waypoints.push_back(params.start);
  if (s_min - ramp > 1e-9) waypoints.push_back(at(s_min - ramp, 0));
  waypoints.push_back(at(s_min, offset));
  waypoints.push_back(at(s_max, offset));
  if (s_max + ramp < chord_len - 1e-9) waypoints.push_back(at(s_max + ramp, 0));
  waypoints.push_back(params.end);

  std::vector<Vec2> points = resample_polyline(waypoints, params.n);
  for (const Vec2& p : points) {
    if (obstacle.region.contains(p)) {
      raise("infeasible", "detour cannot clear the obstacle");
    }
  }
  return finish(std::move(points),
                single_step(dsl::Translate{classify_direction(chord)},
                            {dsl::Detour{obstacle.label, params.side}}),
                params);
}

Generated gen_composite(std::span<const Generated> legs) {
  if (legs.empty()) raise("invalid-argument", "composite needs >= 1 leg");
  std::vector<Vec2> points;
  dsl::MotionAst ast;
  for (const Generated& leg : legs) {
    const std::vector<Vec2> leg_pts = leg.trajectory.poi_track().points();
    points.insert(points.end(), leg_pts.begin(), leg_pts.end());
    for (const dsl::Step& step : leg.ast.steps) ast.steps.push_back(step);
  }
  return {make_trajectory(std::move(points)), std::move(ast)};
}

Generated gen_line_sequence(
    Vec2 start, std::span<const std::pair<dsl::Direction, double>> legs,
    int n_per_leg, const GeneratorParams& base) {
  if (legs.empty()) raise("invalid-argument", "sequence needs >= 1 leg");
  std::vector<Generated> parts;
  Vec2 cursor = start;
  for (const auto& [direction, length] : legs) {
    GeneratorParams p = base;
    p.n = n_per_leg;
    p.start = cursor;
    p.end = cursor + direction_vector(direction) * length;
    p.noise_sigma = 0;  // noise applied once at the end
    parts.push_back(gen_line(p));
    cursor = p.end;
  }
  Generated combined = gen_composite(parts);
  std::vector<Vec2> points = combined.trajectory.poi_track().points();
  GeneratorParams noise = base;
  apply_noise(points, noise);
  return {make_trajectory(std::move(points)), std::move(combined.ast)};
}

std::vector<Episode> synthetic_corpus(int count, std::uint64_t seed,
                                      double noise_sigma, double scale) {
  if (count < 1) raise("invalid-argument", "corpus needs >= 1 episode");
  std::vector<Episode> corpus;
  corpus.reserve(static_cast<std::size_t>(count));
  RandomStream rng(seed);
  constexpr dsl::Direction kDirs[8] = {
      dsl::Direction::kUp,        dsl::Direction::kDown,
      dsl::Direction::kLeft,      dsl::Direction::kRight,
      dsl::Direction::kUpLeft,    dsl::Direction::kUpRight,
      dsl::Direction::kDownLeft,  dsl::Direction::kDownRight};
  const char* kObstacles[4] = {"box", "manhole", "table", "cone"};

  for (int i = 0; i < count; ++i) {
    GeneratorParams p;
    p.noise_sigma = noise_sigma;
    p.seed = seed * 1000003u + static_cast<std::uint64_t>(i);
    EpisodeOptions opts;
    opts.scale = scale;
    Generated g;
    switch (i % 8) {
      case 0: {  // line
        const dsl::Direction dir = kDirs[i / 8 % 8];
        const double len = 0.4 + rng.uniform() * 0.3;
        p.start = Vec2{0.5, 0.5} - direction_vector(dir) * (len / 2);
        p.end = Vec2{0.5, 0.5} + direction_vector(dir) * (len / 2);
        p.n = 16 + static_cast<int>(rng.next_index(16));
        g = gen_line(p);
        opts.task = "draw the path";
        opts.category = "draw path";
        break;
      }
      case 1: {  // vertical shaking
        p.start = {0.3 + rng.uniform() * 0.4, 0.3 + rng.uniform() * 0.2};
        p.amplitude = 0.08 + rng.uniform() * 0.12;
        p.frequency = 2 + static_cast<int>(rng.next_index(4));
        p.n = 8 + static_cast<int>(rng.next_index(8));
        g = gen_vertical_shaking(p);
        opts.task = "shake the bottle";
        opts.category = "shake";
        break;
      }
      case 2: {  // horizontal shaking
        p.start = {0.3 + rng.uniform() * 0.2, 0.3 + rng.uniform() * 0.4};
        p.amplitude = 0.08 + rng.uniform() * 0.12;
        p.frequency = 2 + static_cast<int>(rng.next_index(4));
        p.n = 8 + static_cast<int>(rng.next_index(8));
        g = gen_horizontal_shaking(p);
        opts.task = "shake the bottle";
        opts.category = "shake";
        break;
      }
      case 3: {  // circle
        p.center = {0.45 + rng.uniform() * 0.1, 0.45 + rng.uniform() * 0.1};
        p.radius = 0.15 + rng.uniform() * 0.15;
        p.count = 1 + static_cast<int>(rng.next_index(3));
        p.turn = (i / 8) % 2 == 0 ? dsl::TurnDirection::kClockwise
                                  : dsl::TurnDirection::kCounterClockwise;
        p.n = 48 + static_cast<int>(rng.next_index(32));
        g = gen_circle(p);
        opts.task = "stir the pot";
        opts.category = "stir";
        break;
      }
      case 4: {  // arc
        const dsl::Direction dir = kDirs[(i / 8 + 3) % 8];
        const double len = 0.4 + rng.uniform() * 0.25;
        p.start = Vec2{0.5, 0.5} - direction_vector(dir) * (len / 2);
        p.end = Vec2{0.5, 0.5} + direction_vector(dir) * (len / 2);
        p.bulge = 0.1 + rng.uniform() * 0.1;
        p.convexity = (i / 8) % 2 == 0 ? dsl::Convexity::kConvex
                                       : dsl::Convexity::kConcave;
        p.n = 32 + static_cast<int>(rng.next_index(16));
        g = gen_arc(p);
        opts.task = "hand over the cup";
        opts.category = "handover";
        break;
      }
      case 5: {  // two-leg composite, orthogonal directions
        constexpr std::pair<dsl::Direction, dsl::Direction> kPairs[4] = {
            {dsl::Direction::kDown, dsl::Direction::kLeft},
            {dsl::Direction::kUp, dsl::Direction::kRight},
            {dsl::Direction::kRight, dsl::Direction::kDown},
            {dsl::Direction::kLeft, dsl::Direction::kUp}};
        const auto [first, second] = kPairs[i / 8 % 4];
        const std::pair<dsl::Direction, double> legs[2] = {
            {first, 0.3 + rng.uniform() * 0.1},
            {second, 0.3 + rng.uniform() * 0.1}};
        g = gen_line_sequence({0.5, 0.3}, legs,
                              12 + static_cast<int>(rng.next_index(8)), p);
        opts.task = "pick up the cup and set it down";
        opts.category = "pick and place";
        break;
      }
      case 6: {  // detour around an obstacle
        const bool vertical = (i / 8) % 2 == 0;
        const Vec2 center{0.4 + rng.uniform() * 0.2,
                          0.4 + rng.uniform() * 0.2};
        const double half = 0.08 + rng.uniform() * 0.04;
        const SceneObject obstacle{
            kObstacles[i / 8 % 4],
            Region{Region::Kind::kBox, center.x - half, center.y - half,
                   center.x + half, center.y + half, {}}};
        p.start = vertical ? Vec2{center.x, 0.92} : Vec2{0.08, center.y};
        p.end = vertical ? Vec2{center.x, 0.08} : Vec2{0.92, center.y};
        p.side = (i / 16) % 2 == 0 ? dsl::Side::kRight : dsl::Side::kLeft;
        p.clearance = 0.05 + rng.uniform() * 0.03;
        p.n = 48 + static_cast<int>(rng.next_index(16));
        g = gen_detour(p, obstacle);
        opts.task = "deliver the package";
        opts.category = "navigation";
        opts.scene.push_back(obstacle);
        break;
      }
      default: {  // oscillating translation, axis off the travel direction
        struct Combo {
          dsl::Direction dir;
          dsl::Axis axis;
        };
        constexpr Combo kCombos[6] = {
            {dsl::Direction::kLeft, dsl::Axis::kVertical},
            {dsl::Direction::kRight, dsl::Axis::kVertical},
            {dsl::Direction::kDown, dsl::Axis::kHorizontal},
            {dsl::Direction::kUp, dsl::Axis::kHorizontal},
            {dsl::Direction::kUpRight, dsl::Axis::kDiagonal},
            {dsl::Direction::kDownLeft, dsl::Axis::kDiagonal}};
        const Combo combo = kCombos[i / 8 % 6];
        p.direction = combo.dir;
        p.axis = combo.axis;
        p.length = 0.5 + rng.uniform() * 0.2;
        p.amplitude = 0.06 + rng.uniform() * 0.06;
        p.frequency = 2 + static_cast<int>(rng.next_index(4));
        p.n = 12 + static_cast<int>(rng.next_index(8));
        p.start = Vec2{0.5, 0.5} - direction_vector(combo.dir) * (p.length / 2);
        g = gen_oscillating_translate(p);
        opts.task = "spread the condiment";
        opts.category = "spread condiment";
        break;
      }
    }
    char id[16];
    std::snprintf(id, sizeof id, "ep-%04d", i);
    corpus.push_back(to_episode(id, g, opts));
  }
  return corpus;
}

Episode to_episode(const std::string& id, const Generated& generated,
                   const EpisodeOptions& options) {
  Episode ep;
  ep.id = id;
  ep.task_instruction = options.task;
  ep.motion_description = dsl::format_description(generated.ast);
  ep.category = options.category;
  ep.heading = options.heading;
  ep.trajectory = generated.trajectory;
  for (KeypointTrack& track : ep.trajectory.tracks) {
    for (TrackSample& s : track.samples) {
      s.x *= options.scale;
      s.y *= options.scale;
    }
  }
  for (const SceneObject& obj : options.scene) {
    SceneObject scaled = obj;
    scaled.region.x0 *= options.scale;
    scaled.region.y0 *= options.scale;
    scaled.region.x1 *= options.scale;
    scaled.region.y1 *= options.scale;
    for (Vec2& p : scaled.region.points) p = p * options.scale;
    ep.scene.push_back(std::move(scaled));
  }
  return ep;
}

}  // namespace motif::gen
