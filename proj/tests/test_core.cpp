// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "motif/core.hpp"
#include "motif/error.hpp"
#include "motif/generators.hpp"

using namespace motif;

namespace {

KeypointTrack make_track(std::initializer_list<Vec2> points) {
  KeypointTrack track;
  int t = 0;
  for (const Vec2& p : points) {
    track.samples.push_back({static_cast<double>(t++), p.x, p.y});
  }
  return track;
}

Episode make_valid_episode() {
  Episode ep;
  ep.id = "ep-0";
  ep.task_instruction = "draw the path";
  ep.motion_description = "move upward";
  ep.category = "draw path";
  ep.trajectory.tracks.push_back(make_track({{0, 0}, {0, -10}}));
  ep.trajectory.point_of_interest = 0;
  return ep;
}

double track_arclength(const KeypointTrack& track) {
  const auto pts = track.points();
  return polyline_length(pts);
}

}  // namespace

TEST_CASE("resample_arclength interpolates a straight segment") {
  const KeypointTrack track = make_track({{0, 0}, {10, 0}});
  const KeypointTrack out = resample_arclength(track, 3);
  REQUIRE(out.samples.size() == 3);
  CHECK(out.samples[0].x == 0);
  CHECK(out.samples[1].x == doctest::Approx(5).epsilon(1e-12));
  CHECK(out.samples[1].y == doctest::Approx(0).epsilon(1e-12));
  CHECK(out.samples[2].x == 10);
}

TEST_CASE("resample_arclength is the identity on uniform tracks") {
  const KeypointTrack track = make_track({{0, 0}, {3, 4}, {6, 8}});
  const KeypointTrack out = resample_arclength(track, 3);
  CHECK(out == track);
}

TEST_CASE("resample_arclength walks the L-path by cumulative arc length") {
  // Arc lengths 0,10,20; targets every 5 units.
  const KeypointTrack track = make_track({{0, 0}, {10, 0}, {10, 10}});
  const KeypointTrack out = resample_arclength(track, 5);
  REQUIRE(out.samples.size() == 5);
  const Vec2 expected[5] = {{0, 0}, {5, 0}, {10, 0}, {10, 5}, {10, 10}};
  for (int i = 0; i < 5; ++i) {
    CHECK(out.samples[i].x == doctest::Approx(expected[i].x).epsilon(1e-12));
    CHECK(out.samples[i].y == doctest::Approx(expected[i].y).epsilon(1e-12));
  }
}

TEST_CASE("resample_arclength rejects bad input") {
  const KeypointTrack track = make_track({{0, 0}, {10, 0}});
  CHECK_THROWS_WITH_AS(resample_arclength(track, 1), doctest::Contains("n >= 2"),
                       Error);
  const KeypointTrack zero = make_track({{1, 1}, {1, 1}});
  try {
    resample_arclength(zero, 4);
    FAIL("expected degenerate-path");
  } catch (const Error& e) {
    CHECK(e.code() == "degenerate-path");
  }
}

TEST_CASE("resample_arclength preserves arc length and is idempotent") {
  // A corner strictly between sample targets is cut by any n-point polyline,
  // so these invariants are only satisfiable when every vertex lands on a
  // target. The paths here make segment i span take_i equal steps of one
  // shared length, which puts each vertex at an exact target position.
  gen::RandomStream rng(7);
  constexpr int kSamples = 64;
  for (int round = 0; round < 25; ++round) {
    KeypointTrack track;
    Vec2 cursor{rng.uniform() * 100, rng.uniform() * 100};
    track.samples.push_back({0, cursor.x, cursor.y});
    const double step = 0.5 + rng.uniform() * 2.0;
    int steps_left = kSamples - 1;
    int t = 1;
    while (steps_left > 0) {
      const int take = 1 + static_cast<int>(rng.next_index(
                               static_cast<std::uint64_t>(steps_left)));
      const double angle = rng.uniform() * 6.283185307179586;
      cursor = cursor + Vec2{std::cos(angle), std::sin(angle)} * (step * take);
      track.samples.push_back({static_cast<double>(t++), cursor.x, cursor.y});
      steps_left -= take;
    }
    const KeypointTrack once = resample_arclength(track, kSamples);
    const KeypointTrack twice = resample_arclength(once, kSamples);
    CHECK(track_arclength(once) ==
          doctest::Approx(track_arclength(track)).epsilon(1e-9));
    REQUIRE(twice.samples.size() == once.samples.size());
    for (std::size_t i = 0; i < once.samples.size(); ++i) {
      CHECK(twice.samples[i].x == doctest::Approx(once.samples[i].x).epsilon(1e-9));
      CHECK(twice.samples[i].y == doctest::Approx(once.samples[i].y).epsilon(1e-9));
    }
    const BBox box = bounding_box(track);
    for (const TrackSample& s : once.samples) {
      CHECK(box.contains({s.x, s.y}));
    }
  }
}

TEST_CASE("bounding_box basics") {
  CHECK(bounding_box(make_track({{2, 3}, {5, 7}})) == BBox{2, 3, 5, 7});
  CHECK(bounding_box(make_track({{4, 4}, {4, 4}})) == BBox{4, 4, 4, 4});

  KeypointTrack circle;
  for (int i = 0; i < 100; ++i) {
    const double a = 2 * std::numbers::pi * i / 100;
    circle.samples.push_back({static_cast<double>(i),
                              0.5 + 0.5 * std::cos(a),
                              0.5 + 0.5 * std::sin(a)});
  }
  const BBox box = bounding_box(circle);
  // Sample extrema land within one sampling step of the analytic bounds.
  CHECK(box.min_x == doctest::Approx(0).epsilon(1e-3));
  CHECK(box.min_y == doctest::Approx(0).epsilon(1e-3));
  CHECK(box.max_x == doctest::Approx(1).epsilon(1e-3));
  CHECK(box.max_y == doctest::Approx(1).epsilon(1e-3));
}

TEST_CASE("validate_episode flags invariant violations") {
  CHECK(validate_episode(make_valid_episode()).empty());

  Episode short_track = make_valid_episode();
  short_track.trajectory.tracks[0].samples.resize(1);
  bool found = false;
  for (const Violation& v : validate_episode(short_track)) {
    if (v.code == "track-too-short") found = true;
  }
  CHECK(found);

  Episode bad_poi = make_valid_episode();
  bad_poi.trajectory.point_of_interest = 9;
  found = false;
  for (const Violation& v : validate_episode(bad_poi)) {
    if (v.code == "missing-poi-track") found = true;
  }
  CHECK(found);

  Episode bad_region = make_valid_episode();
  bad_region.scene.push_back({"laptop", Region{Region::Kind::kBox, 5, 5, 5, 9, {}}});
  found = false;
  for (const Violation& v : validate_episode(bad_region)) {
    if (v.code == "degenerate-region") found = true;
  }
  CHECK(found);
}

TEST_CASE("episode JSON round trip") {
  Episode ep = make_valid_episode();
  ep.scene.push_back({"laptop", Region{Region::Kind::kBox, 10, 20, 30, 40, {}}});
  ep.scene.push_back(
      {"walkway",
       Region{Region::Kind::kPolygon, 0, 0, 0, 0, {{0, 0}, {8, 1}, {4, 9}}}});
  ep.heading = "up";
  ep.time_dt = 1.5;
  const std::string text = episode_to_json_text(ep);
  const Episode back = episode_from_json_text(text);
  CHECK(back.id == ep.id);
  CHECK(back.task_instruction == ep.task_instruction);
  CHECK(back.motion_description == ep.motion_description);
  CHECK(back.category == ep.category);
  CHECK(back.scene.size() == 2);
  CHECK(back.scene[0].label == "laptop");
  CHECK(back.scene[0].region == ep.scene[0].region);
  CHECK(back.scene[1].region == ep.scene[1].region);
  CHECK(back.trajectory == ep.trajectory);
  CHECK(back.heading == "up");
  CHECK(back.time_dt == 1.5);
}

TEST_CASE("region geometry") {
  const Region box{Region::Kind::kBox, 0, 0, 10, 10, {}};
  CHECK(box.contains({5, 5}));
  CHECK_FALSE(box.contains({10, 5}));  // boundary is outside
  CHECK(box.distance({5, 5}) == 0);
  CHECK(box.distance({13, 5}) == doctest::Approx(3));
  CHECK(box.centroid() == Vec2{5, 5});
  CHECK(box.segment_intersects({-5, 5}, {15, 5}));
  CHECK_FALSE(box.segment_intersects({-5, -5}, {15, -5}));

  Region tri{Region::Kind::kPolygon, 0, 0, 0, 0, {{0, 0}, {10, 0}, {0, 10}}};
  CHECK(tri.contains({2, 2}));
  CHECK_FALSE(tri.contains({8, 8}));
  CHECK(tri.area() == doctest::Approx(50));
}
