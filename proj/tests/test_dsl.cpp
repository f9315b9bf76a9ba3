// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#include <string>
#include <vector>

#include <doctest.h>

#include "motif/dsl.hpp"
#include "motif/generators.hpp"

using namespace motif;
using namespace motif::dsl;

namespace {

// Every motion-description string shipped with the vocabulary. The parser
// must accept all of them; a failure here is a grammar regression.
const std::vector<std::string> kShippedDescriptions = {
    // navigation / draw path
    "move in the shortest path",
    "make a detour to the left and follow the walkway, avoiding moving over "
    "the grass",
    "make a detour to the right of the long table, avoiding collision with "
    "chairs",
    "make a triangular motion clockwise",
    "move upward and to the right",
    // shake
    "move up and down 4 times",
    "completely flip the object to the right and flip it back to its initial "
    "state",
    // pick and place
    "move downward and to the left",
    "move downward while getting farther from <obstacle>, then move to the "
    "left",
    // stir
    "make 2 circular motions counter-clockwise",
    "move upward, then move downward while making diagonal oscillations",
    // wipe
    "move to the right and move to the left, repeating this sequence 2 times",
    "move to the right, making diagonal oscillations",
    // open/close cabinet
    "move to the right",
    "move upward and to the left",
    // spread condiment
    "move to the left and to the right",
    "move to the left while making back and forth oscillations",
    // handover
    "move downward and to the right following a concave curve",
    // brush hair
    "move downward while making horizontal oscillations",
    "make 5 strokes downward, increasing the starting height of each stroke",
    // tidy hair
    "move downward and to the right following a convex curve",
    "make a circular motion clockwise, move upward, then move downward and to "
    "the right",
    // style hair
    "move to the right shortly, then move to the left following a concave "
    "curve",
    "make a circular motion clockwise, gradually increasing the radius of the "
    "circle",
    // prompt-template example
    "move downward and farther from the laptop, then move to the left",
    // vocabulary building blocks
    "move upward",
    "move downward",
    "follow a convex curve",
    "make a circular motion clockwise",
    "move up and down",
    "move downward, making horizontal oscillations",
    "make a detour to the left of the table",
    // grounded-motion walkthrough rows
    "move downward, then move to the left",
    "move farther from the laptop, move downward, then move to the left",
    "move downward and to the left, passing over the laptop",
    "move over the laptop",
    "move downward, while making horizontal oscillations",
    "move downward, while making side-to-side movements",
    "move downward, while making vertical oscillations",
    "move to the left, while making vertical oscillations and alternating "
    "rotations",
    "move to the left, while making vertical oscillations",
    "move to the left, while making vertical shaking movements",
    "move to the left in a straight line",
    "make a detour to the right of the manhole",
    "move forward, making a detour to the right of the manhole",
    "move forward in the shortest path",
    "move forward in a straight line, moving over the manhole",
    // refinement walkthrough
    "move to the left while making vertical oscillations",
};

MotionAst ast_of(const std::string& text) { return parse_description(text); }

Step step(Clause primary, std::vector<Clause> modifiers = {}) {
  return Step{std::move(primary), std::move(modifiers)};
}

}  // namespace

TEST_CASE("parser totality over the shipped vocabulary") {
  for (const std::string& text : kShippedDescriptions) {
    CAPTURE(text);
    CHECK_NOTHROW(parse_description(text));
  }
}

TEST_CASE("sequencing with then and commas") {
  const MotionAst ast = ast_of("move downward, then move to the left");
  REQUIRE(ast.steps.size() == 2);
  CHECK(ast.steps[0] == step(Translate{Direction::kDown}));
  CHECK(ast.steps[1] == step(Translate{Direction::kLeft}));
}

TEST_CASE("while attaches simultaneous modifiers") {
  const MotionAst ast =
      ast_of("move to the left while making vertical oscillations");
  REQUIRE(ast.steps.size() == 1);
  CHECK(ast.steps[0] ==
        step(Translate{Direction::kLeft},
             {Oscillate{Axis::kVertical, std::nullopt}}));
}

TEST_CASE("counts bind to the nearest primitive, words or digits") {
  const MotionAst two = ast_of("make 2 circular motions counter-clockwise");
  REQUIRE(two.steps.size() == 1);
  CHECK(two.steps[0] == step(Rotate{TurnDirection::kCounterClockwise, 2}));
  CHECK(ast_of("make two circular motions counter-clockwise") == two);

  const MotionAst osc = ast_of("move up and down 4 times");
  CHECK(osc.steps[0] == step(Oscillate{Axis::kVertical, 4}));
}

TEST_CASE("grounding clause rides along a translation") {
  const MotionAst ast =
      ast_of("move downward and farther from the laptop, then move to the left");
  REQUIRE(ast.steps.size() == 2);
  CHECK(ast.steps[0] == step(Translate{Direction::kDown},
                             {DistanceTrend{"laptop", false}}));
  CHECK(ast.steps[1] == step(Translate{Direction::kLeft}));
}

TEST_CASE("diagonals compose, opposite pairs sequence") {
  CHECK(ast_of("move downward and to the left").steps[0] ==
        step(Translate{Direction::kDownLeft}));
  const MotionAst pair = ast_of("move to the left and to the right");
  REQUIRE(pair.steps.size() == 2);
  CHECK(pair.steps[0] == step(Translate{Direction::kLeft}));
  CHECK(pair.steps[1] == step(Translate{Direction::kRight}));
}

TEST_CASE("repeating this sequence wraps the preceding steps") {
  const MotionAst ast = ast_of(
      "move to the right and move to the left, repeating this sequence 2 "
      "times");
  REQUIRE(ast.steps.size() == 1);
  const auto* repeat = std::get_if<RepeatSequence>(&ast.steps[0].primary);
  REQUIRE(repeat != nullptr);
  CHECK(repeat->count == 2);
  REQUIRE(repeat->steps.size() == 2);
  CHECK(repeat->steps[0] == step(Translate{Direction::kRight}));
  CHECK(repeat->steps[1] == step(Translate{Direction::kLeft}));
}

TEST_CASE("strokes become a repeated translation") {
  const MotionAst ast = ast_of(
      "make 5 strokes downward, increasing the starting height of each stroke");
  REQUIRE(ast.steps.size() == 1);
  const auto* repeat = std::get_if<RepeatSequence>(&ast.steps[0].primary);
  REQUIRE(repeat != nullptr);
  CHECK(repeat->count == 5);
  REQUIRE(repeat->steps.size() == 1);
  CHECK(repeat->steps[0] == step(Translate{Direction::kDown}));
  REQUIRE(ast.steps[0].modifiers.size() == 1);
  CHECK(ast.steps[0].modifiers[0] ==
        Clause{Trend{TrendAttribute::kStartHeight, TrendDirection::kIncreasing}});
}

TEST_CASE("detours, avoidance and follow-path") {
  const MotionAst nav = ast_of(
      "make a detour to the left and follow the walkway, avoiding moving over "
      "the grass");
  REQUIRE(nav.steps.size() == 2);
  CHECK(nav.steps[0] == step(Detour{std::nullopt, Side::kLeft}));
  CHECK(nav.steps[1] == step(FollowPath{"walkway"}, {Avoid{"grass"}}));

  const MotionAst table = ast_of(
      "make a detour to the right of the long table, avoiding collision with "
      "chairs");
  CHECK(table.steps[0] ==
        step(Detour{"long table", Side::kRight}, {Avoid{"chairs"}}));
}

TEST_CASE("straight-line and shortest-path phrasing") {
  const MotionAst straight = ast_of("move to the left in a straight line");
  CHECK(straight.steps[0] ==
        step(Translate{Direction::kLeft}, {StraightLine{}}));
  const MotionAst shortest = ast_of("move in the shortest path");
  CHECK(shortest.steps[0] == step(StraightLine{}));
  const MotionAst forward =
      ast_of("move forward in a straight line, moving over the manhole");
  CHECK(forward.steps[0] == step(Translate{Direction::kForward},
                                 {StraightLine{}, MoveOver{"manhole"}}));
}

TEST_CASE("unobservable wrist rotations are parsed and kept") {
  const MotionAst ast = ast_of(
      "move to the left, while making vertical oscillations and alternating "
      "rotations");
  REQUIRE(ast.steps.size() == 1);
  REQUIRE(ast.steps[0].modifiers.size() == 2);
  CHECK(ast.steps[0].modifiers[0] ==
        Clause{Oscillate{Axis::kVertical, std::nullopt}});
  CHECK(ast.steps[0].modifiers[1] ==
        Clause{Unobservable{"alternating rotations"}});
}

TEST_CASE("parser errors carry a code and the offending span") {
  try {
    parse_description("");
    FAIL("expected invalid-argument");
  } catch (const Error& e) {
    CHECK(e.code() == "invalid-argument");
  }
  try {
    parse_description("move downward, then teleport somewhere");
    FAIL("expected unparseable-token");
  } catch (const Error& e) {
    CHECK(e.code() == "unparseable-token");
    CHECK(std::string(e.what()).find("teleport") != std::string::npos);
  }
}

TEST_CASE("format produces the canonical phrasing") {
  MotionAst up;
  up.steps.push_back(step(Translate{Direction::kUp}));
  CHECK(format_description(up) == "move upward");

  MotionAst circle;
  circle.steps.push_back(step(Rotate{TurnDirection::kClockwise, 1}));
  CHECK(format_description(circle) == "make a circular motion clockwise");
}

TEST_CASE("round trip of every shipped description is AST-stable") {
  for (const std::string& text : kShippedDescriptions) {
    CAPTURE(text);
    const MotionAst ast = parse_description(text);
    const std::string canonical = format_description(ast);
    CAPTURE(canonical);
    CHECK(parse_description(canonical) == ast);
  }
}

TEST_CASE("vocabulary data file matches the builtin table") {
  const Vocabulary from_file =
      Vocabulary::load(std::string(MOTIF_DATA_DIR) + "/vocabulary.txt");
  const Vocabulary& builtin = Vocabulary::builtin();
  REQUIRE(from_file.rules().size() == builtin.rules().size());
  for (std::size_t i = 0; i < builtin.rules().size(); ++i) {
    CHECK(from_file.rules()[i] == builtin.rules()[i]);
  }
}

// ---- property: parse(format(ast)) == ast -----------------------------------

namespace {

class AstSampler {
 public:
  explicit AstSampler(std::uint64_t seed) : rng_(seed) {}

  MotionAst ast() {
    MotionAst out;
    const int steps = 1 + static_cast<int>(rng_.next_index(3));
    for (int i = 0; i < steps; ++i) out.steps.push_back(random_step(true));
    return out;
  }

 private:
  gen::RandomStream rng_;

  int pick(int bound) { return static_cast<int>(rng_.next_index(bound)); }

  std::string object() {
    static const std::vector<std::string> names = {
        "laptop", "box", "long table", "manhole", "grass", "walkway"};
    return names[static_cast<std::size_t>(pick(static_cast<int>(names.size())))];
  }

  Direction direction() { return static_cast<Direction>(pick(9)); }

  Clause path_clause() {
    switch (pick(4)) {
      case 0: return Translate{direction()};
      case 1: {
        std::optional<Direction> dir;
        if (pick(4) != 0) dir = direction();
        return CurveShape{dir, pick(2) ? Convexity::kConvex : Convexity::kConcave};
      }
      case 2:
        return Rotate{pick(2) ? TurnDirection::kClockwise
                              : TurnDirection::kCounterClockwise,
                      1 + pick(4)};
      default: {
        std::optional<int> count;
        if (pick(2)) count = 1 + pick(4);
        return Oscillate{static_cast<Axis>(pick(4)), count};
      }
    }
  }

  Clause grounding_clause() {
    switch (pick(5)) {
      case 0: return MoveOver{object()};
      case 1: {
        std::optional<std::string> obj;
        if (pick(3) != 0) obj = object();
        return Detour{obj, pick(2) ? Side::kLeft : Side::kRight};
      }
      case 2: return DistanceTrend{object(), pick(2) == 0};
      case 3: return FollowPath{object()};
      default: return Avoid{object()};
    }
  }

  Clause modifier_clause() {
    switch (pick(8)) {
      case 0: return StraightLine{};
      case 1:
        return Trend{pick(2) ? TrendAttribute::kRadius
                             : TrendAttribute::kStartHeight,
                     pick(2) ? TrendDirection::kIncreasing
                             : TrendDirection::kDecreasing};
      case 2: return Unobservable{"alternating rotations"};
      case 3: case 4: return grounding_clause();
      default: return path_clause();
    }
  }

  Step random_step(bool allow_repeat) {
    Step out;
    if (allow_repeat && pick(6) == 0) {
      RepeatSequence repeat;
      repeat.count = 1 + pick(4);
      const int subs = 1 + pick(2);
      for (int i = 0; i < subs; ++i) repeat.steps.push_back(random_step(false));
      out.primary = std::move(repeat);
    } else if (pick(4) == 0) {
      out.primary = grounding_clause();
    } else {
      out.primary = path_clause();
    }
    const int mods = pick(3);
    for (int i = 0; i < mods; ++i) out.modifiers.push_back(modifier_clause());
    return out;
  }
};

}  // namespace

TEST_CASE("property: parse(format(ast)) == ast") {
  AstSampler sampler(20260808);
  for (int round = 0; round < 300; ++round) {
    const MotionAst ast = sampler.ast();
    const std::string text = format_description(ast);
    CAPTURE(text);
    MotionAst back;
    REQUIRE_NOTHROW(back = parse_description(text));
    CHECK(back == ast);
  }
}
