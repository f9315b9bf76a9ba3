// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "motif/loop.hpp"

using namespace motif;

namespace {

dsl::MotionAst ast(const std::string& text) {
  return dsl::parse_description(text);
}

}  // namespace

TEST_CASE("refine reproduces the two-turn walkthrough") {
  const LoopConfig cfg;
  const LoopTrace trace = refine(
      "sprinkle parsley on pizza",
      ast("move to the left while making vertical oscillations"), {}, cfg);
  REQUIRE(trace.turns.size() >= 2);
  CHECK(trace.turns[0].candidate.generator_name == "horizontal-shaking");
  CHECK(trace.turns[0].verdict.label == 0);
  CHECK(trace.terminated);
  CHECK(trace.reason == LoopTrace::Reason::kAccepted);
  CHECK(trace.turns.back().verdict.label == 1);
  CHECK(trace.turns.back().verdict.score >= cfg.theta_loop);
  CHECK(static_cast<int>(trace.turns.size()) <= 25);
}

TEST_CASE("a description matching the first family terminates at turn 1") {
  const LoopTrace trace =
      refine("shake the bottle", ast("move up and down 2 times"), {}, {});
  REQUIRE(trace.turns.size() == 1);
  CHECK(trace.turns[0].candidate.generator_name == "vertical-shaking");
  CHECK(trace.reason == LoopTrace::Reason::kAccepted);
}

TEST_CASE("budget exhaustion is reported") {
  LoopConfig cfg;
  cfg.budget = 1;
  const LoopTrace trace = refine(
      "sprinkle parsley on pizza",
      ast("move to the left while making vertical oscillations"), {}, cfg);
  CHECK(trace.turns.size() == 1);
  CHECK(trace.terminated);
  CHECK(trace.reason == LoopTrace::Reason::kBudgetExhausted);
}

TEST_CASE("acceptance is sound: re-running the final candidate reproduces it") {
  const LoopConfig cfg;
  const LoopTrace trace = refine(
      "stir the pot", ast("make 2 circular motions counter-clockwise"), {},
      cfg);
  REQUIRE(trace.terminated);
  REQUIRE(trace.reason == LoopTrace::Reason::kAccepted);
  const LoopTurn& last = trace.turns.back();
  REQUIRE(last.candidate.generator_name == "circle");
  const gen::Generated again = gen::gen_circle(last.candidate.params);
  const Verdict verdict = discriminate(
      again.trajectory, {}, ast("make 2 circular motions counter-clockwise"),
      cfg.analyzer);
  CHECK(verdict.score >= cfg.theta_loop);
}

TEST_CASE("refine is deterministic") {
  const dsl::MotionAst request =
      ast("move to the left while making vertical oscillations");
  const LoopTrace a = refine("t", request, {}, {});
  const LoopTrace b = refine("t", request, {}, {});
  REQUIRE(a.turns.size() == b.turns.size());
  for (std::size_t i = 0; i < a.turns.size(); ++i) {
    CHECK(a.turns[i].candidate.generator_name ==
          b.turns[i].candidate.generator_name);
    CHECK(a.turns[i].verdict.score == b.turns[i].verdict.score);
  }
}

TEST_CASE("every single-step expressible description converges within 25") {
  std::vector<std::string> descriptions;
  for (const char* dir :
       {"upward", "downward", "to the left", "to the right",
        "upward and to the left", "downward and to the right"}) {
    descriptions.push_back(std::string("move ") + dir);
  }
  for (int count : {2, 3, 4}) {
    descriptions.push_back("move up and down " + std::to_string(count) +
                           " times");
    descriptions.push_back("move side to side " + std::to_string(count) +
                           " times");
  }
  descriptions.push_back("make a circular motion clockwise");
  descriptions.push_back("make 2 circular motions counter-clockwise");
  descriptions.push_back(
      "move downward and to the right following a convex curve");
  descriptions.push_back(
      "move upward and to the left following a concave curve");
  descriptions.push_back(
      "move to the right while making vertical oscillations");
  descriptions.push_back(
      "move downward while making horizontal oscillations");

  for (const std::string& text : descriptions) {
    CAPTURE(text);
    const LoopTrace trace = refine("task", ast(text), {}, {});
    CHECK(trace.reason == LoopTrace::Reason::kAccepted);
    CHECK(static_cast<int>(trace.turns.size()) <= 25);
  }
}
