// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0
//
// Closed-loop refine/terminate planner: propose a parametric policy, run the
// discriminator on its trajectory, and either stop (score above the loop
// threshold) or refine by switching generator family and walking a fixed
// parameter grid.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "motif/analyzer.hpp"
#include "motif/generators.hpp"

namespace motif {

struct PolicyCandidate {
  std::string generator_name;
  gen::GeneratorParams params;
  int turn{0};
};

struct LoopTurn {
  PolicyCandidate candidate;
  Verdict verdict;
};

struct LoopTrace {
  std::vector<LoopTurn> turns;
  bool terminated{false};
  enum class Reason { kAccepted, kBudgetExhausted } reason{
      Reason::kBudgetExhausted};
};

struct LoopConfig {
  int budget{25};
  double theta_loop{0.9};  // stricter than the verdict threshold
  AnalyzerConfig analyzer;
};

/// Turn 1 proposes the generator family a naive lookup pairs with the
/// description's leading primary clause (a horizontal move proposes the
/// horizontal-shaking family, as the published two-turn walkthrough does).
/// On rejection the family is corrected from the full clause structure, then
/// a coordinate descent walks frequency {1..6}, amplitude {0.05..0.2} and
/// the 8-way direction grid until the verdict clears theta_loop or the
/// budget runs out.
LoopTrace refine(const std::string& task, const dsl::MotionAst& ast,
                 std::span<const SceneObject> scene,
                 const LoopConfig& cfg = {});

}  // namespace motif
