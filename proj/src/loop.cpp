// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#include "motif/loop.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "motif/error.hpp"

namespace motif {

namespace {

using dsl::Axis;
using dsl::Clause;
using dsl::Direction;
using gen::Generated;
using gen::GeneratorParams;

struct Family {
  std::string name;  // line | vertical-shaking | horizontal-shaking |
                     // circle | arc | oscillating-translate | detour |
                     // composite
};

bool is_horizontal(Direction d) {
  return d == Direction::kLeft || d == Direction::kRight;
}

const SceneObject* scene_object(std::span<const SceneObject> scene,
                                const std::string& label) {
  for (const SceneObject& obj : scene) {
    if (obj.label == label) return &obj;
  }
  return nullptr;
}

// The naive turn-1 lookup keyed on the first primary clause alone. A
// left/right move proposes horizontal shaking (motion on the same axis),
// which reproduces the published first-guess failure for "move to the left
// while making vertical oscillations".
std::string naive_family(const Clause& primary,
                         std::span<const SceneObject> scene) {
  struct Visitor {
    std::span<const SceneObject> scene;
    std::string operator()(const dsl::Translate& c) const {
      if (is_horizontal(c.direction)) return "horizontal-shaking";
      if (c.direction == Direction::kUp || c.direction == Direction::kDown ||
          c.direction == Direction::kForward) {
        return "vertical-shaking";
      }
      return "line";
    }
    std::string operator()(const dsl::CurveShape&) const { return "arc"; }
    std::string operator()(const dsl::Rotate&) const { return "circle"; }
    std::string operator()(const dsl::Oscillate& c) const {
      switch (c.axis) {
        case Axis::kHorizontal: return "horizontal-shaking";
        case Axis::kVertical: return "vertical-shaking";
        default: return "oscillating-translate";
      }
    }
    std::string operator()(const dsl::RepeatSequence& c) const {
      return c.steps.empty() ? "line"
                             : std::visit(*this, c.steps.front().primary);
    }
    std::string operator()(const dsl::MoveOver& c) const {
      return scene_object(scene, c.object) ? "line" : "line";
    }
    std::string operator()(const dsl::Detour& c) const {
      return c.object && scene_object(scene, *c.object) ? "detour" : "line";
    }
    std::string operator()(const dsl::DistanceTrend&) const { return "line"; }
    std::string operator()(const dsl::FollowPath&) const { return "line"; }
    std::string operator()(const dsl::Avoid&) const { return "line"; }
    std::string operator()(const dsl::StraightLine&) const { return "line"; }
    std::string operator()(const dsl::Trend&) const { return "circle"; }
    std::string operator()(const dsl::Unobservable&) const { return "line"; }
  };
  return std::visit(Visitor{scene}, primary);
}

// Family chosen from the full first step once turn 1 fails: a translation
// with an oscillation modifier wants the combined generator, a translation
// with a detour modifier wants the detour generator, and so on.
std::string corrected_family(const dsl::MotionAst& ast,
                             std::span<const SceneObject> scene) {
  const dsl::Step& step = ast.steps.front();
  if (const auto* translate = std::get_if<dsl::Translate>(&step.primary)) {
    for (const Clause& m : step.modifiers) {
      if (std::holds_alternative<dsl::Oscillate>(m)) {
        return "oscillating-translate";
      }
      if (const auto* detour = std::get_if<dsl::Detour>(&m)) {
        if (detour->object && scene_object(scene, *detour->object)) {
          return "detour";
        }
      }
    }
    if (ast.steps.size() > 1) return "composite";
    (void)translate;
    return "line";
  }
  if (std::holds_alternative<dsl::Oscillate>(step.primary)) {
    const auto& osc = std::get<dsl::Oscillate>(step.primary);
    if (osc.axis == Axis::kVertical) return "vertical-shaking";
    if (osc.axis == Axis::kHorizontal) return "horizontal-shaking";
    return "oscillating-translate";
  }
  if (std::holds_alternative<dsl::Rotate>(step.primary)) return "circle";
  if (std::holds_alternative<dsl::CurveShape>(step.primary)) return "arc";
  if (const auto* detour = std::get_if<dsl::Detour>(&step.primary)) {
    if (detour->object && scene_object(scene, *detour->object)) {
      return "detour";
    }
  }
  return naive_family(step.primary, scene);
}

// Clause-informed defaults: counts, directions, convexity and sides come
// from the description; everything else starts at the family default.
struct AstHints {
  std::optional<Direction> direction;
  std::optional<Axis> axis;
  std::optional<int> count;
  dsl::Convexity convexity{dsl::Convexity::kConvex};
  dsl::TurnDirection turn{dsl::TurnDirection::kClockwise};
  dsl::Side side{dsl::Side::kRight};
  std::optional<std::string> object;
};

void gather_hints(const Clause& clause, AstHints& hints) {
  if (const auto* c = std::get_if<dsl::Translate>(&clause)) {
    if (!hints.direction) hints.direction = c->direction;
  } else if (const auto* c = std::get_if<dsl::CurveShape>(&clause)) {
    if (c->direction && !hints.direction) hints.direction = *c->direction;
    hints.convexity = c->convexity;
  } else if (const auto* c = std::get_if<dsl::Rotate>(&clause)) {
    hints.turn = c->direction;
    if (!hints.count) hints.count = c->count;
  } else if (const auto* c = std::get_if<dsl::Oscillate>(&clause)) {
    if (!hints.axis) hints.axis = c->axis;
    if (c->count && !hints.count) hints.count = *c->count;
  } else if (const auto* c = std::get_if<dsl::Detour>(&clause)) {
    hints.side = c->side;
    if (c->object && !hints.object) hints.object = *c->object;
  } else if (const auto* c = std::get_if<dsl::RepeatSequence>(&clause)) {
    for (const dsl::Step& s : c->steps) {
      gather_hints(s.primary, hints);
      for (const Clause& m : s.modifiers) gather_hints(m, hints);
    }
  }
}

AstHints hints_of(const dsl::MotionAst& ast) {
  AstHints hints;
  for (const dsl::Step& step : ast.steps) {
    gather_hints(step.primary, hints);
    for (const Clause& m : step.modifiers) gather_hints(m, hints);
  }
  return hints;
}

GeneratorParams default_params(const std::string& family,
                               const AstHints& hints) {
  GeneratorParams p;
  p.n = 16;
  p.frequency = hints.count.value_or(2);
  p.amplitude = 0.1;
  p.count = hints.count.value_or(1);
  p.turn = hints.turn;
  p.convexity = hints.convexity;
  p.side = hints.side;
  p.direction = hints.direction.value_or(Direction::kLeft);
  p.axis = hints.axis.value_or(Axis::kVertical);
  p.length = 0.5;
  p.radius = 0.2;
  p.center = {0.5, 0.5};
  const Vec2 dir = gen::direction_vector(p.direction);
  if (family == "line" || family == "arc" || family == "detour") {
    p.start = Vec2{0.5, 0.5} - dir * 0.3;
    p.end = Vec2{0.5, 0.5} + dir * 0.3;
  } else if (family == "oscillating-translate") {
    p.start = Vec2{0.5, 0.5} - dir * (p.length / 2);
  } else {
    p.start = {0.2, 0.5};
  }
  p.bulge = 0.15;
  p.clearance = 0.06;
  return p;
}

struct Proposal {
  Generated generated;
  bool feasible{true};
};

Proposal realize(const std::string& family, const GeneratorParams& params,
                 std::span<const SceneObject> scene, const AstHints& hints,
                 const dsl::MotionAst& ast) {
  try {
    if (family == "line") return {gen::gen_line(params)};
    if (family == "vertical-shaking") return {gen::gen_vertical_shaking(params)};
    if (family == "horizontal-shaking") {
      return {gen::gen_horizontal_shaking(params)};
    }
    if (family == "circle") return {gen::gen_circle(params)};
    if (family == "arc") return {gen::gen_arc(params)};
    if (family == "oscillating-translate") {
      return {gen::gen_oscillating_translate(params)};
    }
    if (family == "detour") {
      const SceneObject* obstacle =
          hints.object ? scene_object(scene, *hints.object) : nullptr;
      if (!obstacle) return {Generated{}, false};
      // Aim the chord through the obstacle along the hinted direction.
      GeneratorParams p = params;
      const Vec2 c = obstacle->region.centroid();
      const Vec2 dir = gen::direction_vector(p.direction);
      p.start = c - dir * 0.4;
      p.end = c + dir * 0.4;
      return {gen::gen_detour(p, *obstacle)};
    }
    if (family == "composite") {
      // One straight leg per translate step of the description.
      std::vector<std::pair<Direction, double>> legs;
      for (const dsl::Step& step : ast.steps) {
        if (const auto* t = std::get_if<dsl::Translate>(&step.primary)) {
          legs.emplace_back(t->direction, 0.3);
        }
      }
      if (legs.empty()) return {Generated{}, false};
      return {gen::gen_line_sequence({0.5, 0.3}, legs, params.n, params)};
    }
  } catch (const Error&) {
    return {Generated{}, false};
  }
  return {Generated{}, false};
}

std::string params_key(const std::string& family, const GeneratorParams& p) {
  std::ostringstream os;
  os << family << '|' << p.n << '|' << p.start.x << ',' << p.start.y << '|'
     << p.end.x << ',' << p.end.y << '|' << p.amplitude << '|' << p.frequency
     << '|' << p.radius << '|' << p.count << '|' << static_cast<int>(p.turn)
     << '|' << static_cast<int>(p.convexity) << '|' << p.bulge << '|'
     << static_cast<int>(p.direction) << '|' << static_cast<int>(p.axis) << '|'
     << p.length << '|' << static_cast<int>(p.side) << '|' << p.clearance;
  return os.str();
}

}  // namespace

LoopTrace refine(const std::string& task, const dsl::MotionAst& ast,
                 std::span<const SceneObject> scene, const LoopConfig& cfg) {
  (void)task;  // carried for symmetry with the prompt interface
  if (ast.steps.empty()) raise("invalid-argument", "empty motion description");
  if (cfg.budget < 1) raise("invalid-argument", "budget must be >= 1");

  const AstHints hints = hints_of(ast);
  LoopTrace trace;
  std::set<std::string> seen;
  double best_score = -1;

  auto evaluate = [&](const std::string& family,
                      const GeneratorParams& params) -> bool {
    if (static_cast<int>(trace.turns.size()) >= cfg.budget) return true;
    const std::string key = params_key(family, params);
    if (seen.contains(key)) return false;
    seen.insert(key);
    const Proposal proposal = realize(family, params, scene, hints, ast);
    Verdict verdict;
    if (proposal.feasible) {
      verdict = discriminate(proposal.generated.trajectory, scene, ast,
                             cfg.analyzer);
    }
    PolicyCandidate candidate{family, params,
                              static_cast<int>(trace.turns.size()) + 1};
    trace.turns.push_back({std::move(candidate), verdict});
    best_score = std::max(best_score, verdict.score);
    if (verdict.score >= cfg.theta_loop) {
      trace.terminated = true;
      trace.reason = LoopTrace::Reason::kAccepted;
      return true;
    }
    return static_cast<int>(trace.turns.size()) >= cfg.budget;
  };

  // Turn 1: naive family from the leading clause.
  const std::string first_family = naive_family(ast.steps.front().primary, scene);
  bool done = evaluate(first_family, default_params(first_family, hints));

  // Phase 2: family corrected from the full clause structure.
  const std::string family = corrected_family(ast, scene);
  if (!done && family != first_family) {
    done = evaluate(family, default_params(family, hints));
  }

  // Phase 3: coordinate descent over the fixed parameter grid.
  if (!done) {
    GeneratorParams best = default_params(family, hints);
    const auto try_value = [&](GeneratorParams candidate) {
      if (done) return;
      const double before = best_score;
      done = evaluate(family, candidate);
      if (best_score > before) best = candidate;
    };
    for (int frequency : {1, 2, 3, 4, 5, 6}) {
      GeneratorParams p = best;
      p.frequency = frequency;
      p.count = frequency;
      try_value(p);
    }
    for (double amplitude : {0.05, 0.1, 0.15, 0.2}) {
      GeneratorParams p = best;
      p.amplitude = amplitude;
      p.bulge = amplitude;
      try_value(p);
    }
    for (int d = 0; d < 8 && !done; ++d) {
      GeneratorParams p = best;
      p.direction = static_cast<Direction>(d);
      const Vec2 dir = gen::direction_vector(p.direction);
      if (family == "line" || family == "arc" || family == "detour") {
        p.start = Vec2{0.5, 0.5} - dir * 0.3;
        p.end = Vec2{0.5, 0.5} + dir * 0.3;
      } else if (family == "oscillating-translate") {
        p.start = Vec2{0.5, 0.5} - dir * (p.length / 2);
      }
      try_value(p);
    }
  }

  if (!trace.terminated) {
    trace.terminated = true;
    trace.reason = trace.turns.empty()
                       ? LoopTrace::Reason::kBudgetExhausted
                       : (trace.turns.back().verdict.score >= cfg.theta_loop
                              ? LoopTrace::Reason::kAccepted
                              : LoopTrace::Reason::kBudgetExhausted);
  }
  return trace;
}

}  // namespace motif
