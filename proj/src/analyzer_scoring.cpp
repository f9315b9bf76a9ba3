// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0
//
// Clause scoring and step-to-segment matching.
//
// Path-shape steps are aligned to temporal segments with a monotone DP; a
// step may consume a run of consecutive segments (a two-leg shake is one
// oscillate clause but splits into two heading segments), unmatched steps
// score 0 and every unconsumed segment multiplies the verdict by the surplus
// penalty. Grounding and straightness steps judge the whole path, which lets
// a leading "move farther from the laptop" coexist with the path-shape steps
// that follow it. Runs of bare opposite or identical translations collapse
// into one swing-counted step, so "move to the right and move to the left,
// repeating this sequence 2 times" is judged as four swings rather than four
// separate legs.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "analyzer_internal.hpp"
#include "motif/analyzer.hpp"
#include "motif/error.hpp"
#include "motif/generators.hpp"

namespace motif {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

struct SpanFeatures {
  std::span<const Vec2> path;
  double diag;  // whole-trajectory diagonal; thresholds stay global
  const AnalyzerConfig* cfg;
};

struct Scored {
  double score{0};
  std::string evidence;
};

const SceneObject* find_object(std::span<const SceneObject> scene,
                               const std::string& label) {
  for (const SceneObject& obj : scene) {
    if (lower(obj.label) == lower(label)) return &obj;
  }
  return nullptr;
}

Scored score_translate(const dsl::Translate& clause, const SpanFeatures& f) {
  const Vec2 net = f.path.back() - f.path.front();
  if (norm(net) < 0.02 * f.diag) return {0, "no net displacement"};
  const Vec2 target = gen::direction_vector(clause.direction, f.cfg->forward);
  const double cosine = dot(normalized(net), target);
  return {clamp01(cosine),
          "net displacement heads " +
              dsl::direction_name(gen::classify_direction(net)) + ", cos " +
              fmt(cosine) + " to " + dsl::direction_name(clause.direction)};
}

Scored score_curve(const dsl::CurveShape& clause, const SpanFeatures& f) {
  double direction_score = 1;
  if (clause.direction) {
    direction_score = score_translate(dsl::Translate{*clause.direction}, f).score;
  }
  const Vec2 chord = f.path.back() - f.path.front();
  if (norm(chord) < 1e-9 * std::max(f.diag, 1e-12)) {
    return {0, "closed span has no chord"};
  }
  double best_abs = 0;
  double best_cross = 0;
  for (const Vec2& p : f.path) {
    const double c = cross(chord, p - f.path.front()) / norm(chord);
    if (std::abs(c) > best_abs) {
      best_abs = std::abs(c);
      best_cross = c;
    }
  }
  // cross > 0 puts a sample on the agent's right of the chord; the convex
  // side is the agent's left.
  const bool measured_convex = best_cross < 0;
  const bool want_convex = clause.convexity == dsl::Convexity::kConvex;
  if (best_abs < 1e-12 || measured_convex != want_convex) {
    return {0, "bulge " + fmt(best_abs) + " on the wrong side"};
  }
  const double confidence = clamp01(best_abs / (2 * f.cfg->epsilon_amp * f.diag));
  return {direction_score * confidence,
          "bulge " + fmt(best_abs) + " on the expected side"};
}

Scored score_rotate(const dsl::Rotate& clause, const SpanFeatures& f) {
  const WindingInfo w = detail::winding_of_span(f.path, f.diag, *f.cfg);
  if (!w.direction) return {0, "no winding"};
  if (*w.direction != clause.direction) {
    return {0, "winds the other way (" + fmt(w.total_turning) + " rad)"};
  }
  const double count_score =
      std::max(0.0, 1.0 - f.cfg->count_decay *
                              std::abs(w.revolution_count - clause.count));
  const double roundness = clamp01(1.0 - w.radial_cv);
  return {count_score * roundness,
          std::to_string(w.revolution_count) + " revolutions, radial cv " +
              fmt(w.radial_cv)};
}

Scored score_oscillate(const dsl::Oscillate& clause, const SpanFeatures& f,
                       bool primary) {
  const Vec2 axis = detail::axis_vector(clause.axis, f.path);
  const AxisOscillation osc =
      detail::count_swings(f.path, axis, f.cfg->epsilon_amp * f.diag);
  double score;
  if (clause.count) {
    score = std::max(0.0, 1.0 - f.cfg->count_decay *
                                    std::abs(osc.cycle_count - *clause.count));
  } else {
    // Unstated count reads as "several": two or more swings satisfy it.
    score = osc.cycle_count >= 2
                ? 1.0
                : std::max(0.0,
                           1.0 - f.cfg->count_decay * (2 - osc.cycle_count));
  }
  std::string note;
  if (primary && score > 0) {
    // A primary oscillation is pure shaking: the motion must be dominated by
    // the swings, not ride on a translation (a curve's single bump projects
    // as a swing pair but travels far). Modifier oscillations skip this.
    const double net = norm(f.path.back() - f.path.front());
    const double ratio = net / std::max(osc.mean_amplitude, 1e-9);
    const double dominance = std::clamp((3.0 - ratio) / 1.5, 0.0, 1.0);
    if (dominance < 1.0) {
      note = ", net travel " + fmt(ratio) + "x the swing amplitude";
    }
    score *= dominance;
  }
  return {score, std::to_string(osc.cycle_count) + " swings, mean amplitude " +
                     fmt(osc.mean_amplitude) + note};
}

Scored score_move_over(const GroundingEvent& ev, const SpanFeatures& f) {
  if (ev.entered_region) return {1, "entered the region"};
  const double margin = f.cfg->grounding_margin * f.diag;
  return {clamp01(1.0 - ev.min_distance / margin),
          "closest approach " + fmt(ev.min_distance)};
}

Scored score_avoid(const GroundingEvent& ev, const SpanFeatures& f) {
  if (ev.entered_region) return {0, "entered the region"};
  const double margin = f.cfg->grounding_margin * f.diag;
  return {clamp01(ev.min_distance / margin),
          "kept distance " + fmt(ev.min_distance)};
}

Scored score_distance_trend(const dsl::DistanceTrend& clause,
                            const GroundingEvent& ev, const SpanFeatures& f) {
  const double normalized_slope = ev.distance_slope / std::max(f.diag, 1e-12);
  const double toward = clause.closer ? -normalized_slope : normalized_slope;
  return {clamp01(toward / (2 * f.cfg->epsilon_slope)),
          std::string("distance slope ") + fmt(ev.distance_slope) +
              (ev.flat ? " (flat)" : "")};
}

Scored score_detour_with_object(const dsl::Detour& clause,
                                const GroundingEvent& ev,
                                const SpanFeatures& f) {
  if (ev.entered_region) return {0, "entered the region"};
  if (!ev.passing_side || *ev.passing_side != clause.side) {
    return {0, "passed on the wrong side"};
  }
  const double margin = f.cfg->grounding_margin * f.diag;
  double score = clamp01(0.5 + 0.5 * ev.min_distance / margin);
  if (!ev.chord_crossed) score *= 0.5;  // nothing blocked the straight chord
  return {score, std::string("passed ") +
                     (clause.side == dsl::Side::kRight ? "right" : "left") +
                     " at distance " + fmt(ev.min_distance) +
                     (ev.chord_crossed ? "" : ", chord never crossed")};
}

Scored score_detour_side_only(const dsl::Detour& clause, const SpanFeatures& f) {
  const Vec2 chord = f.path.back() - f.path.front();
  if (norm(chord) < 1e-9 * std::max(f.diag, 1e-12)) {
    return {0, "closed span has no chord"};
  }
  double side_dev = 0, other_dev = 0;
  for (const Vec2& p : f.path) {
    const double c = cross(chord, p - f.path.front()) / norm(chord);
    const double toward = clause.side == dsl::Side::kRight ? c : -c;
    side_dev = std::max(side_dev, toward);
    other_dev = std::max(other_dev, -toward);
  }
  if (side_dev <= other_dev) return {0, "bulge on the wrong side"};
  return {clamp01(side_dev / (2 * f.cfg->epsilon_amp * f.diag)),
          "bulge " + fmt(side_dev) + " toward the detour side"};
}

Scored score_follow_path(const SceneObject& object, const SpanFeatures& f) {
  const double margin = f.cfg->follow_margin * f.diag;
  std::size_t close = 0;
  for (const Vec2& p : f.path) {
    if (object.region.distance(p) <= margin) ++close;
  }
  const double fraction =
      static_cast<double>(close) / static_cast<double>(f.path.size());
  return {fraction, fmt(100 * fraction) + "% of samples in the corridor"};
}

Scored score_straight_line(const SpanFeatures& f) {
  const double arc = polyline_length(f.path);
  if (arc <= 0) return {0, "zero arc length"};
  const double sinuosity = norm(f.path.back() - f.path.front()) / arc;
  int max_cycles = 0;
  for (dsl::Axis axis :
       {dsl::Axis::kHorizontal, dsl::Axis::kVertical, dsl::Axis::kDiagonal}) {
    const AxisOscillation osc = detail::count_swings(
        f.path, detail::axis_vector(axis, f.path), f.cfg->epsilon_amp * f.diag);
    max_cycles = std::max(max_cycles, osc.cycle_count);
  }
  if (max_cycles > 0) {
    return {0, std::to_string(max_cycles) + " oscillation swings present"};
  }
  return {clamp01((sinuosity - f.cfg->straight_ramp_lo) /
                  (f.cfg->straight_ramp_hi - f.cfg->straight_ramp_lo)),
          "sinuosity " + fmt(sinuosity)};
}

// Stroke tops along screen-y; strokes are read straight off the raw
// projection so the drift that the trend asserts is preserved.
Scored score_trend(const dsl::Trend& clause, const SpanFeatures& f) {
  if (clause.attribute == dsl::TrendAttribute::kRadius) {
    Vec2 center{0, 0};
    for (const Vec2& p : f.path) center = center + p;
    center = center * (1.0 / static_cast<double>(f.path.size()));
    const std::size_t half = f.path.size() / 2;
    double r1 = 0, r2 = 0;
    for (std::size_t i = 0; i < half; ++i) r1 += norm(f.path[i] - center);
    for (std::size_t i = half; i < f.path.size(); ++i) {
      r2 += norm(f.path[i] - center);
    }
    r1 /= std::max<std::size_t>(half, 1);
    r2 /= std::max<std::size_t>(f.path.size() - half, 1);
    const double rel = (r2 - r1) / std::max(r1, 1e-12);
    const double toward =
        clause.direction == dsl::TrendDirection::kIncreasing ? rel : -rel;
    return {clamp01(toward / 0.1), "mean radius " + fmt(r1) + " -> " + fmt(r2)};
  }
  const detail::SwingProfile profile =
      detail::swing_profile(f.path, {0, 1}, f.cfg->epsilon_amp * f.diag,
                            /*detrend=*/false);
  std::vector<double> tops;  // y of stroke starts = local minima of y
  for (std::size_t i = 0; i + 1 < profile.extremes.size(); ++i) {
    if (profile.extremes[i] < profile.extremes[i + 1]) {
      tops.push_back(f.path[profile.extreme_indices[i]].y);
    }
  }
  if (tops.size() < 2) return {0, "fewer than two strokes"};
  int good = 0;
  for (std::size_t i = 1; i < tops.size(); ++i) {
    const bool rising = tops[i] < tops[i - 1];  // higher start = smaller y
    if (rising == (clause.direction == dsl::TrendDirection::kIncreasing)) {
      ++good;
    }
  }
  return {static_cast<double>(good) / (tops.size() - 1),
          std::to_string(good) + " of " + std::to_string(tops.size() - 1) +
              " stroke starts trend the right way"};
}

// ---- step flattening ---------------------------------------------------------

// One matchable step after repeat expansion and run collapsing. A collapsed
// run of k bare translations is judged as swings along its leading direction:
// alternating runs expect k swings, identical runs expect 2k-1 (the return
// strokes between k same-direction strokes).
struct FlatStep {
  std::vector<std::size_t> clause_ids;  // primary first, then modifiers
  bool global{false};
  bool has_primary{true};  // false for a repeat wrapper holding modifiers only
  std::optional<dsl::Direction> run_direction;
  int expected_swings{0};
  bool run_toward_first{false};  // identical runs must swing toward d first
};

bool is_path_clause(const dsl::Clause& clause) {
  return std::holds_alternative<dsl::Translate>(clause) ||
         std::holds_alternative<dsl::CurveShape>(clause) ||
         std::holds_alternative<dsl::Rotate>(clause) ||
         std::holds_alternative<dsl::Oscillate>(clause);
}

std::optional<dsl::Direction> opposite(dsl::Direction d) {
  using dsl::Direction;
  switch (d) {
    case Direction::kUp: return Direction::kDown;
    case Direction::kDown: return Direction::kUp;
    case Direction::kLeft: return Direction::kRight;
    case Direction::kRight: return Direction::kLeft;
    case Direction::kUpLeft: return Direction::kDownRight;
    case Direction::kUpRight: return Direction::kDownLeft;
    case Direction::kDownLeft: return Direction::kUpRight;
    case Direction::kDownRight: return Direction::kUpLeft;
    case Direction::kForward: return std::nullopt;
  }
  return std::nullopt;
}

struct ClauseReport {
  const dsl::Clause* clause;
  double score_sum{0};
  int uses{0};
  std::string evidence;
};

void collect_objects(const dsl::Clause& clause, std::set<std::string>& out) {
  if (const auto* c = std::get_if<dsl::MoveOver>(&clause)) out.insert(c->object);
  if (const auto* c = std::get_if<dsl::Detour>(&clause)) {
    if (c->object) out.insert(*c->object);
  }
  if (const auto* c = std::get_if<dsl::DistanceTrend>(&clause)) {
    out.insert(c->object);
  }
  if (const auto* c = std::get_if<dsl::FollowPath>(&clause)) {
    out.insert(c->object);
  }
  if (const auto* c = std::get_if<dsl::Avoid>(&clause)) out.insert(c->object);
  if (const auto* c = std::get_if<dsl::RepeatSequence>(&clause)) {
    for (const dsl::Step& step : c->steps) {
      collect_objects(step.primary, out);
      for (const dsl::Clause& m : step.modifiers) collect_objects(m, out);
    }
  }
}

class ClauseScorer {
 public:
  ClauseScorer(std::span<const SceneObject> scene,
               const MotionFeatures& features, const AnalyzerConfig& cfg)
      : scene_(scene), features_(features), cfg_(cfg) {}

  Scored score(const dsl::Clause& clause, std::size_t begin, std::size_t end,
               bool primary) const {
    const SpanFeatures f{
        std::span<const Vec2>(features_.path).subspan(begin, end - begin),
        features_.diag, &cfg_};
    struct Visitor {
      const ClauseScorer* self;
      const SpanFeatures& f;
      bool primary;
      Scored operator()(const dsl::Translate& c) const {
        return score_translate(c, f);
      }
      Scored operator()(const dsl::CurveShape& c) const {
        return score_curve(c, f);
      }
      Scored operator()(const dsl::Rotate& c) const {
        return score_rotate(c, f);
      }
      Scored operator()(const dsl::Oscillate& c) const {
        return score_oscillate(c, f, primary);
      }
      Scored operator()(const dsl::RepeatSequence&) const {
        return {1.0, "expanded into its repeated steps"};
      }
      Scored operator()(const dsl::MoveOver& c) const {
        return score_move_over(self->event(c.object, f), f);
      }
      Scored operator()(const dsl::Detour& c) const {
        if (!c.object) return score_detour_side_only(c, f);
        return score_detour_with_object(c, self->event(*c.object, f), f);
      }
      Scored operator()(const dsl::DistanceTrend& c) const {
        return score_distance_trend(c, self->event(c.object, f), f);
      }
      Scored operator()(const dsl::FollowPath& c) const {
        return score_follow_path(*self->object(c.object), f);
      }
      Scored operator()(const dsl::Avoid& c) const {
        return score_avoid(self->event(c.object, f), f);
      }
      Scored operator()(const dsl::StraightLine&) const {
        return score_straight_line(f);
      }
      Scored operator()(const dsl::Trend& c) const {
        return score_trend(c, f);
      }
      Scored operator()(const dsl::Unobservable& c) const {
        return {1.0, c.text + " has no trajectory observable; accepted"};
      }
    };
    return std::visit(Visitor{this, f, primary}, clause);
  }

  const SceneObject* object(const std::string& label) const {
    const SceneObject* obj = find_object(scene_, label);
    if (!obj) raise("unknown-object", "scene has no object '" + label + "'");
    return obj;
  }

 private:
  GroundingEvent event(const std::string& label, const SpanFeatures& f) const {
    return detail::grounding_of_span(f.path, *object(label), f.diag, cfg_);
  }

  std::span<const SceneObject> scene_;
  const MotionFeatures& features_;
  const AnalyzerConfig& cfg_;
};

}  // namespace

ClauseScore check_clause(const Trajectory& traj,
                         std::span<const SceneObject> scene,
                         const dsl::Clause& clause,
                         const AnalyzerConfig& cfg) {
  const MotionFeatures features = extract_features(traj, scene, cfg);
  const ClauseScorer scorer(scene, features, cfg);
  const Scored scored =
      scorer.score(clause, 0, features.path.size(), /*primary=*/true);
  return {dsl::format_clause(clause), scored.score, scored.evidence};
}

Verdict discriminate(const Trajectory& traj, std::span<const SceneObject> scene,
                     const dsl::MotionAst& ast, const AnalyzerConfig& cfg) {
  if (ast.steps.empty()) raise("invalid-argument", "empty motion description");

  std::set<std::string> referenced;
  for (const dsl::Step& step : ast.steps) {
    collect_objects(step.primary, referenced);
    for (const dsl::Clause& m : step.modifiers) collect_objects(m, referenced);
  }
  for (const std::string& label : referenced) {
    if (!find_object(scene, label)) {
      raise("unknown-object", "scene has no object '" + label + "'");
    }
  }

  const MotionFeatures features = extract_features(traj, scene, cfg);
  const ClauseScorer scorer(scene, features, cfg);

  // Register every original clause once; repeat expansions share ids.
  std::vector<ClauseReport> reports;
  auto register_clause = [&](const dsl::Clause& clause) {
    reports.push_back({&clause, 0, 0, ""});
    return reports.size() - 1;
  };

  // Expand repeats into (step, clause-id) copies.
  struct ExpandedStep {
    const dsl::Step* step;
    std::vector<std::size_t> clause_ids;
  };
  std::vector<ExpandedStep> expanded;
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> repeat_links;
  for (const dsl::Step& step : ast.steps) {
    if (const auto* repeat = std::get_if<dsl::RepeatSequence>(&step.primary)) {
      const std::size_t repeat_id = register_clause(step.primary);
      std::vector<std::size_t> all_sub_ids;
      std::vector<std::vector<std::size_t>> sub_ids(repeat->steps.size());
      for (std::size_t s = 0; s < repeat->steps.size(); ++s) {
        sub_ids[s].push_back(register_clause(repeat->steps[s].primary));
        for (const dsl::Clause& m : repeat->steps[s].modifiers) {
          sub_ids[s].push_back(register_clause(m));
        }
        all_sub_ids.insert(all_sub_ids.end(), sub_ids[s].begin(),
                           sub_ids[s].end());
      }
      for (int copy = 0; copy < repeat->count; ++copy) {
        for (std::size_t s = 0; s < repeat->steps.size(); ++s) {
          expanded.push_back({&repeat->steps[s], sub_ids[s]});
        }
      }
      // The wrapper's own modifiers (e.g. a stroke-height trend) become a
      // global step; the wrapper clause itself reports the copies' mean.
      if (!step.modifiers.empty()) {
        ExpandedStep wrapper{nullptr, {}};
        for (const dsl::Clause& m : step.modifiers) {
          wrapper.clause_ids.push_back(register_clause(m));
        }
        expanded.push_back(std::move(wrapper));
      }
      repeat_links.emplace_back(repeat_id, std::move(all_sub_ids));
      continue;
    }
    ExpandedStep flat{&step, {}};
    flat.clause_ids.push_back(register_clause(step.primary));
    for (const dsl::Clause& m : step.modifiers) {
      flat.clause_ids.push_back(register_clause(m));
    }
    expanded.push_back(std::move(flat));
  }

  // Collapse runs of bare translations (alternating opposite or identical)
  // into swing-counted steps, then split path steps from global ones.
  std::vector<FlatStep> path_steps;
  std::vector<FlatStep> global_steps;
  std::size_t i = 0;
  auto bare_translate = [&](const ExpandedStep& e) -> const dsl::Translate* {
    if (e.clause_ids.size() != 1) return nullptr;
    return std::get_if<dsl::Translate>(reports[e.clause_ids[0]].clause);
  };
  while (i < expanded.size()) {
    const ExpandedStep& e = expanded[i];
    if (const dsl::Translate* first = bare_translate(e)) {
      // Alternating run d, -d, d, ...
      std::size_t j = i + 1;
      const std::optional<dsl::Direction> opp = opposite(first->direction);
      while (opp && j < expanded.size()) {
        const dsl::Translate* next = bare_translate(expanded[j]);
        if (!next) break;
        const dsl::Direction want =
            (j - i) % 2 == 1 ? *opp : first->direction;
        if (next->direction != want) break;
        ++j;
      }
      if (j - i >= 2) {
        FlatStep run;
        run.run_direction = first->direction;
        run.expected_swings = static_cast<int>(j - i);
        run.run_toward_first = false;
        for (std::size_t k = i; k < j; ++k) {
          for (std::size_t id : expanded[k].clause_ids) {
            run.clause_ids.push_back(id);
          }
        }
        path_steps.push_back(std::move(run));
        i = j;
        continue;
      }
      // Identical run d, d, d (strokes with implicit returns).
      j = i + 1;
      while (j < expanded.size()) {
        const dsl::Translate* next = bare_translate(expanded[j]);
        if (!next || next->direction != first->direction) break;
        ++j;
      }
      if (j - i >= 2) {
        FlatStep run;
        run.run_direction = first->direction;
        run.expected_swings = static_cast<int>(2 * (j - i) - 1);
        run.run_toward_first = true;
        for (std::size_t k = i; k < j; ++k) {
          for (std::size_t id : expanded[k].clause_ids) {
            run.clause_ids.push_back(id);
          }
        }
        path_steps.push_back(std::move(run));
        i = j;
        continue;
      }
    }
    FlatStep flat;
    flat.clause_ids = e.clause_ids;
    const dsl::Clause& head = *reports[e.clause_ids[0]].clause;
    flat.global = !is_path_clause(head);
    flat.has_primary = e.step != nullptr;
    (flat.global ? global_steps : path_steps).push_back(std::move(flat));
    ++i;
  }

  // Score a flat step over a span: geometric mean of its clauses, or the
  // swing rubric for a collapsed run.
  auto step_score = [&](const FlatStep& flat, std::size_t begin,
                        std::size_t end, bool record) -> double {
    double score = 0;
    std::string evidence;
    if (flat.run_direction) {
      const Vec2 axis = normalized(
          gen::direction_vector(*flat.run_direction, cfg.forward));
      const std::span<const Vec2> span =
          std::span<const Vec2>(features.path).subspan(begin, end - begin);
      const detail::SwingProfile profile = detail::swing_profile(
          span, axis, cfg.epsilon_amp * features.diag);
      int swings = profile.extremes.empty()
                       ? 0
                       : static_cast<int>(profile.extremes.size()) - 1;
      bool direction_ok = true;
      if (flat.run_toward_first && profile.extremes.size() >= 2) {
        // Strokes must head toward the named direction first.
        direction_ok = profile.extremes[1] > profile.extremes[0];
      }
      score = std::max(0.0, 1.0 - cfg.count_decay *
                                      std::abs(swings - flat.expected_swings));
      if (!direction_ok) score *= 0.5;
      evidence = std::to_string(swings) + " swings along " +
                 dsl::direction_name(*flat.run_direction) + ", expected " +
                 std::to_string(flat.expected_swings);
    } else {
      double log_sum = 0;
      bool zero = false;
      for (std::size_t k = 0; k < flat.clause_ids.size(); ++k) {
        const std::size_t id = flat.clause_ids[k];
        const Scored scored = scorer.score(*reports[id].clause, begin, end,
                                           k == 0 && flat.has_primary);
        if (record) {
          reports[id].score_sum += scored.score;
          reports[id].uses += 1;
          if (reports[id].evidence.empty()) {
            reports[id].evidence = scored.evidence;
          }
        }
        if (scored.score <= 0) {
          zero = true;
        } else {
          log_sum += std::log(scored.score);
        }
      }
      if (flat.clause_ids.empty() || zero) return 0;
      return std::exp(log_sum / static_cast<double>(flat.clause_ids.size()));
    }
    if (record) {
      for (std::size_t id : flat.clause_ids) {
        reports[id].score_sum += score;
        reports[id].uses += 1;
        if (reports[id].evidence.empty()) reports[id].evidence = evidence;
      }
    }
    return score;
  };

  const std::size_t n_path = path_steps.size();
  const std::size_t n_seg = features.segments.size();

  // Precompute step scores over every consecutive segment range.
  auto range_span = [&](std::size_t j, std::size_t j2) {
    return std::pair<std::size_t, std::size_t>{features.segments[j].begin,
                                               features.segments[j2 - 1].end};
  };
  std::vector<std::vector<std::vector<double>>> range_score(n_path);
  for (std::size_t s = 0; s < n_path; ++s) {
    range_score[s].assign(n_seg, {});
    for (std::size_t j = 0; j < n_seg; ++j) {
      for (std::size_t j2 = j + 1; j2 <= n_seg; ++j2) {
        const auto [b, e] = range_span(j, j2);
        range_score[s][j].push_back(step_score(path_steps[s], b, e, false));
      }
    }
  }

  // dp[i][j][m]: best matched-score sum using the first i steps and first j
  // segments with m segments consumed. All dimensions are tiny.
  const double kUnset = -1.0;
  std::vector<std::vector<std::vector<double>>> dp(
      n_path + 1,
      std::vector<std::vector<double>>(n_seg + 1,
                                       std::vector<double>(n_seg + 1, kUnset)));
  dp[0][0][0] = 0;
  for (std::size_t si = 0; si <= n_path; ++si) {
    for (std::size_t j = 0; j <= n_seg; ++j) {
      for (std::size_t m = 0; m <= n_seg; ++m) {
        const double cur = dp[si][j][m];
        if (cur < 0) continue;
        if (si < n_path) dp[si + 1][j][m] = std::max(dp[si + 1][j][m], cur);
        if (j < n_seg) dp[si][j + 1][m] = std::max(dp[si][j + 1][m], cur);
        if (si < n_path) {
          for (std::size_t j2 = j + 1; j2 <= n_seg; ++j2) {
            const double add = range_score[si][j][j2 - j - 1];
            const std::size_t m2 = m + (j2 - j);
            if (m2 <= n_seg) {
              dp[si + 1][j2][m2] = std::max(dp[si + 1][j2][m2], cur + add);
            }
          }
        }
      }
    }
  }

  double global_sum = 0;
  for (const FlatStep& flat : global_steps) {
    global_sum += step_score(flat, 0, features.path.size(), true);
  }

  const std::size_t total_steps = n_path + global_steps.size();
  double best_final = 0;
  double best_sum = -1;
  std::size_t best_m = 0;
  for (std::size_t m = 0; m <= n_seg; ++m) {
    const double sum = dp[n_path][n_seg][m];
    if (sum < 0) continue;
    const double mean =
        total_steps > 0
            ? (sum + global_sum) / static_cast<double>(total_steps)
            : 0.0;
    const double final_score =
        mean * std::pow(cfg.surplus_segment_penalty,
                        static_cast<double>(n_seg - m));
    if (final_score > best_final + 1e-15 || best_sum < 0) {
      best_final = final_score;
      best_sum = sum;
      best_m = m;
    }
  }

  // Recover one optimal alignment so clause reports show matched spans.
  if (n_path > 0 && best_sum >= 0) {
    std::size_t si = n_path, j = n_seg, m = best_m;
    double sum = best_sum;
    std::vector<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>>
        matches;
    while (si > 0 || j > 0) {
      bool stepped = false;
      if (si > 0 && dp[si - 1][j][m] >= 0 &&
          std::abs(dp[si - 1][j][m] - sum) < 1e-12) {
        --si;
        stepped = true;
      } else if (j > 0 && dp[si][j - 1][m] >= 0 &&
                 std::abs(dp[si][j - 1][m] - sum) < 1e-12) {
        --j;
        stepped = true;
      } else if (si > 0) {
        for (std::size_t j0 = 0; j0 < j && !stepped; ++j0) {
          const std::size_t span_len = j - j0;
          if (m < span_len) continue;
          const double add = range_score[si - 1][j0][j - j0 - 1];
          if (dp[si - 1][j0][m - span_len] >= 0 &&
              std::abs(dp[si - 1][j0][m - span_len] + add - sum) < 1e-12) {
            matches.push_back({si - 1, {j0, j}});
            sum -= add;
            m -= span_len;
            j = j0;
            --si;
            stepped = true;
          }
        }
      }
      if (!stepped) break;
    }
    std::vector<bool> matched(n_path, false);
    for (const auto& [s, range] : matches) {
      const auto [b, e] = range_span(range.first, range.second);
      step_score(path_steps[s], b, e, true);
      matched[s] = true;
    }
    for (std::size_t s = 0; s < n_path; ++s) {
      if (matched[s]) continue;
      for (std::size_t id : path_steps[s].clause_ids) {
        reports[id].uses += 1;
        if (reports[id].evidence.empty()) {
          reports[id].evidence = "no matching temporal segment";
        }
      }
    }
  }

  // A repeat wrapper reports the mean over its sub-clauses' aggregates.
  for (const auto& [repeat_id, sub_ids] : repeat_links) {
    double sum = 0;
    int used = 0;
    for (std::size_t id : sub_ids) {
      if (reports[id].uses > 0) {
        sum += reports[id].score_sum / reports[id].uses;
        ++used;
      }
    }
    reports[repeat_id].score_sum = used > 0 ? sum / used : 0.0;
    reports[repeat_id].uses = 1;
    reports[repeat_id].evidence = "aggregated over the repeated steps";
  }

  Verdict verdict;
  verdict.score = clamp01(best_final);
  verdict.label = verdict.score >= cfg.theta ? 1 : 0;
  for (ClauseReport& report : reports) {
    ClauseScore cs;
    cs.clause = dsl::format_clause(*report.clause);
    cs.score = report.uses > 0 ? report.score_sum / report.uses : 0.0;
    cs.evidence = report.evidence;
    verdict.clause_scores.push_back(std::move(cs));
  }
  return verdict;
}

std::vector<RankEntry> rank(std::span<const Trajectory> trajectories,
                            std::span<const SceneObject> scene,
                            const dsl::MotionAst& ast,
                            const AnalyzerConfig& cfg) {
  if (trajectories.empty()) raise("invalid-argument", "nothing to rank");
  std::vector<RankEntry> entries;
  entries.reserve(trajectories.size());
  for (std::size_t i = 0; i < trajectories.size(); ++i) {
    entries.push_back(
        {i, discriminate(trajectories[i], scene, ast, cfg).score});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const RankEntry& a, const RankEntry& b) {
                     return a.score > b.score;
                   });
  return entries;
}

}  // namespace motif
