// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0
//
// Controlled motion-description language: a closed vocabulary of path-shape
// primitives (translate / curve / rotate / oscillate / repeat) and grounding
// clauses (move over / detour / closer-farther / follow path / avoid).
// Descriptions are sequences of steps ("then"), each step a primary clause
// plus simultaneous modifiers ("while ...").

#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "motif/error.hpp"

namespace motif::dsl {

enum class Direction {
  kUp,
  kDown,
  kLeft,
  kRight,
  kUpLeft,
  kUpRight,
  kDownLeft,
  kDownRight,
  kForward,
};

enum class Convexity { kConvex, kConcave };
enum class TurnDirection { kClockwise, kCounterClockwise };
enum class Axis { kHorizontal, kVertical, kDiagonal, kBackAndForth };
enum class Side { kLeft, kRight };
enum class TrendAttribute { kRadius, kStartHeight };
enum class TrendDirection { kIncreasing, kDecreasing };

struct Step;

struct Translate {
  Direction direction{Direction::kUp};
  friend bool operator==(const Translate&, const Translate&) = default;
};

struct CurveShape {
  std::optional<Direction> direction;  // absent for bare "follow a convex curve"
  Convexity convexity{Convexity::kConvex};
  friend bool operator==(const CurveShape&, const CurveShape&) = default;
};

struct Rotate {
  TurnDirection direction{TurnDirection::kClockwise};
  int count{1};
  friend bool operator==(const Rotate&, const Rotate&) = default;
};

struct Oscillate {
  Axis axis{Axis::kVertical};
  std::optional<int> count;  // unset = "several" (at least two swings)
  friend bool operator==(const Oscillate&, const Oscillate&) = default;
};

struct RepeatSequence {
  std::vector<Step> steps;
  int count{1};
  friend bool operator==(const RepeatSequence&, const RepeatSequence&);
};

struct MoveOver {
  std::string object;
  friend bool operator==(const MoveOver&, const MoveOver&) = default;
};

struct Detour {
  std::optional<std::string> object;  // "make a detour to the left" has none
  Side side{Side::kLeft};
  friend bool operator==(const Detour&, const Detour&) = default;
};

struct DistanceTrend {
  std::string object;
  bool closer{true};  // false = farther
  friend bool operator==(const DistanceTrend&, const DistanceTrend&) = default;
};

struct FollowPath {
  std::string object;
  friend bool operator==(const FollowPath&, const FollowPath&) = default;
};

struct Avoid {
  std::string object;
  friend bool operator==(const Avoid&, const Avoid&) = default;
};

/// "in a straight line" / "in the shortest path": asserts the motion has no
/// oscillation and near-unit sinuosity.
struct StraightLine {
  friend bool operator==(const StraightLine&, const StraightLine&) = default;
};

/// "gradually increasing the radius of the circle", "increasing the starting
/// height of each stroke".
struct Trend {
  TrendAttribute attribute{TrendAttribute::kRadius};
  TrendDirection direction{TrendDirection::kIncreasing};
  friend bool operator==(const Trend&, const Trend&) = default;
};

/// Annotations with no 2D-trajectory observable (e.g. wrist-roll "alternating
/// rotations"); parsed, listed, and treated as satisfied.
struct Unobservable {
  std::string text;
  friend bool operator==(const Unobservable&, const Unobservable&) = default;
};

using Clause = std::variant<Translate, CurveShape, Rotate, Oscillate,
                            RepeatSequence, MoveOver, Detour, DistanceTrend,
                            FollowPath, Avoid, StraightLine, Trend,
                            Unobservable>;

struct Step {
  Clause primary;
  std::vector<Clause> modifiers;
  friend bool operator==(const Step&, const Step&);
};

struct MotionAst {
  std::vector<Step> steps;
  friend bool operator==(const MotionAst&, const MotionAst&);
};

// ---- Synonym vocabulary ----------------------------------------------------

/// Phrase-rewrite table applied to the token stream before parsing. Shipped
/// as a versioned data file (one `phrase => replacement` per line); the
/// builtin table mirrors that file.
class Vocabulary {
 public:
  static const Vocabulary& builtin();
  static Vocabulary load(const std::filesystem::path& file);
  static Vocabulary from_lines(std::span<const std::string> lines);

  [[nodiscard]] const std::vector<std::pair<std::vector<std::string>,
                                            std::vector<std::string>>>&
  rules() const {
    return rules_;
  }

 private:
  // Longest-phrase-first rewrite rules over lowercase tokens.
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
      rules_;
};

// ---- Operations ------------------------------------------------------------

/// Parses a motion description. Case-insensitive; "then"/commas sequence
/// steps; "while ..." attaches modifiers; counts accept digits and number
/// words. Throws unparseable-token (carrying the offending span) or
/// invalid-argument for empty input.
MotionAst parse_description(std::string_view text);
MotionAst parse_description(std::string_view text, const Vocabulary& vocab);

/// Canonical lowercase rendering; parse(format(ast)) == ast structurally.
std::string format_description(const MotionAst& ast);
std::string format_clause(const Clause& clause);

std::string direction_name(Direction d);
Direction parse_direction_name(std::string_view name);

}  // namespace motif::dsl
