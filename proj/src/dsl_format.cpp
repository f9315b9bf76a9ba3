// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include "motif/dsl.hpp"

namespace motif::dsl {

namespace {

std::string direction_phrase(Direction d) {
  switch (d) {
    case Direction::kUp: return "upward";
    case Direction::kDown: return "downward";
    case Direction::kLeft: return "to the left";
    case Direction::kRight: return "to the right";
    case Direction::kUpLeft: return "upward and to the left";
    case Direction::kUpRight: return "upward and to the right";
    case Direction::kDownLeft: return "downward and to the left";
    case Direction::kDownRight: return "downward and to the right";
    case Direction::kForward: return "forward";
  }
  return "upward";
}

std::string turn_name(TurnDirection d) {
  return d == TurnDirection::kClockwise ? "clockwise" : "counter-clockwise";
}

std::string convexity_name(Convexity c) {
  return c == Convexity::kConvex ? "convex" : "concave";
}

std::string axis_name(Axis a) {
  switch (a) {
    case Axis::kHorizontal: return "horizontal";
    case Axis::kVertical: return "vertical";
    case Axis::kDiagonal: return "diagonal";
    case Axis::kBackAndForth: return "back and forth";
  }
  return "vertical";
}

std::string times_suffix(int n) {
  return " " + std::to_string(n) + (n == 1 ? " time" : " times");
}

std::string format_step(const Step& step);
std::string format_steps(std::span<const Step> steps);

std::string imperative(const Clause& clause) {
  struct Visitor {
    std::string operator()(const Translate& c) const {
      return "move " + direction_phrase(c.direction);
    }
    std::string operator()(const CurveShape& c) const {
      if (c.direction) {
        return "move " + direction_phrase(*c.direction) + " following a " +
               convexity_name(c.convexity) + " curve";
      }
      return "follow a " + convexity_name(c.convexity) + " curve";
    }
    std::string operator()(const Rotate& c) const {
      if (c.count == 1) return "make a circular motion " + turn_name(c.direction);
      return "make " + std::to_string(c.count) + " circular motions " +
             turn_name(c.direction);
    }
    std::string operator()(const Oscillate& c) const {
      std::string text;
      switch (c.axis) {
        case Axis::kVertical: text = "move up and down"; break;
        case Axis::kHorizontal: text = "move side to side"; break;
        case Axis::kDiagonal:
        case Axis::kBackAndForth:
          text = c.count ? "make " + std::to_string(*c.count) + " " +
                               axis_name(c.axis) + " oscillations"
                         : "make " + axis_name(c.axis) + " oscillations";
          return text;
      }
      if (c.count) text += times_suffix(*c.count);
      return text;
    }
    std::string operator()(const RepeatSequence& c) const {
      return format_steps(c.steps) + ", repeating this sequence " +
             std::to_string(c.count) + (c.count == 1 ? " time" : " times");
    }
    std::string operator()(const MoveOver& c) const {
      return "move over the " + c.object;
    }
    std::string operator()(const Detour& c) const {
      std::string text = "make a detour to the ";
      text += c.side == Side::kLeft ? "left" : "right";
      if (c.object) text += " of the " + *c.object;
      return text;
    }
    std::string operator()(const DistanceTrend& c) const {
      return c.closer ? "get closer to the " + c.object
                      : "get farther from the " + c.object;
    }
    std::string operator()(const FollowPath& c) const {
      return "follow the " + c.object;
    }
    std::string operator()(const Avoid& c) const {
      return "avoid the " + c.object;
    }
    std::string operator()(const StraightLine&) const {
      return "move in a straight line";
    }
    std::string operator()(const Trend& c) const {
      const std::string verb =
          c.direction == TrendDirection::kIncreasing ? "increasing" : "decreasing";
      if (c.attribute == TrendAttribute::kRadius) {
        return "gradually " + verb + " the radius of the circle";
      }
      return verb + " the starting height of each stroke";
    }
    std::string operator()(const Unobservable& c) const {
      return "make " + c.text;
    }
  };
  return std::visit(Visitor{}, clause);
}

// Participial ("while ...") rendering of a modifier clause.
std::string gerund(const Clause& clause) {
  struct Visitor {
    std::string operator()(const Translate& c) const {
      return "moving " + direction_phrase(c.direction);
    }
    std::string operator()(const CurveShape& c) const {
      if (c.direction) {
        return "moving " + direction_phrase(*c.direction) + " following a " +
               convexity_name(c.convexity) + " curve";
      }
      return "following a " + convexity_name(c.convexity) + " curve";
    }
    std::string operator()(const Rotate& c) const {
      if (c.count == 1) return "making a circular motion " + turn_name(c.direction);
      return "making " + std::to_string(c.count) + " circular motions " +
             turn_name(c.direction);
    }
    std::string operator()(const Oscillate& c) const {
      if (c.count) {
        return "making " + std::to_string(*c.count) + " " + axis_name(c.axis) +
               " oscillations";
      }
      return "making " + axis_name(c.axis) + " oscillations";
    }
    std::string operator()(const RepeatSequence&) const {
      raise("invalid-argument", "a modifier cannot contain a repeated sequence");
    }
    std::string operator()(const MoveOver& c) const {
      return "moving over the " + c.object;
    }
    std::string operator()(const Detour& c) const {
      std::string text = "making a detour to the ";
      text += c.side == Side::kLeft ? "left" : "right";
      if (c.object) text += " of the " + *c.object;
      return text;
    }
    std::string operator()(const DistanceTrend& c) const {
      return c.closer ? "getting closer to the " + c.object
                      : "getting farther from the " + c.object;
    }
    std::string operator()(const FollowPath& c) const {
      return "following the " + c.object;
    }
    std::string operator()(const Avoid& c) const {
      return "avoiding the " + c.object;
    }
    std::string operator()(const StraightLine&) const { return ""; }
    std::string operator()(const Trend&) const { return ""; }
    std::string operator()(const Unobservable& c) const {
      return "making " + c.text;
    }
  };
  return std::visit(Visitor{}, clause);
}

std::string format_step(const Step& step) {
  std::string text = imperative(step.primary);
  for (const Clause& modifier : step.modifiers) {
    if (std::holds_alternative<StraightLine>(modifier)) {
      text += " in a straight line";
    } else if (std::holds_alternative<Trend>(modifier)) {
      text += ", " + imperative(modifier);
    } else {
      text += " while " + gerund(modifier);
    }
  }
  return text;
}

std::string format_steps(std::span<const Step> steps) {
  std::string text;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i > 0) {
      // A repeat wraps every preceding step of its sentence, so it must
      // start a sentence of its own to round-trip.
      if (std::holds_alternative<RepeatSequence>(steps[i].primary)) {
        text += ". ";
      } else {
        text += ", then ";
      }
    }
    text += format_step(steps[i]);
  }
  return text;
}

}  // namespace

std::string format_clause(const Clause& clause) { return imperative(clause); }

std::string format_description(const MotionAst& ast) {
  if (ast.steps.empty()) raise("invalid-argument", "empty AST");
  return format_steps(ast.steps);
}

std::string direction_name(Direction d) {
  switch (d) {
    case Direction::kUp: return "up";
    case Direction::kDown: return "down";
    case Direction::kLeft: return "left";
    case Direction::kRight: return "right";
    case Direction::kUpLeft: return "up-left";
    case Direction::kUpRight: return "up-right";
    case Direction::kDownLeft: return "down-left";
    case Direction::kDownRight: return "down-right";
    case Direction::kForward: return "forward";
  }
  return "up";
}

Direction parse_direction_name(std::string_view name) {
  if (name == "up") return Direction::kUp;
  if (name == "down") return Direction::kDown;
  if (name == "left") return Direction::kLeft;
  if (name == "right") return Direction::kRight;
  if (name == "up-left") return Direction::kUpLeft;
  if (name == "up-right") return Direction::kUpRight;
  if (name == "down-left") return Direction::kDownLeft;
  if (name == "down-right") return Direction::kDownRight;
  if (name == "forward") return Direction::kForward;
  raise("invalid-argument", "unknown direction '" + std::string(name) + "'");
}

}  // namespace motif::dsl
