// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0
//
// Recursive-descent parser for the motion-description language. The grammar
// is reconstructed from the published vocabulary: steps are sequenced by
// "then" / commas / sentence breaks, simultaneous clauses attach with
// "while <gerund>" or a comma followed by a participle, and "repeating this
// sequence N times" wraps the steps of the current sentence.

#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "motif/dsl.hpp"

namespace motif::dsl {

bool operator==(const RepeatSequence& a, const RepeatSequence& b) {
  return a.count == b.count && a.steps == b.steps;
}

bool operator==(const Step& a, const Step& b) {
  return a.primary == b.primary && a.modifiers == b.modifiers;
}

bool operator==(const MotionAst& a, const MotionAst& b) {
  return a.steps == b.steps;
}

namespace {

struct Token {
  std::string text;
  std::size_t begin{0};  // byte span in the original string
  std::size_t end{0};
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::string current;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    if (!current.empty()) {
      tokens.push_back({current, start, end});
      current.clear();
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isalnum(static_cast<unsigned char>(c))) {
      if (current.empty()) start = i;
      current.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (c == ',' || c == '.' || c == ';') {
      flush(i);
      tokens.push_back({",", i, i + 1});
      if (c == '.') tokens.back().text = ".";
    } else {
      // whitespace, hyphens, angle brackets, quotes: separators
      flush(i);
    }
  }
  flush(text.size());
  return tokens;
}

void apply_vocabulary(std::vector<Token>& tokens, const Vocabulary& vocab) {
  std::size_t pos = 0;
  while (pos < tokens.size()) {
    bool matched = false;
    for (const auto& [phrase, replacement] : vocab.rules()) {
      if (pos + phrase.size() > tokens.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < phrase.size(); ++k) {
        if (tokens[pos + k].text != phrase[k]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const std::size_t begin = tokens[pos].begin;
      const std::size_t end = tokens[pos + phrase.size() - 1].end;
      std::vector<Token> repl;
      repl.reserve(replacement.size());
      for (const std::string& word : replacement) {
        repl.push_back({word, begin, end});
      }
      tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(pos),
                   tokens.begin() + static_cast<std::ptrdiff_t>(pos + phrase.size()));
      tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(pos),
                    repl.begin(), repl.end());
      pos += repl.size();
      matched = true;
      break;
    }
    if (!matched) ++pos;
  }
}

const std::map<std::string, int>& number_words() {
  static const std::map<std::string, int> words = {
      {"one", 1}, {"two", 2},   {"three", 3}, {"four", 4},
      {"five", 5}, {"six", 6},  {"seven", 7}, {"eight", 8},
      {"nine", 9}, {"ten", 10}, {"eleven", 11}, {"twelve", 12}};
  return words;
}

bool is_gerund(const std::string& word) {
  static const std::set<std::string> gerunds = {
      "making",    "moving",    "getting",  "following", "avoiding",
      "increasing", "decreasing", "gradually", "closer",  "farther",
      "further"};
  return gerunds.contains(word);
}

bool is_imperative(const std::string& word) {
  static const std::set<std::string> verbs = {"move", "make", "get",
                                              "follow", "avoid"};
  return verbs.contains(word);
}

class Parser {
 public:
  Parser(std::string_view text, const Vocabulary& vocab) : text_(text) {
    tokens_ = tokenize(text);
    apply_vocabulary(tokens_, vocab);
  }

  MotionAst parse() {
    if (tokens_.empty()) raise("invalid-argument", "empty motion description");
    MotionAst ast;
    while (!at_end()) {
      if (accept(",") || accept(".")) continue;
      parse_sentence(ast.steps);
    }
    if (ast.steps.empty()) {
      raise("invalid-argument", "description has no clauses");
    }
    return ast;
  }

 private:
  [[nodiscard]] bool at_end() const { return pos_ >= tokens_.size(); }

  [[nodiscard]] const std::string& peek(std::size_t ahead = 0) const {
    static const std::string empty;
    return pos_ + ahead < tokens_.size() ? tokens_[pos_ + ahead].text : empty;
  }

  bool accept(std::string_view word) {
    if (peek() == word) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_seq(std::initializer_list<std::string_view> words) {
    std::size_t i = 0;
    for (std::string_view w : words) {
      if (peek(i) != w) return false;
      ++i;
    }
    pos_ += words.size();
    return true;
  }

  void expect(std::string_view word) {
    if (!accept(word)) fail("expected '" + std::string(word) + "'");
  }

  [[noreturn]] void fail(const std::string& why) const {
    const Token tok = pos_ < tokens_.size()
                          ? tokens_[pos_]
                          : Token{"<end>", text_.size(), text_.size()};
    raise("unparseable-token",
          why + " at '" + tok.text + "' (bytes " + std::to_string(tok.begin) +
              ".." + std::to_string(tok.end) + " of \"" + std::string(text_) +
              "\")");
  }

  // ---- sentences and steps -------------------------------------------------

  void parse_sentence(std::vector<Step>& steps) {
    const std::size_t sentence_start = steps.size();
    append_steps(steps, parse_step());
    while (!at_end()) {
      if (accept(".")) return;
      if (accept(",")) {
        if (at_end()) return;
        if (accept("then")) {
          accept(",");
          append_steps(steps, parse_step());
          continue;
        }
        if (peek() == "repeating") {
          parse_repeat_wrap(steps, sentence_start);
          continue;
        }
        if (accept("and")) {
          if (peek() == "then") {
            ++pos_;
            append_steps(steps, parse_step());
            continue;
          }
          if (is_imperative(peek())) {
            append_steps(steps, parse_step());
            continue;
          }
          attach_modifiers(steps.back());
          continue;
        }
        if (is_imperative(peek())) {
          append_steps(steps, parse_step());
          continue;
        }
        if (peek() == "while" || is_gerund(peek())) {
          attach_modifiers(steps.back());
          continue;
        }
        if (accept_seq({"in", "a", "straight", "line"})) {
          steps.back().modifiers.push_back(StraightLine{});
          continue;
        }
        fail("expected a step or modifier after ','");
      }
      if (accept_seq({"in", "a", "straight", "line"})) {
        steps.back().modifiers.push_back(StraightLine{});
        continue;
      }
      if (accept("then")) {
        accept(",");
        append_steps(steps, parse_step());
        continue;
      }
      if (accept("and")) {
        if (peek() == "then") {
          ++pos_;
          append_steps(steps, parse_step());
          continue;
        }
        if (is_imperative(peek())) {
          append_steps(steps, parse_step());
          continue;
        }
        attach_modifiers(steps.back());
        continue;
      }
      if (peek() == "while" || is_gerund(peek())) {
        attach_modifiers(steps.back());
        continue;
      }
      fail("expected 'then', ',' or end of description");
    }
  }

  static void append_steps(std::vector<Step>& steps, std::vector<Step> group) {
    for (Step& s : group) steps.push_back(std::move(s));
  }

  void parse_repeat_wrap(std::vector<Step>& steps, std::size_t sentence_start) {
    expect("repeating");
    expect("this");
    expect("sequence");
    const int count = require_count();
    if (!accept("times")) expect("time");
    if (steps.size() <= sentence_start) fail("nothing to repeat");
    RepeatSequence repeat;
    repeat.count = count;
    repeat.steps.assign(steps.begin() + static_cast<std::ptrdiff_t>(sentence_start),
                        steps.end());
    steps.resize(sentence_start);
    steps.push_back(Step{Clause{std::move(repeat)}, {}});
  }

  // One grammatical step; opposite-direction pairs ("move to the right and to
  // the left") produce two steps.
  std::vector<Step> parse_step() {
    std::vector<Clause> primaries = parse_clause_group(/*participial=*/false);
    std::vector<Step> group;
    group.reserve(primaries.size());
    for (Clause& c : primaries) group.push_back(Step{std::move(c), {}});

    // Attachments bind to the last step of the group.
    while (!at_end()) {
      if (peek() == "while") {
        attach_modifiers(group.back());
        continue;
      }
      if (accept_seq({"in", "a", "straight", "line"})) {
        group.back().modifiers.push_back(StraightLine{});
        continue;
      }
      if (peek() == "following" && (peek(1) == "a" || peek(1) == "an")) {
        const Convexity conv = parse_curve_suffix();
        apply_curve(group.back(), conv);
        continue;
      }
      if (auto count = try_count_times()) {
        bind_count(group, *count);
        continue;
      }
      if (peek() == "and" && !is_direction_start(1) && peek(1) != "then" &&
          !is_imperative(peek(1)) && !peek(1).empty() && peek(1) != "," &&
          peek(1) != ".") {
        ++pos_;  // "and farther from the laptop", "and alternating rotations"
        attach_modifiers(group.back(), /*expect_while=*/false);
        continue;
      }
      break;
    }
    return group;
  }

  void attach_modifiers(Step& step, bool expect_while = true) {
    if (expect_while) accept("while");
    std::vector<Clause> clauses = parse_clause_group(/*participial=*/true);
    for (Clause& c : clauses) {
      if (std::holds_alternative<RepeatSequence>(c)) {
        fail("a modifier cannot contain a repeated sequence");
      }
      step.modifiers.push_back(std::move(c));
    }
    // Post-modifier attachments: "while making vertical oscillations 3 times",
    // "while moving downward following a convex curve".
    while (!at_end()) {
      if (auto count = try_count_times()) {
        set_count(step.modifiers.back(), *count);
        continue;
      }
      if (peek() == "following" && (peek(1) == "a" || peek(1) == "an")) {
        const Convexity conv = parse_curve_suffix();
        Clause& last = step.modifiers.back();
        if (auto* translate = std::get_if<Translate>(&last)) {
          last = CurveShape{translate->direction, conv};
        } else {
          step.modifiers.push_back(CurveShape{std::nullopt, conv});
        }
        continue;
      }
      break;
    }
  }

  // ---- clauses ---------------------------------------------------------------

  // Parses one clause plus any "and"-joined complements that continue it
  // ("vertical oscillations and alternating rotations").
  std::vector<Clause> parse_clause_group(bool participial) {
    std::vector<Clause> clauses = parse_clause(participial);
    while (peek() == "and" && is_complement_start(1)) {
      ++pos_;
      std::vector<Clause> more = parse_complement();
      for (Clause& c : more) clauses.push_back(std::move(c));
    }
    return clauses;
  }

  [[nodiscard]] bool is_complement_start(std::size_t ahead) const {
    const std::string& w = peek(ahead);
    if (w == "alternating") return true;
    if ((w == "vertical" || w == "horizontal" || w == "diagonal") &&
        (peek(ahead + 1) == "oscillations" || peek(ahead + 1) == "oscillation"))
      return true;
    if (w == "back" && peek(ahead + 1) == "and" && peek(ahead + 2) == "forth")
      return true;
    return false;
  }

  // A bare "making"-style complement without its own verb.
  std::vector<Clause> parse_complement() {
    if (accept_seq({"alternating", "rotations"})) {
      return {Unobservable{"alternating rotations"}};
    }
    if (auto osc = try_oscillation_noun(std::nullopt)) return {*osc};
    fail("expected an oscillation or rotation complement");
  }

  std::vector<Clause> parse_clause(bool participial) {
    const std::string& head = peek();
    if (head == "move" || head == "moving") return parse_move();
    if (head == "make" || head == "making") return parse_make();
    if (head == "get" || head == "getting") {
      ++pos_;
      return {parse_distance_trend()};
    }
    if (head == "closer" || head == "farther" || head == "further") {
      return {parse_distance_trend()};
    }
    if (head == "follow" || head == "following") {
      ++pos_;
      return parse_follow();
    }
    if (head == "avoid" || head == "avoiding") {
      ++pos_;
      return {Avoid{parse_object()}};
    }
    if (head == "gradually" || head == "increasing" || head == "decreasing") {
      return {parse_trend()};
    }
    (void)participial;
    fail("expected a motion clause");
  }

  std::vector<Clause> parse_move() {
    ++pos_;  // move / moving
    if (accept("over")) return {MoveOver{parse_object()}};
    if (accept_seq({"in", "a", "straight", "line"})) return {StraightLine{}};
    if (peek() == "closer" || peek() == "farther" || peek() == "further") {
      return {parse_distance_trend()};
    }
    // "move up and down [..]" and friends become oscillations.
    if (accept_seq({"up", "and", "down"}) ||
        accept_seq({"upward", "and", "downward"}) ||
        accept_seq({"upwards", "and", "downwards"})) {
      return {Oscillate{Axis::kVertical, std::nullopt}};
    }
    if (accept_seq({"side", "to", "side"})) {
      return {Oscillate{Axis::kHorizontal, std::nullopt}};
    }
    if (accept_seq({"back", "and", "forth"})) {
      return {Oscillate{Axis::kBackAndForth, std::nullopt}};
    }
    const std::optional<Direction> first = try_direction_phrase();
    if (!first) fail("expected a direction after 'move'");
    // "and <direction>" composes a diagonal or yields an opposite pair.
    if (peek() == "and" && is_direction_start(1)) {
      const std::size_t mark = pos_;
      ++pos_;
      const std::optional<Direction> second = try_direction_phrase();
      if (second) {
        if (auto composite = compose_directions(*first, *second)) {
          return {Translate{*composite}};
        }
        if (opposite_on_axis(*first, *second)) {
          return {Translate{*first}, Translate{*second}};
        }
        fail("cannot combine those two directions");
      }
      pos_ = mark;
    }
    return {Translate{*first}};
  }

  std::vector<Clause> parse_make() {
    ++pos_;  // make / making
    std::optional<int> count = try_count_value();
    if (accept("a") || accept("an")) count = count.value_or(1);
    if (peek() == "circular" &&
        (peek(1) == "motion" || peek(1) == "motions")) {
      pos_ += 2;
      const TurnDirection dir = parse_turn_direction();
      return {Rotate{dir, count.value_or(1)}};
    }
    if (accept("detour")) {
      expect("to");
      expect("the");
      const Side side = parse_side();
      std::optional<std::string> object;
      if (accept("of")) object = parse_object();
      return {Detour{object, side}};
    }
    if (accept("strokes") || accept("stroke")) {
      const std::optional<Direction> dir = try_direction_phrase();
      if (!dir) fail("expected a stroke direction");
      RepeatSequence repeat;
      repeat.count = count.value_or(1);
      repeat.steps.push_back(Step{Translate{*dir}, {}});
      return {Clause{std::move(repeat)}};
    }
    if (accept_seq({"alternating", "rotations"})) {
      return {Unobservable{"alternating rotations"}};
    }
    if (auto osc = try_oscillation_noun(count)) return {*osc};
    fail("expected a shape after 'make'");
  }

  std::optional<Clause> try_oscillation_noun(std::optional<int> count) {
    Axis axis;
    if (peek() == "vertical") {
      axis = Axis::kVertical;
    } else if (peek() == "horizontal") {
      axis = Axis::kHorizontal;
    } else if (peek() == "diagonal") {
      axis = Axis::kDiagonal;
    } else if (peek() == "back" && peek(1) == "and" && peek(2) == "forth") {
      axis = Axis::kBackAndForth;
      pos_ += 2;  // leaves "forth" to be consumed below
    } else {
      return std::nullopt;
    }
    ++pos_;
    if (!accept("oscillations") && !accept("oscillation")) {
      fail("expected 'oscillations'");
    }
    return Clause{Oscillate{axis, count}};
  }

  Clause parse_distance_trend() {
    bool closer;
    if (accept("closer")) {
      closer = true;
      accept("to");
    } else if (accept("farther") || accept("further")) {
      closer = false;
      accept("from");
      accept("to");
    } else {
      fail("expected 'closer' or 'farther'");
    }
    return DistanceTrend{parse_object(), closer};
  }

  std::vector<Clause> parse_follow() {
    if (peek() == "a" || peek() == "an") {
      const Convexity conv = parse_curve_body();
      return {CurveShape{std::nullopt, conv}};
    }
    return {FollowPath{parse_object()}};
  }

  Clause parse_trend() {
    accept("gradually");
    TrendDirection dir;
    if (accept("increasing")) {
      dir = TrendDirection::kIncreasing;
    } else if (accept("decreasing")) {
      dir = TrendDirection::kDecreasing;
    } else {
      fail("expected 'increasing' or 'decreasing'");
    }
    expect("the");
    if (accept("radius")) {
      // "of the circle"
      accept("of");
      accept("the");
      accept("circle");
      return Trend{TrendAttribute::kRadius, dir};
    }
    if (accept("starting")) {
      expect("height");
      accept("of");
      accept("each");
      accept("stroke");
      accept("strokes");
      return Trend{TrendAttribute::kStartHeight, dir};
    }
    fail("expected 'radius' or 'starting height'");
  }

  // "following a convex curve" after a translate.
  Convexity parse_curve_suffix() {
    expect("following");
    return parse_curve_body();
  }

  Convexity parse_curve_body() {
    if (!accept("a") && !accept("an")) fail("expected 'a' before curve");
    Convexity conv;
    if (accept("convex")) {
      conv = Convexity::kConvex;
    } else if (accept("concave")) {
      conv = Convexity::kConcave;
    } else {
      fail("expected 'convex' or 'concave'");
    }
    expect("curve");
    return conv;
  }

  static void apply_curve(Step& step, Convexity conv) {
    if (auto* translate = std::get_if<Translate>(&step.primary)) {
      step.primary = CurveShape{translate->direction, conv};
    } else {
      step.modifiers.push_back(CurveShape{std::nullopt, conv});
    }
  }

  TurnDirection parse_turn_direction() {
    if (accept("clockwise")) return TurnDirection::kClockwise;
    if (accept("counter")) {
      expect("clockwise");
      return TurnDirection::kCounterClockwise;
    }
    if (accept("counterclockwise")) return TurnDirection::kCounterClockwise;
    if (accept("anticlockwise")) return TurnDirection::kCounterClockwise;
    fail("expected a turn direction");
  }

  Side parse_side() {
    if (accept("left")) return Side::kLeft;
    if (accept("right")) return Side::kRight;
    fail("expected 'left' or 'right'");
  }

  // ---- directions ------------------------------------------------------------

  [[nodiscard]] bool is_direction_start(std::size_t ahead) const {
    const std::string& w = peek(ahead);
    if (w == "to" && peek(ahead + 1) == "the" &&
        (peek(ahead + 2) == "left" || peek(ahead + 2) == "right"))
      return true;
    static const std::set<std::string> dirs = {
        "up",   "upward",   "upwards",   "down", "downward", "downwards",
        "left", "leftward", "right",     "rightward", "forward", "forwards"};
    return dirs.contains(w);
  }

  std::optional<Direction> try_direction_phrase() {
    if (accept_seq({"to", "the", "left"})) return Direction::kLeft;
    if (accept_seq({"to", "the", "right"})) return Direction::kRight;
    if (accept("upward") || accept("upwards") || accept("up")) {
      return Direction::kUp;
    }
    if (accept("downward") || accept("downwards") || accept("down")) {
      return Direction::kDown;
    }
    if (accept("forward") || accept("forwards")) return Direction::kForward;
    if (accept("left") || accept("leftward")) return Direction::kLeft;
    if (accept("right") || accept("rightward")) return Direction::kRight;
    return std::nullopt;
  }

  static std::optional<Direction> compose_directions(Direction a, Direction b) {
    auto vertical = [](Direction d) {
      return d == Direction::kUp || d == Direction::kDown;
    };
    auto horizontal = [](Direction d) {
      return d == Direction::kLeft || d == Direction::kRight;
    };
    Direction v, h;
    if (vertical(a) && horizontal(b)) {
      v = a;
      h = b;
    } else if (vertical(b) && horizontal(a)) {
      v = b;
      h = a;
    } else {
      return std::nullopt;
    }
    if (v == Direction::kUp) {
      return h == Direction::kLeft ? Direction::kUpLeft : Direction::kUpRight;
    }
    return h == Direction::kLeft ? Direction::kDownLeft : Direction::kDownRight;
  }

  static bool opposite_on_axis(Direction a, Direction b) {
    return (a == Direction::kLeft && b == Direction::kRight) ||
           (a == Direction::kRight && b == Direction::kLeft) ||
           (a == Direction::kUp && b == Direction::kDown) ||
           (a == Direction::kDown && b == Direction::kUp);
  }

  // ---- counts and objects ------------------------------------------------------

  std::optional<int> try_count_value() {
    const std::string& w = peek();
    if (!w.empty() && std::isdigit(static_cast<unsigned char>(w[0]))) {
      ++pos_;
      return std::stoi(w);
    }
    const auto it = number_words().find(w);
    if (it != number_words().end()) {
      ++pos_;
      return it->second;
    }
    return std::nullopt;
  }

  int require_count() {
    if (auto n = try_count_value()) return *n;
    fail("expected a count");
  }

  // "<N> times" lookahead used by attachments.
  std::optional<int> try_count_times() {
    const std::size_t mark = pos_;
    if (auto n = try_count_value()) {
      if (accept("times") || accept("time")) return n;
      pos_ = mark;
    }
    return std::nullopt;
  }

  void bind_count(std::vector<Step>& group, int count) {
    // "N times" binds to the nearest preceding primitive; an opposite pair
    // ("move to the right and to the left 2 times") repeats the pair.
    if (group.size() >= 2 && group.back().modifiers.empty()) {
      RepeatSequence repeat;
      repeat.count = count;
      repeat.steps = std::move(group);
      group.clear();
      group.push_back(Step{Clause{std::move(repeat)}, {}});
      return;
    }
    Step& step = group.back();
    if (!step.modifiers.empty()) {
      set_count(step.modifiers.back(), count);
    } else {
      set_count(step.primary, count);
    }
  }

  void set_count(Clause& clause, int count) {
    if (auto* osc = std::get_if<Oscillate>(&clause)) {
      osc->count = count;
    } else if (auto* rot = std::get_if<Rotate>(&clause)) {
      rot->count = count;
    } else if (auto* rep = std::get_if<RepeatSequence>(&clause)) {
      rep->count = count;
    } else if (std::holds_alternative<Translate>(clause)) {
      RepeatSequence repeat;
      repeat.count = count;
      repeat.steps.push_back(Step{clause, {}});
      clause = std::move(repeat);
    } else {
      fail("'times' does not apply to this clause");
    }
  }

  std::string parse_object() {
    if (!accept("the")) {
      if (!accept("a")) accept("an");
    }
    static const std::set<std::string> stop = {
        ",",      ".",      "then",    "and",       "while",     "times",
        "time",   "making", "moving",  "getting",   "following", "avoiding",
        "repeating", "in",  "increasing", "decreasing", "gradually"};
    std::string object;
    while (!at_end() && !stop.contains(peek())) {
      if (!object.empty()) object.push_back(' ');
      object += peek();
      ++pos_;
    }
    if (object.empty()) fail("expected an object name");
    return object;
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_{0};
};

}  // namespace

MotionAst parse_description(std::string_view text, const Vocabulary& vocab) {
  bool blank = true;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      blank = false;
      break;
    }
  }
  if (blank) raise("invalid-argument", "empty motion description");
  return Parser(text, vocab).parse();
}

MotionAst parse_description(std::string_view text) {
  return parse_description(text, Vocabulary::builtin());
}

}  // namespace motif::dsl
