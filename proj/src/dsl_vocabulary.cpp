// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "motif/dsl.hpp"

namespace motif::dsl {

namespace {

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      current.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

// Mirrors data/vocabulary.txt; a unit test keeps the two in sync.
constexpr const char* kBuiltinTable = R"(
side to side movements => horizontal oscillations
side to side motions => horizontal oscillations
shaking movements => oscillations
shaking motions => oscillations
back and forth movements => back and forth oscillations
oscillating vertically => making vertical oscillations
oscillating horizontally => making horizontal oscillations
oscillating diagonally => making diagonal oscillations
passing over => moving over
pass over => move over
going over => moving over
go over => move over
avoiding moving over => avoiding
avoid moving over => avoid
avoiding going over => avoiding
avoid going over => avoid
avoiding collision with => avoiding
avoid collision with => avoid
avoiding collisions with => avoiding
getting away from => getting farther from
moving away from => getting farther from
in the shortest path => in a straight line
make a triangular motion => make a circular motion
make a square motion => make a circular motion
completely flip the object to the right and flip it back to its initial state => make a circular motion clockwise and make a circular motion counter clockwise
flip the object to the right => make a circular motion clockwise
flip the object to the left => make a circular motion counter clockwise
flip it back to its initial state => make a circular motion counter clockwise
shortly =>
completely =>
slowly =>
quickly =>
carefully =>
)";

Vocabulary parse_table(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return Vocabulary::from_lines(lines);
}

}  // namespace

Vocabulary Vocabulary::from_lines(std::span<const std::string> lines) {
  Vocabulary vocab;
  for (const std::string& raw : lines) {
    const std::string line = raw.substr(0, raw.find('#'));
    const auto arrow = line.find("=>");
    if (arrow == std::string::npos) continue;
    std::vector<std::string> match = split_words(line.substr(0, arrow));
    std::vector<std::string> replacement = split_words(line.substr(arrow + 2));
    if (match.empty()) continue;
    vocab.rules_.emplace_back(std::move(match), std::move(replacement));
  }
  // Longest-first so e.g. "avoiding moving over" wins over "moving over".
  std::stable_sort(vocab.rules_.begin(), vocab.rules_.end(),
                   [](const auto& a, const auto& b) {
                     return a.first.size() > b.first.size();
                   });
  return vocab;
}

const Vocabulary& Vocabulary::builtin() {
  static const Vocabulary vocab = [] {
    std::istringstream in(kBuiltinTable);
    return parse_table(in);
  }();
  return vocab;
}

Vocabulary Vocabulary::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) raise("missing-artifact", "cannot open vocabulary " + file.string());
  return parse_table(in);
}

}  // namespace motif::dsl
