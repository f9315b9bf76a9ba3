// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace motif::dsl {

/// Lowercase alphanumeric word tokens.
std::vector<std::string> tokenize_words(std::string_view text);

/// TF-IDF cosine similarity between motion descriptions. The IDF table is
/// built once over the corpus in use and shared read-only afterwards.
///
/// tf = raw count, idf = ln((1 + N) / (1 + df)) + 1 (smoothed so tokens
/// shared by every document still carry weight and a two-document corpus
/// never produces a zero vector).
class SimilarityModel {
 public:
  static SimilarityModel from_corpus(std::span<const std::string> documents);
  /// Convenience model over exactly {a, b}.
  static SimilarityModel from_pair(const std::string& a, const std::string& b);

  /// Symmetric, in [0, 1]; similarity(a, a) == 1 for non-empty a.
  [[nodiscard]] double similarity(const std::string& a,
                                  const std::string& b) const;

  [[nodiscard]] double idf(const std::string& token) const;

 private:
  std::map<std::string, double> idf_;
  double default_idf_{1.0};  // unseen tokens (df = 0)
};

/// Similarity over the two-document corpus {a, b}.
double description_similarity(const std::string& a, const std::string& b);

}  // namespace motif::dsl
