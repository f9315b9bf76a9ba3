// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#include "motif/similarity.hpp"

#include <cctype>
#include <cmath>
#include <set>

#include "motif/error.hpp"

namespace motif::dsl {

std::vector<std::string> tokenize_words(std::string_view text) {
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

SimilarityModel SimilarityModel::from_corpus(
    std::span<const std::string> documents) {
  std::map<std::string, int> df;
  for (const std::string& doc : documents) {
    std::set<std::string> seen;
    for (std::string& token : tokenize_words(doc)) {
      seen.insert(std::move(token));
    }
    for (const std::string& token : seen) ++df[token];
  }
  SimilarityModel model;
  const double n = static_cast<double>(documents.size());
  for (const auto& [token, count] : df) {
    model.idf_[token] = std::log((1.0 + n) / (1.0 + count)) + 1.0;
  }
  model.default_idf_ = std::log(1.0 + n) + 1.0;
  return model;
}

SimilarityModel SimilarityModel::from_pair(const std::string& a,
                                           const std::string& b) {
  const std::string docs[] = {a, b};
  return from_corpus(docs);
}

double SimilarityModel::idf(const std::string& token) const {
  const auto it = idf_.find(token);
  return it != idf_.end() ? it->second : default_idf_;
}

double SimilarityModel::similarity(const std::string& a,
                                   const std::string& b) const {
  if (a.empty() || b.empty()) {
    raise("invalid-argument", "similarity of empty description");
  }
  std::map<std::string, int> tf_a, tf_b;
  for (const std::string& t : tokenize_words(a)) ++tf_a[t];
  for (const std::string& t : tokenize_words(b)) ++tf_b[t];
  if (tf_a == tf_b) return 1.0;  // identical token multisets, exactly 1

  double dot = 0, norm_a = 0, norm_b = 0;
  for (const auto& [token, count] : tf_a) {
    const double w = count * idf(token);
    norm_a += w * w;
    const auto it = tf_b.find(token);
    if (it != tf_b.end()) dot += w * it->second * idf(token);
  }
  for (const auto& [token, count] : tf_b) {
    const double w = count * idf(token);
    norm_b += w * w;
  }
  if (norm_a <= 0 || norm_b <= 0) return 0;
  const double value = dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
  return std::min(1.0, std::max(0.0, value));
}

double description_similarity(const std::string& a, const std::string& b) {
  return SimilarityModel::from_pair(a, b).similarity(a, b);
}

}  // namespace motif::dsl
