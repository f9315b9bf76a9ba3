// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0
//
// Fine-tuning dataset construction: one positive sample per episode plus the
// n_neg least-similar motion descriptions as negatives, emitted as JSONL.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "motif/core.hpp"
#include "motif/similarity.hpp"

namespace motif {

struct Sample {
  std::string episode_id;
  std::string image_path;
  std::string task_instruction;
  std::string motion_description;
  int label{1};
  std::string prompt;
  std::string category;

  friend bool operator==(const Sample&, const Sample&) = default;
};

/// Fixed question appended to every prompt.
extern const char* const kVqaQuestion;

std::string vqa_prompt(const std::string& task_instruction,
                       const std::string& motion_description);

/// One positive sample; the rendered representation must already exist.
Sample build_positive(const Episode& episode, const std::string& image_path);

/// The n_neg least-similar distinct descriptions from the pool, excluding
/// anything with similarity 1.0 to the episode's own description. Ascending
/// by similarity, ties broken lexicographically.
std::vector<std::string> mine_negatives(
    const Episode& episode, std::span<const std::string> corpus_descriptions,
    int n_neg, const dsl::SimilarityModel& model);

std::vector<std::string> mine_negatives(
    const Episode& episode, std::span<const std::string> corpus_descriptions,
    int n_neg);

/// All samples for a corpus, ordered by episode id, positive first then the
/// mined negatives in order. image_path_of maps an episode to its rendered
/// representation.
std::vector<Sample> build_dataset(
    std::span<const Episode> corpus,
    const std::function<std::string(const Episode&)>& image_path_of,
    int n_neg = 10);

/// JSONL, one sample per line, stable field order; identical inputs produce
/// identical bytes.
void emit_dataset(std::span<const Sample> samples,
                  const std::filesystem::path& file);
std::vector<Sample> read_dataset(const std::filesystem::path& file);

struct SplitResult {
  std::vector<Episode> train, val, test;
};

/// Seeded shuffle partition, stratified per category. Ratios must sum to 1.
SplitResult split_corpus(std::span<const Episode> corpus,
                         std::array<double, 3> ratios, std::uint64_t seed);

}  // namespace motif
