// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#include "motif/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "motif/error.hpp"
#include "motif/generators.hpp"

namespace motif {

const char* const kVqaQuestion =
    "Is the agent following the motion description or not? Express the answer "
    "as 1 or 0.";

std::string vqa_prompt(const std::string& task_instruction,
                       const std::string& motion_description) {
  return "Task instruction: " + task_instruction +
         "\nMotion description: " + motion_description + "\n" + kVqaQuestion;
}

Sample build_positive(const Episode& episode, const std::string& image_path) {
  if (!std::filesystem::exists(image_path)) {
    raise("missing-artifact", "no rendered representation at " + image_path);
  }
  Sample sample;
  sample.episode_id = episode.id;
  sample.image_path = image_path;
  sample.task_instruction = episode.task_instruction;
  sample.motion_description = episode.motion_description;
  sample.label = 1;
  sample.prompt = vqa_prompt(episode.task_instruction, episode.motion_description);
  sample.category = episode.category;
  return sample;
}

std::vector<std::string> mine_negatives(
    const Episode& episode, std::span<const std::string> corpus_descriptions,
    int n_neg, const dsl::SimilarityModel& model) {
  if (n_neg < 1) raise("invalid-argument", "n_neg must be >= 1");
  std::set<std::string> distinct(corpus_descriptions.begin(),
                                 corpus_descriptions.end());
  std::vector<std::pair<double, std::string>> scored;
  for (const std::string& description : distinct) {
    const double sim = model.similarity(episode.motion_description, description);
    if (sim >= 1.0) continue;  // the episode's own description and paraphrases
    scored.emplace_back(sim, description);
  }
  if (static_cast<int>(scored.size()) < n_neg) {
    raise("corpus-too-small",
          "need " + std::to_string(n_neg - scored.size()) +
              " more distinct descriptions to mine " + std::to_string(n_neg) +
              " negatives");
  }
  std::sort(scored.begin(), scored.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return a.second < b.second;
            });
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n_neg));
  for (int i = 0; i < n_neg; ++i) out.push_back(scored[static_cast<std::size_t>(i)].second);
  return out;
}

std::vector<std::string> mine_negatives(
    const Episode& episode, std::span<const std::string> corpus_descriptions,
    int n_neg) {
  std::vector<std::string> pool(corpus_descriptions.begin(),
                                corpus_descriptions.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  const dsl::SimilarityModel model = dsl::SimilarityModel::from_corpus(pool);
  return mine_negatives(episode, pool, n_neg, model);
}

std::vector<Sample> build_dataset(
    std::span<const Episode> corpus,
    const std::function<std::string(const Episode&)>& image_path_of,
    int n_neg) {
  if (corpus.empty()) raise("invalid-argument", "empty corpus");
  std::vector<const Episode*> ordered;
  ordered.reserve(corpus.size());
  for (const Episode& ep : corpus) ordered.push_back(&ep);
  std::sort(ordered.begin(), ordered.end(),
            [](const Episode* a, const Episode* b) { return a->id < b->id; });

  std::vector<std::string> pool;
  pool.reserve(corpus.size());
  for (const Episode& ep : corpus) pool.push_back(ep.motion_description);
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  const dsl::SimilarityModel model = dsl::SimilarityModel::from_corpus(pool);

  std::vector<Sample> samples;
  samples.reserve(corpus.size() * (1 + static_cast<std::size_t>(n_neg)));
  for (const Episode* ep : ordered) {
    const std::string image_path = image_path_of(*ep);
    samples.push_back(build_positive(*ep, image_path));
    for (const std::string& negative :
         mine_negatives(*ep, pool, n_neg, model)) {
      Sample sample;
      sample.episode_id = ep->id;
      sample.image_path = image_path;
      sample.task_instruction = ep->task_instruction;
      sample.motion_description = negative;
      sample.label = 0;
      sample.prompt = vqa_prompt(ep->task_instruction, negative);
      sample.category = ep->category;
      samples.push_back(std::move(sample));
    }
  }
  return samples;
}

void emit_dataset(std::span<const Sample> samples,
                  const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) raise("unwritable-path", "cannot write " + file.string());
  for (const Sample& sample : samples) {
    nlohmann::ordered_json j;
    j["episode_id"] = sample.episode_id;
    j["image_path"] = sample.image_path;
    j["task_instruction"] = sample.task_instruction;
    j["motion_description"] = sample.motion_description;
    j["label"] = sample.label;
    j["prompt"] = sample.prompt;
    j["category"] = sample.category;
    out << j.dump() << "\n";
  }
}

std::vector<Sample> read_dataset(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) raise("missing-artifact", "cannot open " + file.string());
  std::vector<Sample> samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      raise("invalid-argument", "bad JSONL at line " + std::to_string(line_no) +
                                    ": " + e.what());
    }
    Sample sample;
    sample.episode_id = j.at("episode_id").get<std::string>();
    sample.image_path = j.value("image_path", "");
    sample.task_instruction = j.value("task_instruction", "");
    sample.motion_description = j.at("motion_description").get<std::string>();
    sample.label = j.at("label").get<int>();
    sample.prompt = j.value("prompt", "");
    sample.category = j.value("category", "");
    samples.push_back(std::move(sample));
  }
  return samples;
}

SplitResult split_corpus(std::span<const Episode> corpus,
                         std::array<double, 3> ratios, std::uint64_t seed) {
  if (corpus.empty()) raise("invalid-argument", "empty corpus");
  const double sum = ratios[0] + ratios[1] + ratios[2];
  if (std::abs(sum - 1.0) > 1e-9) {
    raise("invalid-argument", "split ratios must sum to 1");
  }
  for (double r : ratios) {
    if (r < 0) raise("invalid-argument", "split ratios must be non-negative");
  }

  std::map<std::string, std::vector<const Episode*>> by_category;
  for (const Episode& ep : corpus) by_category[ep.category].push_back(&ep);

  gen::RandomStream rng(seed);
  SplitResult out;
  for (auto& [category, members] : by_category) {
    std::sort(members.begin(), members.end(),
              [](const Episode* a, const Episode* b) { return a->id < b->id; });
    // Fisher-Yates with the shared stream keeps the partition reproducible.
    for (std::size_t i = members.size(); i > 1; --i) {
      const std::size_t j = rng.next_index(i);
      std::swap(members[i - 1], members[j]);
    }
    const std::size_t n = members.size();
    // Largest-remainder apportionment of n over the three ratios.
    std::array<std::size_t, 3> counts{};
    std::array<double, 3> remainders{};
    std::size_t assigned = 0;
    for (int k = 0; k < 3; ++k) {
      const double exact = ratios[static_cast<std::size_t>(k)] * n;
      counts[static_cast<std::size_t>(k)] = static_cast<std::size_t>(exact);
      remainders[static_cast<std::size_t>(k)] =
          exact - counts[static_cast<std::size_t>(k)];
      assigned += counts[static_cast<std::size_t>(k)];
    }
    while (assigned < n) {
      int best = 0;
      for (int k = 1; k < 3; ++k) {
        if (remainders[static_cast<std::size_t>(k)] >
            remainders[static_cast<std::size_t>(best)]) {
          best = k;
        }
      }
      ++counts[static_cast<std::size_t>(best)];
      remainders[static_cast<std::size_t>(best)] = -1;
      ++assigned;
    }
    std::size_t at = 0;
    for (std::size_t i = 0; i < counts[0]; ++i) out.train.push_back(*members[at++]);
    for (std::size_t i = 0; i < counts[1]; ++i) out.val.push_back(*members[at++]);
    for (std::size_t i = 0; i < counts[2]; ++i) out.test.push_back(*members[at++]);
  }
  return out;
}

}  // namespace motif
