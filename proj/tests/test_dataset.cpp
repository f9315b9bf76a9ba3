// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>
#include <set>

#include <doctest.h>

#include "motif/dataset.hpp"
#include "motif/generators.hpp"

using namespace motif;

namespace {

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "motif_dataset_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string touch_image(const std::filesystem::path& dir,
                        const std::string& name) {
  const auto path = dir / name;
  std::ofstream(path) << "png";
  return path.string();
}

Episode episode_with(const std::string& id, const std::string& description,
                     const std::string& category = "draw path") {
  Episode ep;
  ep.id = id;
  ep.task_instruction = "draw the path";
  ep.motion_description = description;
  ep.category = category;
  KeypointTrack track;
  track.samples = {{0, 0, 0}, {1, 10, 10}};
  ep.trajectory.tracks.push_back(std::move(track));
  return ep;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("build_positive carries the fixed question verbatim") {
  const auto dir = scratch_dir();
  const std::string image = touch_image(dir, "ep-1_keypoint.png");
  const Episode ep = episode_with("ep-1", "move upward");
  const Sample sample = build_positive(ep, image);
  CHECK(sample.label == 1);
  CHECK(sample.episode_id == "ep-1");
  CHECK(sample.motion_description == "move upward");
  const std::string question =
      "Is the agent following the motion description or not? Express the "
      "answer as 1 or 0.";
  REQUIRE(sample.prompt.size() >= question.size());
  CHECK(sample.prompt.substr(sample.prompt.size() - question.size()) ==
        question);

  try {
    build_positive(ep, (dir / "missing.png").string());
    FAIL("expected missing-artifact");
  } catch (const Error& e) {
    CHECK(e.code() == "missing-artifact");
  }
}

TEST_CASE("mine_negatives prefers the least similar descriptions") {
  const Episode ep = episode_with("ep-1", "move upward");
  const std::vector<std::string> pool = {
      "move upward and to the right",
      "make a circular motion clockwise",
      "move upward",
  };
  // The disjoint-token description is least similar by the TF-IDF oracle.
  const auto negatives = mine_negatives(ep, pool, 1);
  REQUIRE(negatives.size() == 1);
  CHECK(negatives[0] == "make a circular motion clockwise");

  // Deterministic across calls.
  CHECK(mine_negatives(ep, pool, 1) == negatives);

  // Exactly 11 distinct descriptions including our own: the other 10 come
  // back, least similar first.
  std::vector<std::string> eleven = {
      "move upward",
      "move downward",
      "move to the left",
      "move to the right",
      "make a circular motion clockwise",
      "make 2 circular motions counter-clockwise",
      "move up and down 4 times",
      "move side to side 2 times",
      "move downward and to the right following a convex curve",
      "make a detour to the right of the manhole",
      "move to the left while making vertical oscillations",
  };
  const auto ten = mine_negatives(ep, eleven, 10);
  CHECK(ten.size() == 10);
  for (const std::string& d : ten) CHECK(d != "move upward");

  try {
    mine_negatives(ep, pool, 10);
    FAIL("expected corpus-too-small");
  } catch (const Error& e) {
    CHECK(e.code() == "corpus-too-small");
  }
}

TEST_CASE("build_dataset emits 1 + n_neg samples per episode") {
  const auto dir = scratch_dir();
  std::vector<Episode> corpus;
  const std::vector<std::string> descriptions = {
      "move upward",
      "move downward",
      "move to the left",
      "make a circular motion clockwise",
      "move up and down 4 times",
  };
  for (std::size_t i = 0; i < descriptions.size(); ++i) {
    const std::string id = "ep-" + std::to_string(i);
    corpus.push_back(episode_with(id, descriptions[i]));
    touch_image(dir, id + "_keypoint.png");
  }
  const auto image_of = [&](const Episode& ep) {
    return (dir / (ep.id + "_keypoint.png")).string();
  };
  const auto samples = build_dataset(corpus, image_of, 3);
  CHECK(samples.size() == corpus.size() * 4);
  for (std::size_t i = 0; i < samples.size(); i += 4) {
    CHECK(samples[i].label == 1);
    for (std::size_t k = 1; k < 4; ++k) {
      CHECK(samples[i + k].label == 0);
      CHECK(samples[i + k].motion_description !=
            samples[i].motion_description);
      CHECK(samples[i + k].episode_id == samples[i].episode_id);
    }
  }
}

TEST_CASE("emit_dataset round-trips and is byte-stable") {
  const auto dir = scratch_dir();
  touch_image(dir, "a_keypoint.png");
  touch_image(dir, "b_keypoint.png");
  std::vector<Episode> corpus = {
      episode_with("a", "move upward"),
      episode_with("b", "make a circular motion clockwise"),
  };
  const auto image_of = [&](const Episode& ep) {
    return (dir / (ep.id + "_keypoint.png")).string();
  };
  const auto samples = build_dataset(corpus, image_of, 1);
  emit_dataset(samples, dir / "data.jsonl");
  const auto back = read_dataset(dir / "data.jsonl");
  REQUIRE(back.size() == samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    CHECK(back[i] == samples[i]);
  }
  emit_dataset(samples, dir / "data2.jsonl");
  CHECK(read_file(dir / "data.jsonl") == read_file(dir / "data2.jsonl"));
}

TEST_CASE("split_corpus is seeded, stratified and exhaustive") {
  std::vector<Episode> corpus;
  for (int i = 0; i < 20; ++i) {
    corpus.push_back(episode_with("ep-" + std::to_string(i),
                                  "move upward",
                                  i % 2 == 0 ? "shake" : "stir"));
  }
  const SplitResult a = split_corpus(corpus, {0.5, 0.25, 0.25}, 7);
  const SplitResult b = split_corpus(corpus, {0.5, 0.25, 0.25}, 7);
  CHECK(a.train.size() == 10);
  // Per category: 10 * (0.5, 0.25, 0.25) = (5, 2.5, 2.5); the remainder tie
  // goes to the earlier split, so val takes the extra episode.
  CHECK(a.val.size() == 6);
  CHECK(a.test.size() == 4);
  auto ids = [](const std::vector<Episode>& v) {
    std::vector<std::string> out;
    for (const Episode& ep : v) out.push_back(ep.id);
    return out;
  };
  CHECK(ids(a.train) == ids(b.train));
  CHECK(ids(a.val) == ids(b.val));
  CHECK(ids(a.test) == ids(b.test));

  // Stratification: each category splits 5/2.5/2.5 -> 5/2or3/...
  int shake_train = 0;
  for (const Episode& ep : a.train) {
    if (ep.category == "shake") ++shake_train;
  }
  CHECK(shake_train == 5);

  const SplitResult all = split_corpus(corpus, {1.0, 0.0, 0.0}, 3);
  CHECK(all.train.size() == corpus.size());
  CHECK(all.val.empty());
  CHECK(all.test.empty());

  try {
    split_corpus(corpus, {0.5, 0.2, 0.2}, 3);
    FAIL("expected invalid-argument");
  } catch (const Error& e) {
    CHECK(e.code() == "invalid-argument");
  }
}

TEST_CASE("no negative ever equals its episode's own description") {
  const auto corpus = gen::synthetic_corpus(24, 77);
  const auto dir = scratch_dir();
  for (const Episode& ep : corpus) touch_image(dir, ep.id + ".png");
  const auto image_of = [&](const Episode& ep) {
    return (dir / (ep.id + ".png")).string();
  };
  const auto samples = build_dataset(corpus, image_of, 5);
  std::set<std::string> own;
  for (const Episode& ep : corpus) {
    own.insert(ep.id + "|" + ep.motion_description);
  }
  for (const Sample& sample : samples) {
    if (sample.label == 0) {
      CHECK_FALSE(own.contains(sample.episode_id + "|" +
                               sample.motion_description));
    }
  }
}
