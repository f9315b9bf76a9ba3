// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include <doctest.h>

#include "motif/eval.hpp"
#include "motif/generators.hpp"

using namespace motif;

TEST_CASE("evaluate counts the confusion by hand") {
  // TP=1 (index 0), FP=2 (indices 1 and 3), TN=1, FN=0.
  const int preds[] = {1, 1, 0, 1};
  const int labels[] = {1, 0, 0, 0};
  const Metrics m = evaluate(preds, labels);
  CHECK(m.confusion == Confusion{1, 2, 1, 0});
  REQUIRE(m.precision.has_value());
  CHECK(*m.precision == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  REQUIRE(m.recall.has_value());
  CHECK(*m.recall == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("perfect predictions score 1/1") {
  const int preds[] = {1, 0, 1, 0};
  const Metrics m = evaluate(preds, preds);
  CHECK(*m.precision == 1.0);
  CHECK(*m.recall == 1.0);
}

TEST_CASE("zero denominators report as absent, not zero") {
  const int preds[] = {0, 0, 0};
  const int labels[] = {1, 0, 1};
  const Metrics m = evaluate(preds, labels);
  CHECK_FALSE(m.precision.has_value());
  REQUIRE(m.recall.has_value());
  CHECK(*m.recall == 0.0);

  const int no_pos_labels[] = {0, 0, 0};
  const int one_pred[] = {1, 0, 0};
  const Metrics m2 = evaluate(one_pred, no_pos_labels);
  CHECK_FALSE(m2.recall.has_value());
  CHECK(*m2.precision == 0.0);
}

TEST_CASE("evaluate rejects bad input") {
  const int a[] = {1, 0};
  const int b[] = {1};
  CHECK_THROWS_AS(evaluate(a, b), Error);
  CHECK_THROWS_AS(evaluate({}, {}), Error);
  const int bad[] = {2, 0};
  CHECK_THROWS_AS(evaluate(bad, a), Error);
}

TEST_CASE("metrics are permutation invariant") {
  std::vector<int> preds, labels;
  gen::RandomStream rng(13);
  for (int i = 0; i < 64; ++i) {
    preds.push_back(static_cast<int>(rng.next_index(2)));
    labels.push_back(static_cast<int>(rng.next_index(2)));
  }
  const Metrics base = evaluate(preds, labels);
  std::vector<std::size_t> order(preds.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (int round = 0; round < 5; ++round) {
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng.next_index(i)]);
    }
    std::vector<int> p2, l2;
    for (std::size_t i : order) {
      p2.push_back(preds[i]);
      l2.push_back(labels[i]);
    }
    const Metrics shuffled = evaluate(p2, l2);
    CHECK(shuffled.confusion == base.confusion);
  }
}

TEST_CASE("category_report averages unweighted over categories") {
  std::vector<LabeledPrediction> rows;
  // Category A: precision 1/2, recall 1/1.
  rows.push_back({1, 1, "a"});
  rows.push_back({1, 0, "a"});
  rows.push_back({0, 0, "a"});
  // Category B: precision 1/1, recall 1/2.
  rows.push_back({1, 1, "b"});
  rows.push_back({0, 1, "b"});
  const CategoryReport report = category_report(rows);
  REQUIRE(report.per_category.size() == 2);
  CHECK(*report.per_category[0].second.precision == doctest::Approx(0.5));
  CHECK(*report.per_category[0].second.recall == doctest::Approx(1.0));
  CHECK(*report.per_category[1].second.precision == doctest::Approx(1.0));
  CHECK(*report.per_category[1].second.recall == doctest::Approx(0.5));
  CHECK(*report.average_precision == doctest::Approx(0.75));
  CHECK(*report.average_recall == doctest::Approx(0.75));

  // One category: the average equals the category itself.
  std::vector<LabeledPrediction> solo(rows.begin(), rows.begin() + 3);
  const CategoryReport single = category_report(solo);
  CHECK(*single.average_precision == doctest::Approx(0.5));
  CHECK(*single.average_recall == doctest::Approx(1.0));

  // Two categories with identical confusions: the average equals either.
  std::vector<LabeledPrediction> twin;
  for (const char* cat : {"x", "y"}) {
    twin.push_back({1, 1, cat});
    twin.push_back({0, 1, cat});
    twin.push_back({1, 0, cat});
  }
  const CategoryReport twins = category_report(twin);
  CHECK(*twins.average_precision ==
        doctest::Approx(*twins.per_category[0].second.precision));
  CHECK(*twins.average_recall ==
        doctest::Approx(*twins.per_category[0].second.recall));
}
