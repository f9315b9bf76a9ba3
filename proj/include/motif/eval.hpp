// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0
//
// Precision/recall scoring of binary predictions against labels. Undefined
// ratios (zero denominators) report as absent, never as zero.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace motif {

struct Confusion {
  long tp{0}, fp{0}, tn{0}, fn{0};
  [[nodiscard]] long total() const { return tp + fp + tn + fn; }
  friend bool operator==(const Confusion&, const Confusion&) = default;
};

struct Metrics {
  std::optional<double> precision;  // tp / (tp + fp)
  std::optional<double> recall;     // tp / (tp + fn)
  Confusion confusion;
};

Metrics evaluate(std::span<const int> predictions, std::span<const int> labels);

struct LabeledPrediction {
  int prediction{0};
  int label{0};
  std::string category;
};

struct CategoryReport {
  std::vector<std::pair<std::string, Metrics>> per_category;  // sorted by name
  Metrics overall;
  // Unweighted means over categories with defined values.
  std::optional<double> average_precision;
  std::optional<double> average_recall;
};

CategoryReport category_report(std::span<const LabeledPrediction> rows);

}  // namespace motif
