// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#include "motif/eval.hpp"

#include <algorithm>
#include <map>

#include "motif/error.hpp"

namespace motif {

Metrics evaluate(std::span<const int> predictions,
                 std::span<const int> labels) {
  if (predictions.size() != labels.size()) {
    raise("invalid-argument", "predictions and labels differ in length");
  }
  if (predictions.empty()) raise("invalid-argument", "nothing to evaluate");
  Metrics out;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const int p = predictions[i];
    const int y = labels[i];
    if ((p != 0 && p != 1) || (y != 0 && y != 1)) {
      raise("invalid-argument", "predictions and labels must be 0 or 1");
    }
    if (p == 1 && y == 1) ++out.confusion.tp;
    if (p == 1 && y == 0) ++out.confusion.fp;
    if (p == 0 && y == 0) ++out.confusion.tn;
    if (p == 0 && y == 1) ++out.confusion.fn;
  }
  const long pd = out.confusion.tp + out.confusion.fp;
  const long rd = out.confusion.tp + out.confusion.fn;
  if (pd > 0) out.precision = static_cast<double>(out.confusion.tp) / pd;
  if (rd > 0) out.recall = static_cast<double>(out.confusion.tp) / rd;
  return out;
}

CategoryReport category_report(std::span<const LabeledPrediction> rows) {
  if (rows.empty()) raise("invalid-argument", "nothing to evaluate");
  std::map<std::string, std::pair<std::vector<int>, std::vector<int>>> groups;
  std::vector<int> all_predictions, all_labels;
  for (const LabeledPrediction& row : rows) {
    if (row.category.empty()) {
      raise("invalid-argument", "every sample needs a category");
    }
    groups[row.category].first.push_back(row.prediction);
    groups[row.category].second.push_back(row.label);
    all_predictions.push_back(row.prediction);
    all_labels.push_back(row.label);
  }
  CategoryReport report;
  report.overall = evaluate(all_predictions, all_labels);
  double precision_sum = 0, recall_sum = 0;
  int precision_n = 0, recall_n = 0;
  for (const auto& [category, data] : groups) {
    const Metrics m = evaluate(data.first, data.second);
    if (m.precision) {
      precision_sum += *m.precision;
      ++precision_n;
    }
    if (m.recall) {
      recall_sum += *m.recall;
      ++recall_n;
    }
    report.per_category.emplace_back(category, m);
  }
  if (precision_n > 0) report.average_precision = precision_sum / precision_n;
  if (recall_n > 0) report.average_recall = recall_sum / recall_n;
  return report;
}

}  // namespace motif
