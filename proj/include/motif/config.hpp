// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0
//
// Flat key=value configuration covering every calibration constant. Unknown
// keys are errors: a silent typo in a threshold would corrupt calibrations.

#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include "motif/analyzer.hpp"
#include "motif/render.hpp"

namespace motif {

struct Config {
  AnalyzerConfig analyzer;
  RenderConfig render;
  double theta_loop{0.9};
  int loop_budget{25};
  int n_neg{10};
  double image_size{512};
};

/// Lines of `key=value`; '#' starts a comment. Every key is validated
/// against its documented range.
Config parse_config(std::istream& in, const Config& base = {});
Config load_config(const std::filesystem::path& file, const Config& base = {});

}  // namespace motif
