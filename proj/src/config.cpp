#include <cctype>
// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#include "motif/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "motif/error.hpp"

namespace motif {

namespace {

double parse_number(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    raise("invalid-argument", "config key '" + key + "' needs a number, got '" +
                                  value + "'");
  }
}

int parse_int(const std::string& key, const std::string& value) {
  const double v = parse_number(key, value);
  if (v != static_cast<int>(v)) {
    raise("invalid-argument", "config key '" + key + "' needs an integer");
  }
  return static_cast<int>(v);
}

Rgb parse_rgb(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  int r, g, b;
  char c1, c2;
  if (!(in >> r >> c1 >> g >> c2 >> b) || c1 != ',' || c2 != ',' ||
      r < 0 || r > 255 || g < 0 || g > 255 || b < 0 || b > 255) {
    raise("invalid-argument",
          "config key '" + key + "' needs 'r,g,b' with 0..255 channels");
  }
  return {static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
          static_cast<std::uint8_t>(b)};
}

void check_range(const std::string& key, double v, double lo, double hi) {
  if (v < lo || v > hi) {
    raise("invalid-argument", "config key '" + key + "' must lie in [" +
                                  std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]");
  }
}

}  // namespace

Config parse_config(std::istream& in, const Config& base) {
  Config cfg = base;
  using Setter = std::function<void(const std::string&, const std::string&)>;
  const std::map<std::string, Setter> setters = {
      {"theta",
       [&](const std::string& k, const std::string& v) {
         cfg.analyzer.theta = parse_number(k, v);
         check_range(k, cfg.analyzer.theta, 0, 1);
       }},
      {"epsilon_amp",
       [&](const std::string& k, const std::string& v) {
         cfg.analyzer.epsilon_amp = parse_number(k, v);
         check_range(k, cfg.analyzer.epsilon_amp, 1e-6, 0.5);
       }},
      {"epsilon_slope",
       [&](const std::string& k, const std::string& v) {
         cfg.analyzer.epsilon_slope = parse_number(k, v);
         check_range(k, cfg.analyzer.epsilon_slope, 1e-6, 0.5);
       }},
      {"n_analysis",
       [&](const std::string& k, const std::string& v) {
         cfg.analyzer.n_analysis = parse_int(k, v);
         check_range(k, cfg.analyzer.n_analysis, 16, 65536);
       }},
      {"smoothing_window",
       [&](const std::string& k, const std::string& v) {
         cfg.analyzer.smoothing_window = parse_int(k, v);
         check_range(k, cfg.analyzer.smoothing_window, 1, 99);
       }},
      {"split_angle_deg",
       [&](const std::string& k, const std::string& v) {
         cfg.analyzer.split_angle_deg = parse_number(k, v);
         check_range(k, cfg.analyzer.split_angle_deg, 5, 180);
       }},
      {"split_sustain",
       [&](const std::string& k, const std::string& v) {
         cfg.analyzer.split_sustain = parse_int(k, v);
         check_range(k, cfg.analyzer.split_sustain, 1, 64);
       }},
      {"min_segment_frac",
       [&](const std::string& k, const std::string& v) {
         cfg.analyzer.min_segment_frac = parse_number(k, v);
         check_range(k, cfg.analyzer.min_segment_frac, 0, 0.5);
       }},
      {"grounding_margin",
       [&](const std::string& k, const std::string& v) {
         cfg.analyzer.grounding_margin = parse_number(k, v);
         check_range(k, cfg.analyzer.grounding_margin, 1e-4, 1);
       }},
      {"follow_margin",
       [&](const std::string& k, const std::string& v) {
         cfg.analyzer.follow_margin = parse_number(k, v);
         check_range(k, cfg.analyzer.follow_margin, 1e-4, 1);
       }},
      {"surplus_segment_penalty",
       [&](const std::string& k, const std::string& v) {
         cfg.analyzer.surplus_segment_penalty = parse_number(k, v);
         check_range(k, cfg.analyzer.surplus_segment_penalty, 0, 1);
       }},
      {"count_decay",
       [&](const std::string& k, const std::string& v) {
         cfg.analyzer.count_decay = parse_number(k, v);
         check_range(k, cfg.analyzer.count_decay, 0, 1);
       }},
      {"straight_ramp_lo",
       [&](const std::string& k, const std::string& v) {
         cfg.analyzer.straight_ramp_lo = parse_number(k, v);
         check_range(k, cfg.analyzer.straight_ramp_lo, 0, 1);
       }},
      {"straight_ramp_hi",
       [&](const std::string& k, const std::string& v) {
         cfg.analyzer.straight_ramp_hi = parse_number(k, v);
         check_range(k, cfg.analyzer.straight_ramp_hi, 0, 1);
       }},
      {"forward",
       [&](const std::string& k, const std::string& v) {
         (void)k;
         cfg.analyzer.forward = dsl::parse_direction_name(v);
       }},
      {"line_width",
       [&](const std::string& k, const std::string& v) {
         cfg.render.line_width = parse_int(k, v);
         check_range(k, cfg.render.line_width, 1, 64);
       }},
      {"endpoint_radius",
       [&](const std::string& k, const std::string& v) {
         cfg.render.endpoint_radius = parse_int(k, v);
         check_range(k, cfg.render.endpoint_radius, 1, 64);
       }},
      {"start_color",
       [&](const std::string& k, const std::string& v) {
         cfg.render.start_color = parse_rgb(k, v);
       }},
      {"end_color",
       [&](const std::string& k, const std::string& v) {
         cfg.render.end_color = parse_rgb(k, v);
       }},
      {"endpoint_color",
       [&](const std::string& k, const std::string& v) {
         cfg.render.endpoint_color = parse_rgb(k, v);
       }},
      {"label_strip",
       [&](const std::string& k, const std::string& v) {
         cfg.render.label_strip = parse_int(k, v);
         check_range(k, cfg.render.label_strip, 8, 64);
       }},
      {"resample_points",
       [&](const std::string& k, const std::string& v) {
         cfg.render.resample_points = parse_int(k, v);
         check_range(k, cfg.render.resample_points, 0, 65536);
       }},
      {"theta_loop",
       [&](const std::string& k, const std::string& v) {
         cfg.theta_loop = parse_number(k, v);
         check_range(k, cfg.theta_loop, 0, 1);
       }},
      {"loop_budget",
       [&](const std::string& k, const std::string& v) {
         cfg.loop_budget = parse_int(k, v);
         check_range(k, cfg.loop_budget, 1, 10000);
       }},
      {"n_neg",
       [&](const std::string& k, const std::string& v) {
         cfg.n_neg = parse_int(k, v);
         check_range(k, cfg.n_neg, 1, 1000);
       }},
      {"image_size",
       [&](const std::string& k, const std::string& v) {
         cfg.image_size = parse_number(k, v);
         check_range(k, cfg.image_size, 16, 16384);
       }},
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = line.substr(0, line.find('#'));
    const auto eq = stripped.find('=');
    std::string key = stripped.substr(0, eq == std::string::npos ? 0 : eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    if (key.empty()) {
      bool blank = true;
      for (char c : stripped) {
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      }
      if (blank) continue;
      raise("invalid-argument",
            "config line " + std::to_string(line_no) + " is not key=value");
    }
    std::string value = stripped.substr(eq + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    value.erase(value.find_last_not_of(" \t") + 1);
    const auto it = setters.find(key);
    if (it == setters.end()) {
      raise("invalid-argument", "unknown config key '" + key + "'");
    }
    it->second(key, value);
  }
  if (cfg.analyzer.straight_ramp_hi <= cfg.analyzer.straight_ramp_lo) {
    raise("invalid-argument", "straight_ramp_hi must exceed straight_ramp_lo");
  }
  return cfg;
}

Config load_config(const std::filesystem::path& file, const Config& base) {
  std::ifstream in(file);
  if (!in) raise("missing-artifact", "cannot open config " + file.string());
  return parse_config(in, base);
}

}  // namespace motif
