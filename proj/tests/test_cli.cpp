// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "motif/core.hpp"
#include "motif/dataset.hpp"
#include "motif/png_io.hpp"

namespace {

namespace fs = std::filesystem;

struct Command {
  int exit_code{0};
  std::string output;  // stdout only
};

Command run_cli(const std::string& args) {
  const fs::path dir = fs::temp_directory_path() / "motif_cli_test";
  fs::create_directories(dir);
  const fs::path out = dir / "stdout.txt";
  const std::string command = std::string(MOTIF_CLI_PATH) + " " + args + " >" +
                              out.string() + " 2>" +
                              (dir / "stderr.txt").string();
  const int status = std::system(command.c_str());
  Command result;
  result.exit_code = WEXITSTATUS(status);
  std::ifstream in(out);
  result.output.assign((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  return result;
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "motif_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("no arguments prints usage and exits 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("generate then discriminate closes the loop") {
  const fs::path ep = scratch() / "vshake.json";
  const Command gen = run_cli("generate --kind vertical-shaking --frequency 2 "
                              "--out " + ep.string());
  REQUIRE(gen.exit_code == 0);
  const Command verdict = run_cli("discriminate --episode " + ep.string() +
                                  " --description \"move up and down 2 times\"");
  REQUIRE(verdict.exit_code == 0);
  const auto j = nlohmann::json::parse(verdict.output);
  CHECK(j.at("label") == 1);
  CHECK(j.at("score").get<double>() >= 0.7);

  const Command wrong = run_cli("discriminate --episode " + ep.string() +
                                " --description \"make a circular motion "
                                "clockwise\"");
  REQUIRE(wrong.exit_code == 0);
  CHECK(nlohmann::json::parse(wrong.output).at("label") == 0);

  // Without --description the episode's own description is scored.
  const Command own = run_cli("discriminate --episode " + ep.string());
  REQUIRE(own.exit_code == 0);
  CHECK(nlohmann::json::parse(own.output).at("label") == 1);
}

TEST_CASE("storyboard renders from frames on disk") {
  const fs::path dir = scratch();
  const fs::path frames_dir = dir / "frames";
  fs::create_directories(frames_dir);
  for (int i = 0; i < 6; ++i) {
    motif::Frame frame;
    frame.index = i;
    frame.width = 48;
    frame.height = 36;
    frame.pixels.assign(static_cast<std::size_t>(48) * 36 * 3,
                        static_cast<std::uint8_t>(30 + 40 * i));
    char name[32];
    std::snprintf(name, sizeof name, "frame_%06d.png", i);
    motif::write_png(frame, frames_dir / name);
  }
  const fs::path ep_path = dir / "boarded.json";
  REQUIRE(run_cli("generate --kind line --out " + ep_path.string()).exit_code ==
          0);
  motif::Episode ep = motif::load_episode(ep_path);
  ep.frames_dir = frames_dir.string();
  motif::save_episode(ep, ep_path);

  const fs::path out_dir = dir / "boards";
  const Command board = run_cli("render --episode " + ep_path.string() +
                                " --mode storyboard --n 4 --out-dir " +
                                out_dir.string());
  REQUIRE(board.exit_code == 0);
  const motif::Frame image =
      motif::read_png(out_dir / "boarded_storyboard.png");
  CHECK(image.width == 48 * 2);   // 2x2 grid of 48x36 cells + label strips
  CHECK(image.height == (36 + 9) * 2);
}

TEST_CASE("domain errors exit 1") {
  const Command missing = run_cli("discriminate --episode /nonexistent.json");
  CHECK(missing.exit_code == 1);
}

TEST_CASE("config typos fail fast with exit 1") {
  const fs::path cfg = scratch() / "bad.cfg";
  std::ofstream(cfg) << "thets = 0.8\n";
  const fs::path ep = scratch() / "line.json";
  REQUIRE(run_cli("generate --kind line --out " + ep.string()).exit_code == 0);
  const Command bad = run_cli("--config " + cfg.string() +
                              " discriminate --episode " + ep.string());
  CHECK(bad.exit_code == 1);
}

TEST_CASE("evaluate reproduces hand metrics from files") {
  const fs::path dir = scratch();
  const fs::path corpus = dir / "corpus";
  fs::create_directories(corpus);
  REQUIRE(run_cli("generate --kind mixed --count 12 --seed 4 --out-dir " +
                  corpus.string())
              .exit_code == 0);
  const fs::path dataset = dir / "data.jsonl";
  REQUIRE(run_cli("build-dataset --corpus " + corpus.string() + " --out " +
                  dataset.string() + " --n-neg 3")
              .exit_code == 0);
  const auto samples = motif::read_dataset(dataset);
  REQUIRE(samples.size() == 12 * 4);

  // Predict "its own label" for every sample except one forced false
  // positive and one forced false negative, then check the arithmetic.
  const fs::path preds = dir / "preds.jsonl";
  {
    std::ofstream out(preds);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      int label = samples[i].label;
      if (i == 0) label = 0;             // false negative
      if (samples[i].label == 0 && i < 3) label = 1;  // false positive(s)
      nlohmann::ordered_json j;
      j["episode_id"] = samples[i].episode_id;
      j["description"] = samples[i].motion_description;
      j["label"] = label;
      out << j.dump() << "\n";
    }
  }
  const Command eval = run_cli("evaluate --dataset " + dataset.string() +
                               " --predictions " + preds.string());
  REQUIRE(eval.exit_code == 0);
  const auto j = nlohmann::json::parse(eval.output);
  const long tp = j.at("confusion").at("tp").get<long>();
  const long fp = j.at("confusion").at("fp").get<long>();
  const long fn = j.at("confusion").at("fn").get<long>();
  CHECK(tp == 11);  // 12 positives, one flipped
  CHECK(fp == 2);   // samples 1 and 2 are negatives of episode 0
  CHECK(fn == 1);
  CHECK(j.at("precision").get<double>() ==
        doctest::Approx(11.0 / 13.0).epsilon(1e-9));
  CHECK(j.at("recall").get<double>() ==
        doctest::Approx(11.0 / 12.0).epsilon(1e-9));
}

TEST_CASE("MOTIF_CONFIG is the config-path fallback") {
  const fs::path cfg = scratch() / "env.cfg";
  std::ofstream(cfg) << "not_a_key = 1\n";
  const fs::path ep = scratch() / "envline.json";
  REQUIRE(run_cli("generate --kind line --out " + ep.string()).exit_code == 0);
  const fs::path out = scratch() / "env_stdout.txt";
  const std::string command = "MOTIF_CONFIG=" + cfg.string() + " " +
                              std::string(MOTIF_CLI_PATH) +
                              " discriminate --episode " + ep.string() + " >" +
                              out.string() + " 2>/dev/null";
  CHECK(WEXITSTATUS(std::system(command.c_str())) == 1);
}

TEST_CASE("generate is byte-deterministic") {
  const fs::path a = scratch() / "det_a.json";
  const fs::path b = scratch() / "det_b.json";
  REQUIRE(run_cli("generate --kind circle --revolutions 2 --noise-sigma 0.02 "
                  "--seed 9 --id det --out " + a.string()).exit_code == 0);
  REQUIRE(run_cli("generate --kind circle --revolutions 2 --noise-sigma 0.02 "
                  "--seed 9 --id det --out " + b.string()).exit_code == 0);
  std::ifstream fa(a), fb(b);
  const std::string sa((std::istreambuf_iterator<char>(fa)),
                       std::istreambuf_iterator<char>());
  const std::string sb((std::istreambuf_iterator<char>(fb)),
                       std::istreambuf_iterator<char>());
  CHECK(sa == sb);
  CHECK_FALSE(sa.empty());
}

TEST_CASE("render writes a deterministic PNG named id_mode.png") {
  const fs::path dir = scratch() / "render_out";
  const fs::path ep = scratch() / "arc.json";
  REQUIRE(run_cli("generate --kind arc --out " + ep.string()).exit_code == 0);
  const Command first =
      run_cli("render --episode " + ep.string() + " --mode keypoint --out-dir " +
              dir.string());
  REQUIRE(first.exit_code == 0);
  const fs::path png = dir / "arc_keypoint.png";
  REQUIRE(fs::exists(png));
  std::ifstream in1(png, std::ios::binary);
  const std::string bytes1((std::istreambuf_iterator<char>(in1)),
                           std::istreambuf_iterator<char>());
  REQUIRE(run_cli("render --episode " + ep.string() +
                  " --mode keypoint --out-dir " + dir.string())
              .exit_code == 0);
  std::ifstream in2(png, std::ios::binary);
  const std::string bytes2((std::istreambuf_iterator<char>(in2)),
                           std::istreambuf_iterator<char>());
  CHECK(bytes1 == bytes2);
}

TEST_CASE("rank orders a corpus by score") {
  const fs::path dir = scratch();
  const fs::path corpus = dir / "rank_corpus";
  fs::create_directories(corpus);
  REQUIRE(run_cli("generate --kind circle --out " +
                  (corpus / "circle.json").string()).exit_code == 0);
  REQUIRE(run_cli("generate --kind vertical-shaking --out " +
                  (corpus / "shake.json").string()).exit_code == 0);
  const Command rank = run_cli("rank --corpus " + corpus.string() +
                               " --description \"make a circular motion "
                               "clockwise\"");
  REQUIRE(rank.exit_code == 0);
  std::istringstream lines(rank.output);
  std::string line;
  std::vector<nlohmann::json> rows;
  while (std::getline(lines, line)) {
    if (!line.empty()) rows.push_back(nlohmann::json::parse(line));
  }
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].at("episode_id") == "circle");
  CHECK(rows[0].at("rank") == 1);
  CHECK(rows[0].at("score").get<double>() > rows[1].at("score").get<double>());

  // Output is independent of worker scheduling.
  const Command parallel = run_cli("--jobs 3 rank --corpus " + corpus.string() +
                                   " --description \"make a circular motion "
                                   "clockwise\"");
  REQUIRE(parallel.exit_code == 0);
  CHECK(parallel.output == rank.output);
}

TEST_CASE("refine CLI emits the trace as JSON lines") {
  const Command refine = run_cli(
      "refine --task \"sprinkle parsley on pizza\" --description \"move to "
      "the left while making vertical oscillations\" --budget 25");
  REQUIRE(refine.exit_code == 0);
  std::istringstream lines(refine.output);
  std::string line;
  std::vector<nlohmann::json> rows;
  while (std::getline(lines, line)) {
    if (!line.empty()) rows.push_back(nlohmann::json::parse(line));
  }
  REQUIRE(rows.size() >= 3);  // two turns + summary
  CHECK(rows.front().at("generator") == "horizontal-shaking");
  CHECK(rows.front().at("label") == 0);
  CHECK(rows.back().at("reason") == "accepted");
}
