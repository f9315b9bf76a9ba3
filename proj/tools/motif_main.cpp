// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0
//
// motif — trajectory analysis and motion success detection toolkit.
// Subcommands: generate | render | discriminate | rank | build-dataset |
// evaluate | refine. Data goes to stdout, diagnostics to stderr; exit 0 on
// success, 1 on a domain error, 2 on a usage error.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "motif/analyzer.hpp"
#include "motif/config.hpp"
#include "motif/dataset.hpp"
#include "motif/eval.hpp"
#include "motif/generators.hpp"
#include "motif/loop.hpp"
#include "motif/png_io.hpp"
#include "motif/render.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

motif::Config resolve_config(const std::string& config_path) {
  motif::Config cfg;
  if (!config_path.empty()) return motif::load_config(config_path, cfg);
  if (const char* env = std::getenv("MOTIF_CONFIG")) {
    if (*env != '\0') return motif::load_config(env, cfg);
  }
  return cfg;
}

motif::AnalyzerConfig analyzer_for(const motif::Config& cfg,
                                   const motif::Episode& episode) {
  motif::AnalyzerConfig out = cfg.analyzer;
  if (!episode.heading.empty()) {
    out.forward = motif::dsl::parse_direction_name(episode.heading);
  }
  return out;
}

ordered_json verdict_json(const motif::Verdict& verdict) {
  ordered_json j;
  j["label"] = verdict.label;
  j["score"] = verdict.score;
  ordered_json clauses = ordered_json::array();
  for (const motif::ClauseScore& c : verdict.clause_scores) {
    ordered_json cj;
    cj["clause"] = c.clause;
    cj["score"] = c.score;
    cj["evidence"] = c.evidence;
    clauses.push_back(std::move(cj));
  }
  j["clauses"] = std::move(clauses);
  return j;
}

// Frames for rendering: the episode's frames_dir when present, otherwise a
// black canvas sized from the trajectory bounds.
std::vector<motif::Frame> frames_for(const motif::Episode& episode,
                                     double image_size) {
  std::vector<motif::Frame> frames;
  if (!episode.frames_dir.empty()) {
    for (int index = 0;; ++index) {
      char name[32];
      std::snprintf(name, sizeof name, "frame_%06d.png", index);
      const std::filesystem::path path =
          std::filesystem::path(episode.frames_dir) / name;
      if (!std::filesystem::exists(path)) break;
      motif::Frame frame = motif::read_png(path);
      frame.index = index;
      frames.push_back(std::move(frame));
    }
  }
  if (frames.empty()) {
    motif::Frame canvas;
    canvas.index = 0;
    canvas.width = static_cast<int>(image_size);
    canvas.height = static_cast<int>(image_size);
    canvas.pixels.assign(
        static_cast<std::size_t>(canvas.width) * canvas.height * 3, 0);
    frames.push_back(std::move(canvas));
  }
  return frames;
}

std::string render_episode(const motif::Episode& episode,
                           const std::string& mode, int storyboard_n,
                           const motif::Config& cfg,
                           const std::filesystem::path& out_dir) {
  const std::vector<motif::Frame> frames = frames_for(episode, cfg.image_size);
  motif::Frame image;
  if (mode == "keypoint") {
    image = motif::render_keypoint_overlay(
        frames.back(), episode.trajectory.poi_track(), cfg.render);
  } else if (mode == "flow") {
    image = motif::render_flow_overlay(frames.back(),
                                       episode.trajectory.tracks, cfg.render);
  } else if (mode == "storyboard") {
    image = motif::render_storyboard(frames, storyboard_n, cfg.render,
                                     /*seed=*/0);
  } else {
    motif::raise("invalid-argument", "unknown render mode '" + mode + "'");
  }
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path out = out_dir / (episode.id + "_" + mode + ".png");
  motif::write_png(image, out);
  return out.string();
}

// Deterministic per-episode parallelism: results land by index.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  const int workers = std::max(1, jobs);
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

int run(int argc, char** argv) {
  CLI::App app{"trajectory analysis and motion success detection toolkit",
               "motif"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file");
  int jobs = 1;
  app.add_option("--jobs", jobs, "parallel workers for corpus commands");

  // generate -----------------------------------------------------------------
  auto* generate = app.add_subcommand("generate", "emit synthetic episodes");
  std::string gen_kind = "line";
  generate->add_option("--kind", gen_kind,
                       "line|vertical-shaking|horizontal-shaking|circle|arc|"
                       "oscillating-translate|mixed");
  std::string gen_out;
  generate->add_option("--out", gen_out, "episode JSON file (single episode)");
  std::string gen_out_dir;
  generate->add_option("--out-dir", gen_out_dir,
                       "directory for --count > 1 or --kind mixed");
  int gen_count = 1;
  generate->add_option("--count", gen_count, "episodes to emit");
  std::uint64_t gen_seed = 0;
  generate->add_option("--seed", gen_seed, "deterministic stream seed");
  double gen_noise = 0;
  generate->add_option("--noise-sigma", gen_noise, "interior sample jitter");
  int gen_n = 16;
  generate->add_option("--n", gen_n, "samples per leg / revolution");
  std::vector<double> gen_start{0.0, 0.5};
  generate->add_option("--start", gen_start, "start x y (unit square)")
      ->expected(2);
  std::vector<double> gen_end{0.5, 1.0};
  generate->add_option("--end", gen_end, "end x y (unit square)")->expected(2);
  double gen_amplitude = 0.1;
  generate->add_option("--amplitude", gen_amplitude, "oscillation amplitude");
  int gen_frequency = 2;
  generate->add_option("--frequency", gen_frequency, "oscillation swings");
  double gen_radius = 0.2;
  generate->add_option("--radius", gen_radius, "circle radius");
  int gen_revolutions = 1;
  generate->add_option("--revolutions", gen_revolutions, "circle revolutions");
  std::string gen_turn = "clockwise";
  generate->add_option("--turn", gen_turn, "clockwise|counter-clockwise");
  std::string gen_convexity = "convex";
  generate->add_option("--convexity", gen_convexity, "convex|concave");
  double gen_bulge = 0.15;
  generate->add_option("--bulge", gen_bulge, "arc bulge");
  std::string gen_direction = "left";
  generate->add_option("--direction", gen_direction,
                       "travel direction for oscillating-translate");
  std::string gen_axis = "vertical";
  generate->add_option("--axis", gen_axis,
                       "vertical|horizontal|diagonal|back-and-forth");
  double gen_length = 0.5;
  generate->add_option("--length", gen_length, "travel distance");
  std::string gen_task;
  generate->add_option("--task", gen_task, "task instruction override");
  std::string gen_id;
  generate->add_option("--id", gen_id, "episode id override");
  std::optional<double> gen_time_dt;
  generate->add_option("--time-dt", gen_time_dt,
                       "replay interval metadata (never affects geometry)");

  // render ---------------------------------------------------------------------
  auto* render = app.add_subcommand("render", "rasterize a representation");
  std::string render_episode_path;
  render->add_option("--episode", render_episode_path, "episode JSON")
      ->required();
  std::string render_mode = "keypoint";
  render->add_option("--mode", render_mode, "keypoint|flow|storyboard");
  int render_n = 4;
  render->add_option("--n", render_n, "storyboard frames: 2, 4 or 9");
  std::string render_out_dir = ".";
  render->add_option("--out-dir", render_out_dir, "output directory");

  // discriminate ---------------------------------------------------------------
  auto* disc_cmd = app.add_subcommand(
      "discriminate", "score a motion description against an episode");
  std::string disc_episode;
  disc_cmd->add_option("--episode", disc_episode, "episode JSON")
      ->required();
  std::string disc_description;
  disc_cmd->add_option("--description", disc_description,
                           "motion description (default: the episode's own)");

  // rank -----------------------------------------------------------------------
  auto* rank_cmd = app.add_subcommand(
      "rank", "order a corpus by how well it matches a description");
  std::string rank_corpus;
  rank_cmd->add_option("--corpus", rank_corpus, "episode directory")
      ->required();
  std::string rank_description;
  rank_cmd->add_option("--description", rank_description, "motion description")
      ->required();

  // build-dataset -------------------------------------------------------------
  auto* build = app.add_subcommand(
      "build-dataset", "construct the VQA fine-tuning dataset");
  std::string build_corpus;
  build->add_option("--corpus", build_corpus, "episode directory")->required();
  std::string build_out;
  build->add_option("--out", build_out, "output JSONL")->required();
  int build_n_neg = -1;
  build->add_option("--n-neg", build_n_neg, "negatives per episode");
  std::string build_repr = "keypoint";
  build->add_option("--representation", build_repr,
                    "keypoint|flow|storyboard");
  std::string build_images;
  build->add_option("--images-dir", build_images,
                    "rendered representation directory");
  std::vector<double> build_split;
  build->add_option("--split", build_split, "train val test ratios")
      ->expected(3);
  std::uint64_t build_split_seed = 0;
  build->add_option("--split-seed", build_split_seed, "split shuffle seed");

  // evaluate -------------------------------------------------------------------
  auto* eval_cmd =
      app.add_subcommand("evaluate", "precision/recall of a predictions file");
  std::string eval_dataset;
  eval_cmd->add_option("--dataset", eval_dataset, "dataset JSONL")->required();
  std::string eval_predictions;
  eval_cmd->add_option("--predictions", eval_predictions,
                       "JSONL of {episode_id, description, label}")
      ->required();

  // refine ---------------------------------------------------------------------
  auto* refine_cmd = app.add_subcommand(
      "refine", "closed-loop policy refinement against the discriminator");
  std::string refine_task = "task";
  refine_cmd->add_option("--task", refine_task, "task instruction");
  std::string refine_description;
  refine_cmd->add_option("--description", refine_description,
                         "motion description")
      ->required();
  int refine_budget = -1;
  refine_cmd->add_option("--budget", refine_budget, "max evaluations");
  double refine_theta = -1;
  refine_cmd->add_option("--theta-loop", refine_theta,
                         "acceptance threshold");
  std::vector<std::string> refine_scene;
  refine_cmd->add_option("--scene-object", refine_scene,
                         "label:x0,y0,x1,y1 in unit coordinates (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  const motif::Config cfg = resolve_config(config_path);

  if (*generate) {
    motif::gen::GeneratorParams p;
    p.n = gen_n;
    p.start = {gen_start[0], gen_start[1]};
    p.end = {gen_end[0], gen_end[1]};
    p.amplitude = gen_amplitude;
    p.frequency = gen_frequency;
    p.radius = gen_radius;
    p.count = gen_revolutions;
    p.center = {0.5, 0.5};
    if (gen_turn == "counter-clockwise") {
      p.turn = motif::dsl::TurnDirection::kCounterClockwise;
    } else if (gen_turn == "clockwise") {
      p.turn = motif::dsl::TurnDirection::kClockwise;
    } else {
      motif::raise("invalid-argument", "unknown turn '" + gen_turn + "'");
    }
    p.convexity = gen_convexity == "concave" ? motif::dsl::Convexity::kConcave
                                             : motif::dsl::Convexity::kConvex;
    p.bulge = gen_bulge;
    p.direction = motif::dsl::parse_direction_name(gen_direction);
    if (gen_axis == "horizontal") {
      p.axis = motif::dsl::Axis::kHorizontal;
    } else if (gen_axis == "diagonal") {
      p.axis = motif::dsl::Axis::kDiagonal;
    } else if (gen_axis == "back-and-forth") {
      p.axis = motif::dsl::Axis::kBackAndForth;
    } else {
      p.axis = motif::dsl::Axis::kVertical;
    }
    p.length = gen_length;
    p.noise_sigma = gen_noise;
    p.time_dt = gen_time_dt;

    if (gen_kind == "mixed" || gen_count > 1) {
      if (gen_out_dir.empty()) {
        motif::raise("invalid-argument",
                     "--out-dir is required for batch generation");
      }
      std::filesystem::create_directories(gen_out_dir);
      const std::vector<motif::Episode> corpus = motif::gen::synthetic_corpus(
          gen_count, gen_seed, gen_noise, cfg.image_size);
      for (const motif::Episode& ep : corpus) {
        const std::filesystem::path out =
            std::filesystem::path(gen_out_dir) / (ep.id + ".json");
        motif::save_episode(ep, out);
        std::cout << out.string() << "\n";
      }
      return 0;
    }

    p.seed = gen_seed;
    motif::gen::Generated g;
    motif::gen::EpisodeOptions opts;
    opts.scale = cfg.image_size;
    if (gen_kind == "line") {
      g = motif::gen::gen_line(p);
    } else if (gen_kind == "vertical-shaking") {
      g = motif::gen::gen_vertical_shaking(p);
      opts.task = "shake the bottle";
      opts.category = "shake";
    } else if (gen_kind == "horizontal-shaking") {
      g = motif::gen::gen_horizontal_shaking(p);
      opts.task = "shake the bottle";
      opts.category = "shake";
    } else if (gen_kind == "circle") {
      g = motif::gen::gen_circle(p);
      opts.task = "stir the pot";
      opts.category = "stir";
    } else if (gen_kind == "arc") {
      g = motif::gen::gen_arc(p);
    } else if (gen_kind == "oscillating-translate") {
      g = motif::gen::gen_oscillating_translate(p);
      opts.task = "spread the condiment";
      opts.category = "spread condiment";
    } else {
      motif::raise("invalid-argument",
                   "unknown generator kind '" + gen_kind + "'");
    }
    if (!gen_task.empty()) opts.task = gen_task;
    if (gen_out.empty()) {
      motif::raise("invalid-argument", "--out is required");
    }
    const std::string id =
        gen_id.empty() ? std::filesystem::path(gen_out).stem().string()
                       : gen_id;
    motif::Episode ep = motif::gen::to_episode(id, g, opts);
    ep.time_dt = gen_time_dt;
    motif::save_episode(ep, gen_out);
    std::cout << gen_out << "\n";
    return 0;
  }

  if (*render) {
    const motif::Episode ep = motif::load_episode(render_episode_path);
    const std::string out =
        render_episode(ep, render_mode, render_n, cfg, render_out_dir);
    std::cout << out << "\n";
    return 0;
  }

  if (*disc_cmd) {
    const motif::Episode ep = motif::load_episode(disc_episode);
    const std::string description =
        disc_description.empty() ? ep.motion_description : disc_description;
    const motif::dsl::MotionAst ast = motif::dsl::parse_description(description);
    const motif::Verdict verdict = motif::discriminate(
        ep.trajectory, ep.scene, ast, analyzer_for(cfg, ep));
    std::cout << verdict_json(verdict).dump() << "\n";
    return 0;
  }

  if (*rank_cmd) {
    const std::vector<motif::Episode> corpus = motif::load_corpus(rank_corpus);
    if (corpus.empty()) {
      motif::raise("invalid-argument", "corpus directory has no episodes");
    }
    const motif::dsl::MotionAst ast =
        motif::dsl::parse_description(rank_description);
    std::vector<motif::Verdict> verdicts(corpus.size());
    std::vector<std::string> errors(corpus.size());
    parallel_for(corpus.size(), jobs, [&](std::size_t i) {
      try {
        verdicts[i] = motif::discriminate(corpus[i].trajectory,
                                          corpus[i].scene, ast,
                                          analyzer_for(cfg, corpus[i]));
      } catch (const motif::Error& e) {
        errors[i] = e.what();
      }
    });
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (!errors[i].empty()) {
        motif::raise("invalid-argument",
                     "episode " + corpus[i].id + ": " + errors[i]);
      }
    }
    std::vector<std::size_t> order(corpus.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return verdicts[a].score > verdicts[b].score;
                     });
    for (std::size_t r = 0; r < order.size(); ++r) {
      ordered_json j;
      j["rank"] = r + 1;
      j["episode_id"] = corpus[order[r]].id;
      j["score"] = verdicts[order[r]].score;
      j["label"] = verdicts[order[r]].label;
      std::cout << j.dump() << "\n";
    }
    return 0;
  }

  if (*build) {
    const std::vector<motif::Episode> corpus = motif::load_corpus(build_corpus);
    if (corpus.empty()) {
      motif::raise("invalid-argument", "corpus directory has no episodes");
    }
    const int n_neg = build_n_neg > 0 ? build_n_neg : cfg.n_neg;
    const std::filesystem::path images_dir =
        build_images.empty() ? std::filesystem::path(build_out + "_images")
                             : std::filesystem::path(build_images);
    std::vector<std::string> image_paths(corpus.size());
    parallel_for(corpus.size(), jobs, [&](std::size_t i) {
      image_paths[i] =
          render_episode(corpus[i], build_repr, 4, cfg, images_dir);
    });
    std::map<std::string, std::string> path_of;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      path_of[corpus[i].id] = image_paths[i];
    }
    const std::vector<motif::Sample> samples = motif::build_dataset(
        corpus,
        [&](const motif::Episode& ep) { return path_of.at(ep.id); }, n_neg);
    motif::emit_dataset(samples, build_out);
    {
      // Sidecar metadata; the dataset itself stays exactly one sample per
      // line.
      ordered_json meta;
      meta["episodes"] = corpus.size();
      meta["samples"] = samples.size();
      meta["n_neg"] = n_neg;
      meta["representation"] = build_repr;
      meta["similarity_backend"] = "tf-idf cosine over word tokens";
      std::ofstream meta_out(build_out + ".meta.json", std::ios::binary);
      meta_out << meta.dump(2) << "\n";
    }
    std::cerr << "wrote " << samples.size() << " samples for " << corpus.size()
              << " episodes\n";
    std::cout << build_out << "\n";
    if (!build_split.empty()) {
      const motif::SplitResult split = motif::split_corpus(
          corpus, {build_split[0], build_split[1], build_split[2]},
          build_split_seed);
      const auto emit_subset = [&](const std::vector<motif::Episode>& part,
                                   const std::string& suffix) {
        std::vector<motif::Sample> subset;
        std::set<std::string> ids;
        for (const motif::Episode& ep : part) ids.insert(ep.id);
        for (const motif::Sample& s : samples) {
          if (ids.contains(s.episode_id)) subset.push_back(s);
        }
        const std::string path = build_out + "." + suffix;
        motif::emit_dataset(subset, path);
        std::cout << path << "\n";
      };
      emit_subset(split.train, "train");
      emit_subset(split.val, "val");
      emit_subset(split.test, "test");
    }
    return 0;
  }

  if (*eval_cmd) {
    const std::vector<motif::Sample> samples =
        motif::read_dataset(eval_dataset);
    std::map<std::pair<std::string, std::string>, int> predictions;
    {
      std::ifstream in(eval_predictions);
      if (!in) {
        motif::raise("missing-artifact",
                     "cannot open predictions " + eval_predictions);
      }
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json j = json::parse(line);
        const std::string description =
            j.contains("description")
                ? j.at("description").get<std::string>()
                : j.at("motion_description").get<std::string>();
        predictions[{j.at("episode_id").get<std::string>(), description}] =
            j.at("label").get<int>();
      }
    }
    std::vector<motif::LabeledPrediction> rows;
    for (const motif::Sample& sample : samples) {
      const auto it = predictions.find(
          {sample.episode_id, sample.motion_description});
      if (it == predictions.end()) {
        motif::raise("invalid-argument",
                     "no prediction for episode " + sample.episode_id +
                         " description \"" + sample.motion_description + "\"");
      }
      rows.push_back({it->second, sample.label,
                      sample.category.empty() ? "all" : sample.category});
    }
    const motif::CategoryReport report = motif::category_report(rows);

    auto cell = [](const std::optional<double>& v) {
      return v ? std::to_string(*v).substr(0, 5) : std::string("null");
    };
    std::cerr << "category            precision  recall\n";
    for (const auto& [category, metrics] : report.per_category) {
      std::cerr << category;
      for (std::size_t i = category.size(); i < 20; ++i) std::cerr << ' ';
      std::cerr << cell(metrics.precision) << "      " << cell(metrics.recall)
                << "\n";
    }
    std::cerr << "average             " << cell(report.average_precision)
              << "      " << cell(report.average_recall) << "\n";

    ordered_json j;
    auto opt = [](const std::optional<double>& v) {
      return v ? ordered_json(*v) : ordered_json(nullptr);
    };
    j["precision"] = opt(report.overall.precision);
    j["recall"] = opt(report.overall.recall);
    j["confusion"] = {{"tp", report.overall.confusion.tp},
                      {"fp", report.overall.confusion.fp},
                      {"tn", report.overall.confusion.tn},
                      {"fn", report.overall.confusion.fn}};
    ordered_json categories = ordered_json::object();
    for (const auto& [category, metrics] : report.per_category) {
      categories[category] = {{"precision", opt(metrics.precision)},
                              {"recall", opt(metrics.recall)}};
    }
    j["categories"] = std::move(categories);
    j["average"] = {{"precision", opt(report.average_precision)},
                    {"recall", opt(report.average_recall)}};
    std::cout << j.dump() << "\n";
    return 0;
  }

  if (*refine_cmd) {
    motif::LoopConfig loop_cfg;
    loop_cfg.analyzer = cfg.analyzer;
    loop_cfg.theta_loop = refine_theta >= 0 ? refine_theta : cfg.theta_loop;
    loop_cfg.budget = refine_budget > 0 ? refine_budget : cfg.loop_budget;
    std::vector<motif::SceneObject> scene;
    for (const std::string& spec : refine_scene) {
      const auto colon = spec.find(':');
      double x0, y0, x1, y1;
      if (colon == std::string::npos ||
          std::sscanf(spec.c_str() + colon + 1, "%lf,%lf,%lf,%lf", &x0, &y0,
                      &x1, &y1) != 4) {
        motif::raise("invalid-argument",
                     "--scene-object needs label:x0,y0,x1,y1");
      }
      scene.push_back({spec.substr(0, colon),
                       motif::Region{motif::Region::Kind::kBox, x0, y0, x1, y1,
                                     {}}});
    }
    const motif::dsl::MotionAst ast =
        motif::dsl::parse_description(refine_description);
    const motif::LoopTrace trace =
        motif::refine(refine_task, ast, scene, loop_cfg);
    for (const motif::LoopTurn& turn : trace.turns) {
      ordered_json j;
      j["turn"] = turn.candidate.turn;
      j["generator"] = turn.candidate.generator_name;
      ordered_json params;
      params["n"] = turn.candidate.params.n;
      params["start"] = {turn.candidate.params.start.x,
                         turn.candidate.params.start.y};
      params["amplitude"] = turn.candidate.params.amplitude;
      params["frequency"] = turn.candidate.params.frequency;
      params["radius"] = turn.candidate.params.radius;
      params["count"] = turn.candidate.params.count;
      params["direction"] =
          motif::dsl::direction_name(turn.candidate.params.direction);
      params["length"] = turn.candidate.params.length;
      j["params"] = std::move(params);
      j["label"] = turn.verdict.label;
      j["score"] = turn.verdict.score;
      std::cout << j.dump() << "\n";
    }
    ordered_json summary;
    summary["terminated"] = trace.terminated;
    summary["reason"] = trace.reason == motif::LoopTrace::Reason::kAccepted
                            ? "accepted"
                            : "budget-exhausted";
    summary["turns"] = trace.turns.size();
    std::cout << summary.dump() << "\n";
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const motif::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
