// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "motif/core.hpp"
#include "motif/error.hpp"

namespace motif {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Region region_from_json(const json& j) {
  Region region;
  const std::string kind = j.value("kind", "box");
  if (kind == "box") {
    region.kind = Region::Kind::kBox;
    region.x0 = j.at("x0").get<double>();
    region.y0 = j.at("y0").get<double>();
    region.x1 = j.at("x1").get<double>();
    region.y1 = j.at("y1").get<double>();
  } else if (kind == "polygon") {
    region.kind = Region::Kind::kPolygon;
    for (const auto& p : j.at("points")) {
      region.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    }
  } else {
    raise("invalid-argument", "unknown region kind '" + kind + "'");
  }
  return region;
}

ordered_json region_to_json(const Region& region) {
  ordered_json j;
  if (region.kind == Region::Kind::kBox) {
    j["kind"] = "box";
    j["x0"] = region.x0;
    j["y0"] = region.y0;
    j["x1"] = region.x1;
    j["y1"] = region.y1;
  } else {
    j["kind"] = "polygon";
    ordered_json points = ordered_json::array();
    for (const Vec2& p : region.points) points.push_back({p.x, p.y});
    j["points"] = std::move(points);
  }
  return j;
}

json number(double v) {
  // Frame indices ingest as integers; keep them integral on the way out.
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    return json(static_cast<std::int64_t>(v));
  }
  return json(v);
}

}  // namespace

Episode episode_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    raise("invalid-argument", std::string("episode JSON parse error: ") + e.what());
  }
  try {
    Episode ep;
    ep.id = j.at("id").get<std::string>();
    ep.task_instruction = j.at("task_instruction").get<std::string>();
    ep.motion_description = j.at("motion_description").get<std::string>();
    ep.category = j.value("category", "");
    if (j.contains("scene")) {
      for (const auto& obj : j.at("scene")) {
        ep.scene.push_back({obj.at("label").get<std::string>(),
                            region_from_json(obj.at("region"))});
      }
    }
    const json& traj = j.at("trajectory");
    ep.trajectory.point_of_interest = traj.at("point_of_interest").get<int>();
    for (const auto& tj : traj.at("tracks")) {
      KeypointTrack track;
      track.keypoint_id = tj.at("keypoint_id").get<int>();
      for (const auto& s : tj.at("samples")) {
        track.samples.push_back({s.at(0).get<double>(), s.at(1).get<double>(),
                                 s.at(2).get<double>()});
      }
      ep.trajectory.tracks.push_back(std::move(track));
    }
    if (j.contains("frames_dir")) ep.frames_dir = j.at("frames_dir").get<std::string>();
    if (j.contains("heading")) ep.heading = j.at("heading").get<std::string>();
    if (j.contains("time_dt")) ep.time_dt = j.at("time_dt").get<double>();
    return ep;
  } catch (const json::exception& e) {
    raise("invalid-argument", std::string("bad episode JSON: ") + e.what());
  }
}

std::string episode_to_json_text(const Episode& episode) {
  ordered_json j;
  j["id"] = episode.id;
  j["task_instruction"] = episode.task_instruction;
  j["motion_description"] = episode.motion_description;
  j["category"] = episode.category;
  ordered_json scene = ordered_json::array();
  for (const SceneObject& obj : episode.scene) {
    ordered_json o;
    o["label"] = obj.label;
    o["region"] = region_to_json(obj.region);
    scene.push_back(std::move(o));
  }
  j["scene"] = std::move(scene);
  ordered_json traj;
  traj["point_of_interest"] = episode.trajectory.point_of_interest;
  ordered_json tracks = ordered_json::array();
  for (const KeypointTrack& track : episode.trajectory.tracks) {
    ordered_json tj;
    tj["keypoint_id"] = track.keypoint_id;
    ordered_json samples = ordered_json::array();
    for (const TrackSample& s : track.samples) {
      samples.push_back({number(s.t), s.x, s.y});
    }
    tj["samples"] = std::move(samples);
    tracks.push_back(std::move(tj));
  }
  traj["tracks"] = std::move(tracks);
  j["trajectory"] = std::move(traj);
  if (!episode.frames_dir.empty()) j["frames_dir"] = episode.frames_dir;
  if (!episode.heading.empty()) j["heading"] = episode.heading;
  if (episode.time_dt) j["time_dt"] = *episode.time_dt;
  return j.dump(2) + "\n";
}

Episode load_episode(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) raise("missing-artifact", "cannot open " + file.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return episode_from_json_text(text);
}

void save_episode(const Episode& episode, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) raise("unwritable-path", "cannot write " + file.string());
  out << episode_to_json_text(episode);
}

std::vector<Episode> load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    raise("missing-artifact", dir.string() + " is not a directory");
  }
  std::vector<Episode> episodes;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") {
      episodes.push_back(load_episode(entry.path()));
    }
  }
  std::sort(episodes.begin(), episodes.end(),
            [](const Episode& a, const Episode& b) { return a.id < b.id; });
  return episodes;
}

}  // namespace motif
