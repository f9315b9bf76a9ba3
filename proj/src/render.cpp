// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#include "motif/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "motif/error.hpp"
#include "motif/generators.hpp"

namespace motif {

namespace {

void put_pixel(Frame& frame, int x, int y, Rgb color) {
  if (x < 0 || y < 0 || x >= frame.width || y >= frame.height) return;
  const std::size_t at = frame.offset(x, y);
  frame.pixels[at] = color.r;
  frame.pixels[at + 1] = color.g;
  frame.pixels[at + 2] = color.b;
}

void stamp_disc(Frame& frame, int cx, int cy, int radius, Rgb color) {
  for (int dy = -radius; dy <= radius; ++dy) {
    for (int dx = -radius; dx <= radius; ++dx) {
      if (dx * dx + dy * dy <= radius * radius) {
        put_pixel(frame, cx + dx, cy + dy, color);
      }
    }
  }
}

// Integer Bresenham, thickened symmetrically by stamping a disc of half the
// line width at every pixel.
void draw_segment(Frame& frame, int x0, int y0, int x1, int y1, int width,
                  Rgb color) {
  const int radius = std::max(0, width / 2);
  int dx = std::abs(x1 - x0);
  int dy = -std::abs(y1 - y0);
  int sx = x0 < x1 ? 1 : -1;
  int sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  int x = x0, y = y0;
  while (true) {
    stamp_disc(frame, x, y, radius, color);
    if (x == x1 && y == y1) break;
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y += sy;
    }
  }
}

Rgb lerp_color(Rgb a, Rgb b, double t) {
  auto channel = [&](std::uint8_t ca, std::uint8_t cb) {
    const double v = ca + (cb - ca) * t;
    return static_cast<std::uint8_t>(
        std::clamp<int>(static_cast<int>(std::floor(v + 0.5)), 0, 255));
  };
  return {channel(a.r, b.r), channel(a.g, b.g), channel(a.b, b.b)};
}

struct Pixel {
  int x, y;
};

std::vector<Pixel> clipped_samples(const Frame& base, const KeypointTrack& track,
                                   const RenderConfig& cfg) {
  KeypointTrack drawn = track;
  if (cfg.resample_points > 1 &&
      static_cast<int>(track.samples.size()) != cfg.resample_points) {
    drawn = resample_arclength(track, cfg.resample_points);
  }
  std::vector<Pixel> out;
  out.reserve(drawn.samples.size());
  for (const TrackSample& s : drawn.samples) {
    const int x = std::clamp(static_cast<int>(std::lround(s.x)), 0,
                             base.width - 1);
    const int y = std::clamp(static_cast<int>(std::lround(s.y)), 0,
                             base.height - 1);
    out.push_back({x, y});
  }
  return out;
}

void require_raster(const Frame& base) {
  if (!base.has_pixels()) raise("missing-raster", "base frame has no pixels");
}

// 5x7 bitmap digits, one string per row.
const char* const kDigits[10][7] = {
    {"01110", "10001", "10011", "10101", "11001", "10001", "01110"},
    {"00100", "01100", "00100", "00100", "00100", "00100", "01110"},
    {"01110", "10001", "00001", "00010", "00100", "01000", "11111"},
    {"11111", "00010", "00100", "00010", "00001", "10001", "01110"},
    {"00010", "00110", "01010", "10010", "11111", "00010", "00010"},
    {"11111", "10000", "11110", "00001", "00001", "10001", "01110"},
    {"00110", "01000", "10000", "11110", "10001", "10001", "01110"},
    {"11111", "00001", "00010", "00100", "01000", "01000", "01000"},
    {"01110", "10001", "10001", "01110", "10001", "10001", "01110"},
    {"01110", "10001", "10001", "01111", "00001", "00010", "01100"},
};

void draw_label(Frame& frame, int x, int y, int value) {
  const std::string text = std::to_string(value);
  int cx = x;
  for (char c : text) {
    if (c < '0' || c > '9') continue;
    const auto& glyph = kDigits[c - '0'];
    for (int row = 0; row < 7; ++row) {
      for (int col = 0; col < 5; ++col) {
        if (glyph[row][col] == '1') {
          put_pixel(frame, cx + col, y + row, {255, 255, 255});
        }
      }
    }
    cx += 6;
  }
}

}  // namespace

const std::array<Rgb, 12>& RenderConfig::flow_palette() {
  // Rainbow wheel, one entry per 30 degrees of hue.
  static const std::array<Rgb, 12> palette = {{{255, 0, 0},
                                               {255, 128, 0},
                                               {255, 255, 0},
                                               {128, 255, 0},
                                               {0, 255, 0},
                                               {0, 255, 128},
                                               {0, 255, 255},
                                               {0, 128, 255},
                                               {0, 0, 255},
                                               {128, 0, 255},
                                               {255, 0, 255},
                                               {255, 0, 128}}};
  return palette;
}

std::pair<int, int> RenderConfig::storyboard_grid(int n) {
  switch (n) {
    case 2: return {1, 2};
    case 4: return {2, 2};
    case 9: return {3, 3};
    default:
      raise("invalid-argument", "storyboard supports 2, 4 or 9 frames");
  }
}

Frame render_keypoint_overlay(const Frame& base, const KeypointTrack& track,
                              const RenderConfig& cfg) {
  require_raster(base);
  Frame out = base;
  const std::vector<Pixel> pts = clipped_samples(base, track, cfg);
  if (pts.size() < 2) raise("invalid-argument", "track needs >= 2 samples");
  const std::size_t segments = pts.size() - 1;
  for (std::size_t i = 0; i < segments; ++i) {
    const double t =
        segments > 1 ? static_cast<double>(i) / (segments - 1) : 0.0;
    const Rgb color = lerp_color(cfg.start_color, cfg.end_color, t);
    draw_segment(out, pts[i].x, pts[i].y, pts[i + 1].x, pts[i + 1].y,
                 cfg.line_width, color);
  }
  stamp_disc(out, pts.back().x, pts.back().y, cfg.endpoint_radius,
             cfg.endpoint_color);
  return out;
}

Frame render_flow_overlay(const Frame& base,
                          std::span<const KeypointTrack> tracks,
                          const RenderConfig& cfg) {
  require_raster(base);
  if (tracks.empty()) raise("invalid-argument", "flow overlay needs >= 1 track");
  std::vector<const KeypointTrack*> ordered;
  ordered.reserve(tracks.size());
  for (const KeypointTrack& t : tracks) ordered.push_back(&t);
  std::sort(ordered.begin(), ordered.end(),
            [](const KeypointTrack* a, const KeypointTrack* b) {
              return a->keypoint_id < b->keypoint_id;
            });
  Frame out = base;
  for (const KeypointTrack* track : ordered) {
    const Rgb color =
        RenderConfig::flow_palette()[static_cast<std::size_t>(
            ((track->keypoint_id % 12) + 12) % 12)];
    const std::vector<Pixel> pts = clipped_samples(base, *track, cfg);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      draw_segment(out, pts[i].x, pts[i].y, pts[i + 1].x, pts[i + 1].y,
                   cfg.line_width, color);
    }
  }
  return out;
}

std::vector<double> frame_embedding(const Frame& frame) {
  if (!frame.has_pixels()) raise("missing-raster", "frame has no pixels");
  std::vector<double> embedding(256, 0.0);
  for (int by = 0; by < 16; ++by) {
    for (int bx = 0; bx < 16; ++bx) {
      const int x0 = frame.width * bx / 16;
      const int x1 = std::max(x0 + 1, frame.width * (bx + 1) / 16);
      const int y0 = frame.height * by / 16;
      const int y1 = std::max(y0 + 1, frame.height * (by + 1) / 16);
      double sum = 0;
      int count = 0;
      for (int y = y0; y < y1 && y < frame.height; ++y) {
        for (int x = x0; x < x1 && x < frame.width; ++x) {
          const std::size_t at = frame.offset(x, y);
          sum += (frame.pixels[at] + frame.pixels[at + 1] +
                  frame.pixels[at + 2]) /
                 (3.0 * 255.0);
          ++count;
        }
      }
      embedding[static_cast<std::size_t>(by) * 16 + bx] =
          count > 0 ? sum / count : 0.0;
    }
  }
  return embedding;
}

std::vector<int> select_keyframes(std::span<const Frame> frames, int n,
                                  std::uint64_t seed) {
  if (n < 1) raise("invalid-argument", "need n >= 1 keyframes");
  if (static_cast<std::size_t>(n) > frames.size()) {
    raise("invalid-argument", "n exceeds the frame count");
  }
  const std::size_t m = frames.size();
  std::vector<std::vector<double>> points;
  points.reserve(m);
  for (const Frame& frame : frames) points.push_back(frame_embedding(frame));

  auto dist2 = [](const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double d = a[i] - b[i];
      sum += d * d;
    }
    return sum;
  };

  // k-means++ seeding from the deterministic stream.
  gen::RandomStream rng(seed);
  std::vector<std::vector<double>> centroids;
  centroids.push_back(points[rng.next_index(m)]);
  while (static_cast<int>(centroids.size()) < n) {
    std::vector<double> weights(m);
    double total = 0;
    for (std::size_t i = 0; i < m; ++i) {
      double best = std::numeric_limits<double>::max();
      for (const auto& c : centroids) best = std::min(best, dist2(points[i], c));
      weights[i] = best;
      total += best;
    }
    std::size_t chosen = 0;
    if (total <= 0) {
      // All remaining frames coincide with a centroid: take the lowest index
      // not already chosen as a centroid source.
      std::size_t fallback = 0;
      for (std::size_t i = 0; i < m; ++i) {
        bool used = false;
        for (const auto& c : centroids) {
          if (dist2(points[i], c) == 0) used = true;
        }
        if (!used) {
          fallback = i;
          break;
        }
      }
      chosen = fallback;
    } else {
      const double r = rng.uniform() * total;
      double cum = 0;
      for (std::size_t i = 0; i < m; ++i) {
        cum += weights[i];
        if (cum >= r) {
          chosen = i;
          break;
        }
        chosen = i;
      }
    }
    centroids.push_back(points[chosen]);
  }

  // Lloyd iterations; assignment ties go to the lowest cluster index.
  std::vector<int> assignment(m, 0);
  for (int iter = 0; iter < 100; ++iter) {
    for (std::size_t i = 0; i < m; ++i) {
      double best = std::numeric_limits<double>::max();
      int at = 0;
      for (int c = 0; c < n; ++c) {
        const double d =
            dist2(points[i], centroids[static_cast<std::size_t>(c)]);
        if (d < best) {
          best = d;
          at = c;
        }
      }
      assignment[i] = at;
    }
    double shift = 0;
    for (int c = 0; c < n; ++c) {
      std::vector<double> mean(points[0].size(), 0.0);
      int count = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (assignment[i] != c) continue;
        for (std::size_t k = 0; k < mean.size(); ++k) mean[k] += points[i][k];
        ++count;
      }
      if (count == 0) continue;  // empty cluster keeps its centroid
      for (double& v : mean) v /= count;
      shift += dist2(mean, centroids[static_cast<std::size_t>(c)]);
      centroids[static_cast<std::size_t>(c)] = std::move(mean);
    }
    if (shift < 1e-6) break;
  }

  // One representative per cluster: nearest to the centroid, ties to the
  // lowest frame index; empty clusters repair to the lowest unused index.
  std::vector<int> selected;
  std::vector<bool> used(m, false);
  for (int c = 0; c < n; ++c) {
    double best = std::numeric_limits<double>::max();
    int pick = -1;
    for (std::size_t i = 0; i < m; ++i) {
      if (assignment[i] != c || used[i]) continue;
      const double d = dist2(points[i], centroids[static_cast<std::size_t>(c)]);
      if (d < best) {
        best = d;
        pick = static_cast<int>(i);
      }
    }
    if (pick < 0) {
      for (std::size_t i = 0; i < m; ++i) {
        if (!used[i]) {
          pick = static_cast<int>(i);
          break;
        }
      }
    }
    used[static_cast<std::size_t>(pick)] = true;
    selected.push_back(pick);
  }
  std::sort(selected.begin(), selected.end());
  return selected;
}

Frame render_storyboard(std::span<const Frame> frames, int n,
                        const RenderConfig& cfg, std::uint64_t seed) {
  const auto [rows, cols] = RenderConfig::storyboard_grid(n);
  const std::vector<int> picks = select_keyframes(frames, n, seed);
  const Frame& first = frames[static_cast<std::size_t>(picks[0])];
  // The label strip sits above the image area, so same-size frames land
  // unscaled and a single-color frame fills its cell interior uniformly.
  const int cell_w = first.width;
  const int image_h = first.height;
  const int cell_h = image_h + cfg.label_strip;

  Frame out;
  out.width = cell_w * cols;
  out.height = cell_h * rows;
  out.pixels.assign(static_cast<std::size_t>(out.width) * out.height * 3, 0);

  for (int i = 0; i < n; ++i) {
    const Frame& src = frames[static_cast<std::size_t>(picks[i])];
    const int row = i / cols;
    const int col = i % cols;
    const int ox = col * cell_w;
    const int oy = row * cell_h;
    // Uniform scale-to-fit below the label strip, nearest neighbour,
    // centered horizontally.
    const double scale = std::min(static_cast<double>(cell_w) / src.width,
                                  static_cast<double>(image_h) / src.height);
    const int draw_w = std::max(1, static_cast<int>(src.width * scale));
    const int draw_h = std::max(1, static_cast<int>(src.height * scale));
    const int pad_x = (cell_w - draw_w) / 2;
    for (int y = 0; y < draw_h; ++y) {
      const int sy = std::min(src.height - 1,
                              static_cast<int>(y / scale));
      for (int x = 0; x < draw_w; ++x) {
        const int sx = std::min(src.width - 1, static_cast<int>(x / scale));
        const std::size_t at = src.offset(sx, sy);
        put_pixel(out, ox + pad_x + x, oy + cfg.label_strip + y,
                  {src.pixels[at], src.pixels[at + 1], src.pixels[at + 2]});
      }
    }
    draw_label(out, ox + 2, oy + 1, src.index);
  }
  return out;
}

}  // namespace motif
