// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0
//
// Minimal PNG reader/writer for 8-bit RGB images. The encoder emits filter-0
// rows inside stored (uncompressed) deflate blocks, which keeps outputs
// byte-identical across platforms and zlib versions; the decoder accepts
// exactly that subset and rejects anything else with a clear error.

#pragma once

#include <filesystem>
#include <vector>

#include "motif/core.hpp"

namespace motif {

std::vector<std::uint8_t> encode_png(const Frame& frame);
Frame decode_png(const std::vector<std::uint8_t>& bytes);

void write_png(const Frame& frame, const std::filesystem::path& file);
Frame read_png(const std::filesystem::path& file);

}  // namespace motif
