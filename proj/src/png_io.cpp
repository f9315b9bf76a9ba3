// Copyright 2026 The Motif Authors
// SPDX-License-Identifier: Apache-2.0

#include "motif/png_io.hpp"

#include <array>
#include <cstring>
#include <fstream>

#include "motif/error.hpp"

namespace motif {

namespace {

std::uint32_t crc32_table_entry(std::uint32_t n) {
  std::uint32_t c = n;
  for (int k = 0; k < 8; ++k) {
    c = (c & 1) ? 0xedb88320u ^ (c >> 1) : c >> 1;
  }
  return c;
}

const std::array<std::uint32_t, 256>& crc_table() {
  static const std::array<std::uint32_t, 256> table = [] {
    std::array<std::uint32_t, 256> t{};
    for (std::uint32_t n = 0; n < 256; ++n) t[n] = crc32_table_entry(n);
    return t;
  }();
  return table;
}

std::uint32_t crc32(const std::uint8_t* data, std::size_t size,
                    std::uint32_t crc = 0xffffffffu) {
  for (std::size_t i = 0; i < size; ++i) {
    crc = crc_table()[(crc ^ data[i]) & 0xffu] ^ (crc >> 8);
  }
  return crc;
}

std::uint32_t adler32(const std::uint8_t* data, std::size_t size) {
  std::uint32_t a = 1, b = 0;
  for (std::size_t i = 0; i < size; ++i) {
    a = (a + data[i]) % 65521u;
    b = (b + a) % 65521u;
  }
  return (b << 16) | a;
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

std::uint32_t get_u32(const std::uint8_t* p) {
  return (static_cast<std::uint32_t>(p[0]) << 24) |
         (static_cast<std::uint32_t>(p[1]) << 16) |
         (static_cast<std::uint32_t>(p[2]) << 8) | p[3];
}

void put_chunk(std::vector<std::uint8_t>& out, const char type[4],
               const std::vector<std::uint8_t>& data) {
  put_u32(out, static_cast<std::uint32_t>(data.size()));
  const std::size_t type_at = out.size();
  out.insert(out.end(), type, type + 4);
  out.insert(out.end(), data.begin(), data.end());
  const std::uint32_t crc =
      crc32(out.data() + type_at, 4 + data.size()) ^ 0xffffffffu;
  put_u32(out, crc);
}

constexpr std::uint8_t kSignature[8] = {0x89, 'P',  'N',  'G',
                                        0x0d, 0x0a, 0x1a, 0x0a};

}  // namespace

std::vector<std::uint8_t> encode_png(const Frame& frame) {
  if (!frame.has_pixels() || frame.width < 1 || frame.height < 1) {
    raise("missing-raster", "frame has no pixel data");
  }
  const std::size_t expected =
      static_cast<std::size_t>(frame.width) * frame.height * 3;
  if (frame.pixels.size() != expected) {
    raise("invalid-argument", "raster size does not match dimensions");
  }

  // Filter 0 on every row.
  std::vector<std::uint8_t> raw;
  raw.reserve((expected) + frame.height);
  for (int y = 0; y < frame.height; ++y) {
    raw.push_back(0);
    const std::uint8_t* row = frame.pixels.data() +
                              static_cast<std::size_t>(y) * frame.width * 3;
    raw.insert(raw.end(), row, row + static_cast<std::size_t>(frame.width) * 3);
  }

  // zlib stream with stored deflate blocks.
  std::vector<std::uint8_t> idat;
  idat.push_back(0x78);
  idat.push_back(0x01);
  std::size_t pos = 0;
  while (pos < raw.size()) {
    const std::size_t chunk = std::min<std::size_t>(65535, raw.size() - pos);
    const bool final = pos + chunk == raw.size();
    idat.push_back(final ? 1 : 0);
    idat.push_back(static_cast<std::uint8_t>(chunk & 0xff));
    idat.push_back(static_cast<std::uint8_t>(chunk >> 8));
    idat.push_back(static_cast<std::uint8_t>(~chunk & 0xff));
    idat.push_back(static_cast<std::uint8_t>((~chunk >> 8) & 0xff));
    idat.insert(idat.end(), raw.begin() + static_cast<std::ptrdiff_t>(pos),
                raw.begin() + static_cast<std::ptrdiff_t>(pos + chunk));
    pos += chunk;
  }
  put_u32(idat, adler32(raw.data(), raw.size()));

  std::vector<std::uint8_t> ihdr;
  put_u32(ihdr, static_cast<std::uint32_t>(frame.width));
  put_u32(ihdr, static_cast<std::uint32_t>(frame.height));
  ihdr.push_back(8);  // bit depth
  ihdr.push_back(2);  // truecolor
  ihdr.push_back(0);  // deflate
  ihdr.push_back(0);  // adaptive filtering
  ihdr.push_back(0);  // no interlace

  std::vector<std::uint8_t> out(kSignature, kSignature + 8);
  put_chunk(out, "IHDR", ihdr);
  put_chunk(out, "IDAT", idat);
  put_chunk(out, "IEND", {});
  return out;
}

Frame decode_png(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 8 || std::memcmp(bytes.data(), kSignature, 8) != 0) {
    raise("invalid-argument", "not a PNG file");
  }
  std::size_t pos = 8;
  Frame frame;
  std::vector<std::uint8_t> idat;
  while (pos + 8 <= bytes.size()) {
    const std::uint32_t len = get_u32(bytes.data() + pos);
    if (pos + 12 + len > bytes.size()) {
      raise("invalid-argument", "truncated PNG chunk");
    }
    const char* type = reinterpret_cast<const char*>(bytes.data() + pos + 4);
    const std::uint8_t* data = bytes.data() + pos + 8;
    if (std::memcmp(type, "IHDR", 4) == 0) {
      if (len != 13) raise("invalid-argument", "bad IHDR");
      frame.width = static_cast<int>(get_u32(data));
      frame.height = static_cast<int>(get_u32(data + 4));
      if (data[8] != 8 || data[9] != 2 || data[10] != 0 || data[11] != 0 ||
          data[12] != 0) {
        raise("invalid-argument",
              "unsupported PNG variant (expect 8-bit RGB, no interlace)");
      }
    } else if (std::memcmp(type, "IDAT", 4) == 0) {
      idat.insert(idat.end(), data, data + len);
    } else if (std::memcmp(type, "IEND", 4) == 0) {
      break;
    }
    pos += 12 + len;
  }
  if (frame.width < 1 || frame.height < 1 || idat.size() < 6) {
    raise("invalid-argument", "incomplete PNG");
  }

  // Stored-block zlib stream only.
  std::size_t p = 2;  // skip CMF/FLG
  std::vector<std::uint8_t> raw;
  bool final = false;
  while (!final) {
    if (p + 5 > idat.size()) raise("invalid-argument", "truncated deflate");
    const std::uint8_t header = idat[p];
    final = header & 1;
    if ((header >> 1) != 0) {
      raise("invalid-argument",
            "compressed PNG blocks are not supported by this reader");
    }
    const std::size_t len = idat[p + 1] | (idat[p + 2] << 8);
    p += 5;
    if (p + len > idat.size()) raise("invalid-argument", "truncated block");
    raw.insert(raw.end(), idat.begin() + static_cast<std::ptrdiff_t>(p),
               idat.begin() + static_cast<std::ptrdiff_t>(p + len));
    p += len;
  }

  const std::size_t stride = static_cast<std::size_t>(frame.width) * 3 + 1;
  if (raw.size() != stride * static_cast<std::size_t>(frame.height)) {
    raise("invalid-argument", "raster size mismatch");
  }
  frame.pixels.reserve(raw.size() - frame.height);
  for (int y = 0; y < frame.height; ++y) {
    const std::uint8_t* row = raw.data() + static_cast<std::size_t>(y) * stride;
    if (row[0] != 0) {
      raise("invalid-argument", "filtered PNG rows are not supported");
    }
    frame.pixels.insert(frame.pixels.end(), row + 1, row + stride);
  }
  return frame;
}

void write_png(const Frame& frame, const std::filesystem::path& file) {
  const std::vector<std::uint8_t> bytes = encode_png(frame);
  std::ofstream out(file, std::ios::binary);
  if (!out) raise("unwritable-path", "cannot write " + file.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

Frame read_png(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) raise("missing-artifact", "cannot open " + file.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return decode_png(bytes);
}

}  // namespace motif
