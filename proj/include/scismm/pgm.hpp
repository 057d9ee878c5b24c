#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scismm/errors.hpp"

namespace scismm {

// 8-bit grayscale raster; maxval is fixed at 255.
struct PgmImage {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint8_t> pixels;  // row major, width * height entries

  static constexpr unsigned kMaxval = 255;

  std::size_t pixel_count() const { return pixels.size(); }

  friend bool operator==(const PgmImage&, const PgmImage&) = default;
};

// Accepts binary P5 and the ASCII graymap variant carrying the P3 magic (one
// gray value per pixel). Header comments introduced by '#' are allowed.
// Maxval other than 255 raises UnsupportedMaxval.
PgmImage pgm_read(const std::string& bytes);

// Canonical writer: "P5 <w> <h> 255\n" followed by the raw pixel bytes.
std::string pgm_write(const PgmImage& img);

}  // namespace scismm
