#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "scismm/bitvector.hpp"
#include "scismm/pgm.hpp"

namespace scismm {

// Importance weight of each bit position of a medium.
using SignificanceFunction = std::function<double(std::size_t)>;

// Weight of bit k of an 8-bit grayscale raster: 8 for the leading bit of a
// pixel byte down to 1 for its last bit.
inline double significance_pgm(std::size_t k) {
  return static_cast<double>(8 - (k % 8));
}

// Index partition of a medium's bit positions by significance.
struct Decomposition {
  std::vector<std::size_t> msc;      // weight >= M
  std::vector<std::size_t> lsc;      // weight <= m
  std::vector<std::size_t> passive;  // strictly between
  std::size_t source_length = 0;
};

// InvalidThresholds when m >= M.
Decomposition decompose(std::size_t bit_length, const SignificanceFunction& u,
                        double m, double M);

// Bit positions of the image with significance <= m, in increasing order.
// Position 0 of a pixel byte is its most significant bit.
std::vector<std::size_t> lsc_positions(const PgmImage& img, double m);

// The LSC bits of the image in increasing position order. InvalidParameter
// when the threshold selects no positions at all.
BitVector extract_lsc(const PgmImage& img, double m);

// Writes y into the LSC positions, leaving every other bit untouched.
PgmImage replace_lsc(const PgmImage& img, double m, const BitVector& y);

}  // namespace scismm
