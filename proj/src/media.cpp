#include "scismm/media.hpp"

namespace scismm {

Decomposition decompose(std::size_t bit_length, const SignificanceFunction& u,
                        double m, double M) {
  if (!(m < M)) throw InvalidThresholds("decomposition requires m < M");
  Decomposition d;
  d.source_length = bit_length;
  for (std::size_t k = 0; k < bit_length; ++k) {
    const double w = u(k);
    if (w >= M) d.msc.push_back(k);
    else if (w <= m) d.lsc.push_back(k);
    else d.passive.push_back(k);
  }
  return d;
}

std::vector<std::size_t> lsc_positions(const PgmImage& img, double m) {
  // Weights repeat per byte, so one scan of the 8 in-byte offsets suffices.
  std::vector<std::size_t> offsets;
  for (std::size_t b = 0; b < 8; ++b)
    if (significance_pgm(b) <= m) offsets.push_back(b);
  std::vector<std::size_t> positions;
  positions.reserve(offsets.size() * img.pixel_count());
  for (std::size_t px = 0; px < img.pixel_count(); ++px)
    for (std::size_t b : offsets) positions.push_back(px * 8 + b);
  return positions;
}

namespace {
std::uint8_t get_bit(const PgmImage& img, std::size_t position) {
  return (img.pixels[position / 8] >> (7 - position % 8)) & 1u;
}

void set_bit(PgmImage& img, std::size_t position, bool v) {
  const std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - position % 8));
  if (v) img.pixels[position / 8] |= mask;
  else img.pixels[position / 8] &= static_cast<std::uint8_t>(~mask);
}
}  // namespace

BitVector extract_lsc(const PgmImage& img, double m) {
  const auto positions = lsc_positions(img, m);
  if (positions.empty())
    throw InvalidParameter("threshold selects no least significant coefficients");
  BitVector out(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i)
    out.set(i, get_bit(img, positions[i]) != 0);
  return out;
}

PgmImage replace_lsc(const PgmImage& img, double m, const BitVector& y) {
  const auto positions = lsc_positions(img, m);
  if (positions.size() != y.size())
    throw LengthMismatch("replacement vector does not match the LSC count");
  PgmImage out = img;
  for (std::size_t i = 0; i < positions.size(); ++i)
    set_bit(out, positions[i], y[i] != 0);
  return out;
}

}  // namespace scismm
