#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "scismm/media.hpp"
#include "scismm/rng.hpp"

using namespace scismm;

TEST_CASE("pixel bit significance") {
  CHECK(significance_pgm(0) == 8);
  CHECK(significance_pgm(7) == 1);
  CHECK(significance_pgm(15) == 1);
  for (std::size_t k = 0; k < 64; ++k) {
    CHECK(significance_pgm(k) >= 1);
    CHECK(significance_pgm(k) <= 8);
  }
}

TEST_CASE("significance decomposition") {
  const Decomposition d = decompose(16, significance_pgm, 1, 5);
  CHECK(d.lsc == std::vector<std::size_t>{7, 15});
  CHECK(d.msc == std::vector<std::size_t>{0, 1, 2, 3, 8, 9, 10, 11});
  CHECK(d.passive == std::vector<std::size_t>{4, 5, 6, 12, 13, 14});

  const Decomposition all_passive = decompose(16, significance_pgm, 0, 9);
  CHECK(all_passive.lsc.empty());
  CHECK(all_passive.msc.empty());
  CHECK(all_passive.passive.size() == 16);

  CHECK_THROWS_AS(decompose(8, significance_pgm, 5, 5), InvalidThresholds);
  CHECK_THROWS_AS(decompose(8, significance_pgm, 6, 5), InvalidThresholds);
}

TEST_CASE("decomposition partitions the positions") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t bits = 1 + rng.next_below(1 << 16);
    const double m = static_cast<double>(rng.next_below(10));
    const double M = m + 1 + static_cast<double>(rng.next_below(5));
    const Decomposition d = decompose(bits, significance_pgm, m, M);
    CHECK(d.msc.size() + d.lsc.size() + d.passive.size() == bits);
    std::set<std::size_t> seen;
    for (const auto* list : {&d.msc, &d.lsc, &d.passive}) {
      CHECK(std::is_sorted(list->begin(), list->end()));
      seen.insert(list->begin(), list->end());
    }
    CHECK(seen.size() == bits);  // disjoint and exhaustive
  }
}

TEST_CASE("pgm decoding") {
  const PgmImage one = pgm_read(std::string("P5 1 1 255\n") + '\0');
  CHECK(one.width == 1);
  CHECK(one.pixels == std::vector<std::uint8_t>{0});

  const PgmImage ascii = pgm_read("P3 2 1 255 0 255");
  CHECK(ascii.pixels == std::vector<std::uint8_t>{0, 255});

  const PgmImage commented =
      pgm_read("P3 # comment\n2 1 # another\n255\n7 9");
  CHECK(commented.pixels == std::vector<std::uint8_t>{7, 9});

  CHECK_THROWS_AS(pgm_read("P3 1 1 65535 0"), UnsupportedMaxval);
  CHECK_THROWS_AS(pgm_read("P7 1 1 255 0"), MalformedHeader);
  CHECK_THROWS_AS(pgm_read("P3 0 1 255"), MalformedHeader);
  CHECK_THROWS_AS(pgm_read("P3 2 1 255 0"), TruncatedPixelData);
  CHECK_THROWS_AS(pgm_read("P5 2 2 255\nab"), TruncatedPixelData);
  CHECK_THROWS_AS(pgm_read("P3 1 1 255 300"), MalformedHeader);
  CHECK_THROWS_AS(pgm_read(""), MalformedHeader);
}

TEST_CASE("pgm round trip is bit exact") {
  const std::string bytes = std::string("P5 1 1 255\n") + '\x7f';
  CHECK(pgm_write(pgm_read(bytes)) == bytes);

  SplitMix64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    PgmImage img;
    img.width = static_cast<std::uint32_t>(1 + rng.next_below(40));
    img.height = static_cast<std::uint32_t>(1 + rng.next_below(40));
    img.pixels.resize(std::size_t{img.width} * img.height);
    for (auto& px : img.pixels)
      px = static_cast<std::uint8_t>(rng.next_below(256));
    const std::string written = pgm_write(img);
    CHECK(pgm_read(written) == img);
    CHECK(pgm_write(pgm_read(written)) == written);
  }
}

TEST_CASE("coefficient extraction and replacement") {
  PgmImage img;
  img.width = 1;
  img.height = 1;
  img.pixels = {0};

  // Threshold 1 selects only the final bit of the byte.
  CHECK(extract_lsc(img, 1) == BitVector{0});
  const PgmImage replaced = replace_lsc(img, 1, BitVector{1});
  CHECK(replaced.pixels == std::vector<std::uint8_t>{1});

  // Threshold 2 selects the last two bits, in increasing position order.
  CHECK(extract_lsc(replaced, 2) == BitVector{0, 1});

  CHECK_THROWS_AS(replace_lsc(img, 1, BitVector{0, 1}), LengthMismatch);
  CHECK_THROWS_AS(extract_lsc(img, 0.5), InvalidParameter);
}

TEST_CASE("replacement round trip and untouched significant bits") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    PgmImage img;
    img.width = static_cast<std::uint32_t>(1 + rng.next_below(16));
    img.height = static_cast<std::uint32_t>(1 + rng.next_below(16));
    img.pixels.resize(std::size_t{img.width} * img.height);
    for (auto& px : img.pixels)
      px = static_cast<std::uint8_t>(rng.next_below(256));

    const int m = static_cast<int>(1 + rng.next_below(8));
    CHECK(replace_lsc(img, m, extract_lsc(img, m)) == img);

    BitVector random_bits(static_cast<std::size_t>(m) * img.pixel_count());
    for (std::size_t i = 0; i < random_bits.size(); ++i)
      random_bits.set(i, rng.next_bit());
    const PgmImage changed = replace_lsc(img, m, random_bits);
    CHECK(extract_lsc(changed, m) == random_bits);

    // Bits above the threshold keep their values.
    const unsigned keep_mask = 0xffu << m;
    for (std::size_t i = 0; i < img.pixels.size(); ++i)
      CHECK((changed.pixels[i] & keep_mask) == (img.pixels[i] & keep_mask));
  }
}
