#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "scismm/chaotic.hpp"
#include "scismm/phase_space.hpp"
#include "scismm/rng.hpp"

using namespace scismm;

namespace {

Strategy random_strategy(SplitMix64& rng, std::uint32_t alphabet,
                         std::size_t material) {
  std::vector<std::uint32_t> terms(material);
  for (auto& term : terms)
    term = static_cast<std::uint32_t>(rng.next_below(alphabet));
  return Strategy(alphabet, std::move(terms));
}

BitVector random_bits(SplitMix64& rng, std::uint32_t count) {
  BitVector v(count);
  for (std::uint32_t i = 0; i < count; ++i) v.set(i, rng.next_bit());
  return v;
}

PointX2 random_point(SplitMix64& rng, std::uint32_t n, std::uint32_t p,
                     std::size_t material) {
  return PointX2{random_strategy(rng, n, material), random_bits(rng, n),
                 random_strategy(rng, p, material), random_bits(rng, p),
                 random_strategy(rng, p, material)};
}

}  // namespace

TEST_CASE("state distance") {
  CHECK(dist_state(BitVector{0, 1, 1}, BitVector{0, 1, 1}) == 0);
  CHECK(dist_state(BitVector{0, 1, 1}, BitVector{1, 1, 0}) == 2);
  CHECK(dist_state(BitVector{0}, BitVector{1}) == 1);
  CHECK_THROWS_AS(dist_state(BitVector{0}, BitVector{0, 1}), LengthMismatch);
}

TEST_CASE("strategy distance") {
  const Strategy a(10, std::vector<std::uint32_t>(64, 3));
  CHECK(dist_strategy(a, a) == 0.0);

  // Differ only at term 0, by one symbol: (9/10) * 1/10.
  std::vector<std::uint32_t> shifted_terms(64, 3);
  shifted_terms[0] = 4;
  const Strategy b(10, shifted_terms);
  CHECK(dist_strategy(a, b) == doctest::Approx(0.09).epsilon(1e-12));

  // Maximal difference 9 at every term sums to 0.9 * (1 - 10^-64).
  const Strategy zeros(10, std::vector<std::uint32_t>(64, 0));
  const Strategy nines(10, std::vector<std::uint32_t>(64, 9));
  const double top = dist_strategy(zeros, nines);
  CHECK(top == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(top < 1.0);

  CHECK_THROWS_AS(dist_strategy(a, Strategy(9, std::vector<std::uint32_t>(64, 0))),
                  AlphabetMismatch);
  CHECK_THROWS_AS(dist_strategy(Strategy(10, {1}), Strategy(10, {1})),
                  InsufficientStrategy);
}

TEST_CASE("combined distances") {
  SplitMix64 rng(5);
  const PointX2 a = random_point(rng, 6, 3, 64);
  CHECK(d2(a, a) == 0.0);

  // Equal strategies, states differing in 3 positions in total.
  PointX2 b = a;
  b.cover.flip(0);
  b.cover.flip(3);
  b.message.flip(1);
  CHECK(d2(a, b) == 3.0);

  // A distance below 1 pins both states.
  for (int trial = 0; trial < 200; ++trial) {
    const PointX2 u = random_point(rng, 4, 4, 64);
    PointX2 v = u;
    v.place = random_strategy(rng, 4, 64);
    v.choice = random_strategy(rng, 4, 64);
    v.mixing = random_strategy(rng, 4, 64);
    if (d2(u, v) < 1.0) {
      CHECK(u.cover == v.cover);
      CHECK(u.message == v.message);
    }
  }

  const PointX1 p1{Strategy(3, std::vector<std::uint32_t>(64, 1)),
                   BitVector{0, 1, 0}};
  CHECK(d1(p1, p1) == 0.0);
  CHECK_THROWS_AS(
      d1(p1, PointX1{Strategy(2, std::vector<std::uint32_t>(64, 1)),
                     BitVector{0, 1}}),
      ShapeMismatch);
}

TEST_CASE("single-strategy dynamics") {
  const PointX1 start{Strategy(2, {1, 0, 0}), BitVector{0, 0}};
  const PointX1 next = g_step(start);
  CHECK(next.state == BitVector{0, 1});
  CHECK(next.strategy.block() == std::vector<std::uint32_t>{0, 0});

  // Two steps through the same cell restore the state.
  const PointX1 twice =
      g_step(g_step(PointX1{Strategy(2, {0, 0}), BitVector{1, 0}}));
  CHECK(twice.state == BitVector{1, 0});

  // The state component of iterated steps matches the plain iteration.
  SplitMix64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::uint32_t>(1 + rng.next_below(5));
    const std::size_t t = rng.next_below(12);
    PointX1 p{random_strategy(rng, n, t + 1), random_bits(rng, n)};
    const BitVector expect = ci_iterate(p.state, negation_map(n), p.strategy, t);
    PointX1 walked = p;
    for (std::size_t i = 0; i < t; ++i) walked = g_step(walked);
    CHECK(walked.state == expect);
  }

  CHECK_THROWS_AS(g_step(PointX1{Strategy(2, {}), BitVector{0, 0}}),
                  InsufficientStrategy);
}

TEST_CASE("embedding-space dynamics") {
  // First step of the worked embedding instance.
  const PointX2 start{Strategy(4, {0, 2}), BitVector{0, 0, 0, 0},
                      Strategy(2, {0, 1}), BitVector{1, 0},
                      Strategy(2, {1, 0})};
  const PointX2 next = scismm_step(start);
  CHECK(next.cover == BitVector{1, 0, 0, 0});
  CHECK(next.message == BitVector{1, 1});
  CHECK(next.place.block() == std::vector<std::uint32_t>{2});

  // Substituting a bit equal to the current cell leaves the cover unchanged.
  const PointX2 idle{Strategy(2, {1, 1}), BitVector{0, 1}, Strategy(2, {0, 0}),
                     BitVector{1, 1}, Strategy(2, {0, 0})};
  CHECK(scismm_step(idle).cover == idle.cover);

  // Shapes survive iteration.
  SplitMix64 rng(13);
  const PointX2 p = random_point(rng, 5, 3, 16);
  const PointX2 after = scismm_iterate(p, 5);
  CHECK(after.cover.size() == 5);
  CHECK(after.message.size() == 3);
  CHECK(after.place.alphabet() == 5);
  CHECK(after.choice.alphabet() == 3);
  CHECK(after.mixing.alphabet() == 3);
  CHECK(after.place.materialized() == 11);
}

TEST_CASE("prefix length for a target ball") {
  CHECK(k0_of_epsilon(0.3) == 2);
  CHECK(k0_of_epsilon(3.0) == 1);
  CHECK(k0_of_epsilon(0.03) == 3);
  CHECK(k0_of_epsilon(100.0) == 1);
  CHECK_THROWS_AS(k0_of_epsilon(0.0), InvalidParameter);
}

TEST_CASE("metric axioms hold on random triples") {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto n = static_cast<std::uint32_t>(1 + rng.next_below(6));
    const auto p = static_cast<std::uint32_t>(1 + rng.next_below(6));
    const PointX2 a = random_point(rng, n, p, 64);
    const PointX2 b = random_point(rng, n, p, 64);
    const PointX2 c = random_point(rng, n, p, 64);

    const double ab = d2(a, b), ba = d2(b, a);
    const double bc = d2(b, c), ac = d2(a, c);
    CHECK(ab >= 0.0);
    CHECK(ab == ba);
    CHECK(ac <= ab + bc + 1e-12);
    CHECK(d2(a, a) == 0.0);

    // Identity of indiscernibles at the truncation depth.
    if (ab == 0.0) CHECK(equal_to_depth(a, b, 64));

    // Integer part separates the state distances whenever the fractional
    // strategy part stays below 1; it never exceeds them by 3.
    const double state_sum =
        static_cast<double>(dist_state(a.cover, b.cover) +
                            dist_state(a.message, b.message));
    const double strategy_sum = ab - state_sum;
    CHECK(std::floor(ab) >= state_sum);
    CHECK(std::floor(ab) <= state_sum + 2);
    if (strategy_sum < 1.0) CHECK(std::floor(ab) == state_sum);
  }
}

TEST_CASE("one step is 10-Lipschitz on pairs with equal states") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto n = static_cast<std::uint32_t>(1 + rng.next_below(6));
    const auto p = static_cast<std::uint32_t>(1 + rng.next_below(6));
    const std::size_t q = 1 + rng.next_below(8);
    const PointX2 a = random_point(rng, n, p, 80);

    // Same states, strategies agreeing on the first q terms.
    PointX2 b = a;
    const auto scramble_tail = [&](const Strategy& s) {
      std::vector<std::uint32_t> terms = s.block();
      for (std::size_t i = q; i < terms.size(); ++i)
        terms[i] = static_cast<std::uint32_t>(rng.next_below(s.alphabet()));
      return Strategy(s.alphabet(), std::move(terms));
    };
    b.place = scramble_tail(a.place);
    b.choice = scramble_tail(a.choice);
    b.mixing = scramble_tail(a.mixing);

    const PointX2 fa = scismm_step(a);
    const PointX2 fb = scismm_step(b);
    CHECK(fa.cover == fb.cover);
    CHECK(fa.message == fb.message);
    CHECK(fa.place.equal_prefix(fb.place, q - 1));
    CHECK(fa.choice.equal_prefix(fb.choice, q - 1));
    CHECK(fa.mixing.equal_prefix(fb.mixing, q - 1));
    CHECK(d2(fa, fb) <= 10.0 * d2(a, b) + 1e-9);
  }
}
