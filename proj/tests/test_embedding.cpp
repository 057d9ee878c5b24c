#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "scismm/embedding.hpp"
#include "scismm/rng.hpp"

using namespace scismm;

namespace {

// The worked two-step instance used across this suite:
// x0=(0,0,0,0), m0=(1,0), Sp=(0,2), Sc=(0,1), Sm=(1,0).
// Step 1 writes m0_0=1 into cell 0, then negates message bit 1.
// Step 2 writes m^1_1=1 into cell 2, then negates message bit 0.
ScismmInput worked_instance() {
  return ScismmInput{BitVector{0, 0, 0, 0}, BitVector{1, 0},
                     Strategy(4, {0, 2}), Strategy(2, {0, 1}),
                     Strategy(2, {1, 0}), 2};
}

ScismmInput random_instance(SplitMix64& rng, std::uint32_t max_n,
                            std::uint32_t max_p, std::size_t max_t) {
  const auto n = static_cast<std::uint32_t>(1 + rng.next_below(max_n));
  const auto p = static_cast<std::uint32_t>(1 + rng.next_below(max_p));
  const std::size_t t = rng.next_below(max_t + 1);
  BitVector cover(n), message(p);
  for (std::uint32_t i = 0; i < n; ++i) cover.set(i, rng.next_bit());
  for (std::uint32_t i = 0; i < p; ++i) message.set(i, rng.next_bit());
  std::vector<std::uint32_t> sp(t), sc(t), sm(t);
  for (auto& v : sp) v = static_cast<std::uint32_t>(rng.next_below(n));
  for (auto& v : sc) v = static_cast<std::uint32_t>(rng.next_below(p));
  for (auto& v : sm) v = static_cast<std::uint32_t>(rng.next_below(p));
  return ScismmInput{std::move(cover), std::move(message),
                     Strategy(n, std::move(sp)), Strategy(p, std::move(sc)),
                     Strategy(p, std::move(sm)), t};
}

}  // namespace

TEST_CASE("message mixing") {
  const BitVector m0{1, 0};
  CHECK(mix_message(m0, Strategy(2, {1, 0}), 0) == m0);
  CHECK(mix_message(BitVector{1}, Strategy(1, {0}), 1) == BitVector{0});
  CHECK(mix_message(m0, Strategy(2, {1, 0}), 2) == BitVector{0, 1});
  CHECK_THROWS_AS(mix_message(m0, Strategy(2, {1}), 2), InsufficientStrategy);
}

TEST_CASE("message mixing equals the negation-parity closed form") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const ScismmInput in = random_instance(rng, 4, 6, 12);
    const BitVector mixed = mix_message(in.message, in.mixing, in.steps);
    for (std::size_t j = 0; j < in.message.size(); ++j) {
      std::size_t hits = 0;
      for (std::size_t i = 0; i < in.steps; ++i)
        hits += in.mixing.term(i) == j;
      CHECK(mixed[j] == (in.message[j] ^ (hits & 1u)));
    }
  }
}

TEST_CASE("embedding hand trace") {
  const EmbedResult res = embed(worked_instance());
  CHECK(res.stego == BitVector{1, 0, 1, 0});
  REQUIRE(res.trace.steps.size() == 2);
  CHECK(res.trace.steps[0].place == 0);
  CHECK(res.trace.steps[0].choice == 0);
  CHECK(res.trace.steps[0].written == 1);
  CHECK(res.trace.steps[0].mix == 1);
  CHECK(res.trace.steps[1].place == 2);
  CHECK(res.trace.steps[1].choice == 1);
  CHECK(res.trace.steps[1].written == 1);
  CHECK(res.trace.steps[1].mix == 0);
}

TEST_CASE("embedding edge cases") {
  ScismmInput in = worked_instance();
  in.steps = 0;
  CHECK(embed(in).stego == in.cover);

  // A constant place strategy can only ever touch cell 0.
  ScismmInput pinned{BitVector{0, 1, 0}, BitVector{1, 1},
                     Strategy(3, {0, 0, 0, 0}), Strategy(2, {0, 1, 0, 1}),
                     Strategy(2, {1, 1, 0, 0}), 4};
  const BitVector out = embed(pinned).stego;
  CHECK(out[1] == pinned.cover[1]);
  CHECK(out[2] == pinned.cover[2]);

  ScismmInput starved = worked_instance();
  starved.steps = 3;
  CHECK_THROWS_AS(embed(starved), InsufficientStrategy);
}

TEST_CASE("trace reads the pre-mix message and replays exactly") {
  SplitMix64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const ScismmInput in = random_instance(rng, 6, 5, 16);
    const EmbedResult res = embed(in);
    REQUIRE(res.trace.steps.size() == in.steps);

    for (const EmbedStep& step : res.trace.steps) {
      const BitVector pre_mix = mix_message(in.message, in.mixing, step.n - 1);
      CHECK(step.written == pre_mix[step.choice]);
    }

    // Rebuilding the strategies from the trace reproduces the stego state.
    std::vector<std::uint32_t> sp, sc, sm;
    for (const EmbedStep& step : res.trace.steps) {
      sp.push_back(step.place);
      sc.push_back(step.choice);
      sm.push_back(step.mix);
    }
    const auto n = static_cast<std::uint32_t>(in.cover.size());
    const auto p = static_cast<std::uint32_t>(in.message.size());
    const ScismmInput replay{in.cover, in.message, Strategy(n, sp),
                             Strategy(p, sc), Strategy(p, sm), in.steps};
    CHECK(embed(replay).stego == res.stego);

    // Cells never named by the place strategy keep their cover bits.
    for (std::size_t i = 0; i < in.cover.size(); ++i) {
      const bool written = std::any_of(
          sp.begin(), sp.end(), [&](std::uint32_t c) { return c == i; });
      if (!written) CHECK(res.stego[i] == in.cover[i]);
    }

    // The raw kernel agrees with the traced path.
    std::vector<std::uint8_t> x(in.cover.bits());
    std::vector<std::uint8_t> m(in.message.bits());
    embed_kernel(x.data(), n, m.data(), p, sp.data(), sc.data(), sm.data(),
                 in.steps);
    CHECK(BitVector::from_bits(x) == res.stego);
    CHECK(BitVector::from_bits(m) ==
          mix_message(in.message, in.mixing, in.steps));
  }
}

TEST_CASE("decodability of the hand trace") {
  const ScismmInput in = worked_instance();
  const DecodabilityReport rep =
      decodability(in.place, in.choice, in.mixing, 4, 2, 2);
  CHECK(rep.complete());
  CHECK(rep.recoverable == std::vector<std::uint32_t>{0, 1});
  REQUIRE(rep.plan[0].has_value());
  REQUIRE(rep.plan[1].has_value());
  CHECK(rep.plan[0]->step == 1);
  CHECK(rep.plan[0]->cell == 0);
  CHECK(rep.plan[0]->parity == 0);
  CHECK(rep.plan[1]->step == 2);
  CHECK(rep.plan[1]->cell == 2);
  CHECK(rep.plan[1]->parity == 1);
}

TEST_CASE("decodability edge cases") {
  // No steps: nothing recoverable.
  const DecodabilityReport empty = decodability(
      Strategy(4, {}), Strategy(2, {}), Strategy(2, {}), 4, 2, 0);
  CHECK(empty.recoverable.empty());
  CHECK(empty.missing == std::vector<std::uint32_t>{0, 1});

  // Step 2 overwrites cell 0, killing message bit 0's only write.
  const DecodabilityReport clobbered =
      decodability(Strategy(4, {0, 0}), Strategy(2, {0, 1}),
                   Strategy(2, {0, 0}), 4, 2, 2);
  CHECK(clobbered.missing == std::vector<std::uint32_t>{0});
  CHECK(clobbered.recoverable == std::vector<std::uint32_t>{1});
}

TEST_CASE("extraction inverts the hand trace") {
  const ScismmInput in = worked_instance();
  CHECK(extract_message(BitVector{1, 0, 1, 0}, in.place, in.choice, in.mixing,
                        2, 2) == BitVector{1, 0});

  try {
    extract_message(BitVector{0, 0, 0, 0}, in.place, in.choice, in.mixing, 2,
                    0);
    FAIL("expected UndecodableMessage");
  } catch (const UndecodableMessage& e) {
    CHECK(e.missing() == std::vector<std::uint32_t>{0, 1});
  }
}

TEST_CASE("extraction inverts embedding on decodable instances") {
  SplitMix64 rng(47);
  int decodable_seen = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const ScismmInput in = random_instance(rng, 32, 8, 64);
    const auto n = static_cast<std::uint32_t>(in.cover.size());
    const auto p = static_cast<std::uint32_t>(in.message.size());
    const DecodabilityReport rep =
        decodability(in.place, in.choice, in.mixing, n, p, in.steps);
    const EmbedResult res = embed(in);
    if (rep.complete()) {
      ++decodable_seen;
      CHECK(extract_message(res.stego, in.place, in.choice, in.mixing, p,
                            in.steps) == in.message);
    } else {
      CHECK_THROWS_AS(extract_message(res.stego, in.place, in.choice,
                                      in.mixing, p, in.steps),
                      UndecodableMessage);
    }
  }
  CHECK(decodable_seen > 0);
}

// Exhaustive oracle on a small instance: whatever strategies are drawn, the
// recoverable set must decode correctly for every one of the 2^p messages.
TEST_CASE("recoverable bits decode for every message exhaustively") {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t n = 3, p = 3;
    const std::size_t t = rng.next_below(7);
    std::vector<std::uint32_t> sp(t), sc(t), sm(t);
    for (auto& v : sp) v = static_cast<std::uint32_t>(rng.next_below(n));
    for (auto& v : sc) v = static_cast<std::uint32_t>(rng.next_below(p));
    for (auto& v : sm) v = static_cast<std::uint32_t>(rng.next_below(p));
    const Strategy place(n, sp), choice(p, sc), mixing(p, sm);
    const DecodabilityReport rep = decodability(place, choice, mixing, n, p, t);

    for (std::uint64_t mi = 0; mi < 8; ++mi) {
      const BitVector m0 = BitVector::from_index(mi, p);
      const BitVector cover{1, 0, 1};
      const EmbedResult res =
          embed(ScismmInput{cover, m0, place, choice, mixing, t});
      for (std::uint32_t j : rep.recoverable) {
        const RecoverySlot& slot = *rep.plan[j];
        CHECK((res.stego[slot.cell] ^ slot.parity) == m0[j]);
      }
    }
  }
}
