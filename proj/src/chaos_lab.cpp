#include "scismm/chaos_lab.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace scismm {

namespace {

// Mutable working copy of the construction: states being simulated plus the
// strategy terms appended so far.
struct Builder {
  BitVector x;
  BitVector m;
  std::vector<std::uint32_t> sp, sc, sm;

  void apply(std::uint32_t cell, std::uint32_t read, std::uint32_t mix) {
    sp.push_back(cell);
    sc.push_back(read);
    sm.push_back(mix);
    x.set(cell, m[read] != 0);
    m.flip(mix);
  }
};

// Indices where `current` disagrees with `wanted`, ascending.
std::vector<std::uint32_t> disagreements(const BitVector& current,
                                         const BitVector& wanted) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < current.size(); ++i)
    if (current[i] != wanted[i]) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

std::optional<std::uint32_t> first_message_bit_equal(const BitVector& m,
                                                     std::uint8_t wanted) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] == wanted) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

std::optional<std::uint32_t> first_cover_bit_equal(const BitVector& x,
                                                   std::uint8_t wanted) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] == wanted) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

// Copies the first k0 terms of the target strategies and replays them, then
// appends correction steps that drive the simulated states onto
// (wanted_cover, wanted_message) without disturbing already-correct cells.
Builder build_correcting_tail(const PointX2& start, std::size_t k0,
                              const BitVector& wanted_cover,
                              const BitVector& wanted_message) {
  Builder b{start.cover, start.message, {}, {}, {}};
  for (std::size_t i = 0; i < k0; ++i)
    b.apply(start.place.term(i), start.choice.term(i), start.mixing.term(i));

  const std::uint32_t p = static_cast<std::uint32_t>(b.m.size());

  // Repair cover cells, smallest index first. Reading a message bit equal to
  // the wanted value costs one step; otherwise negate bit 0, use it, and
  // negate it back over two steps.
  for (std::uint32_t j : disagreements(b.x, wanted_cover)) {
    if (auto lambda = first_message_bit_equal(b.m, wanted_cover[j])) {
      b.apply(j, *lambda, *lambda);
    } else {
      b.apply(j, 0, 0);
      b.apply(j, 0, 0);
    }
  }

  // Repair message bits. Writing the pre-negation bit into a cover cell that
  // already holds it keeps the cover intact; when no such cell exists a
  // three-step block temporarily breaks cell 0 and restores it while a
  // neighbouring message bit absorbs the two extra negations.
  for (std::uint32_t r : disagreements(b.m, wanted_message)) {
    if (auto mu = first_cover_bit_equal(wanted_cover, b.m[r])) {
      b.apply(*mu, r, r);
    } else {
      if (p < 2)
        throw ConstructionFailed(
            "single-bit message over a constant equal cover has no exact "
            "correction");
      const std::uint32_t s = r == 0 ? 1 : 0;
      b.apply(0, r, r);
      b.apply(0, r, s);
      b.apply(0, r, s);
    }
  }
  return b;
}

}  // namespace

bool is_unreachable_pair(const BitVector& cover, const BitVector& message) {
  return message.size() == 1 && cover.all_equal() && cover[0] == message[0];
}

PeriodicPointResult construct_periodic_point(const PointX2& target, double eps,
                                             TruncationDepth d) {
  if (is_unreachable_pair(target.cover, target.message))
    throw ConstructionFailed(
        "no periodic point matches a single-bit message equal to a constant "
        "cover");
  const std::size_t k0 = static_cast<std::size_t>(k0_of_epsilon(eps));
  Builder b =
      build_correcting_tail(target, k0, target.cover, target.message);
  const std::size_t period = b.sp.size();

  const auto n = static_cast<std::uint32_t>(target.cover.size());
  const auto p = static_cast<std::uint32_t>(target.message.size());
  PointX2 point{Strategy(n, std::move(b.sp), Strategy::Extension::cyclic),
                target.cover,
                Strategy(p, std::move(b.sc), Strategy::Extension::cyclic),
                target.message,
                Strategy(p, std::move(b.sm), Strategy::Extension::cyclic)};

  if (!(d2(point, target, d) < eps))
    throw ConstructionFailed("periodic point left the target ball");
  if (scismm_iterate(point, period) != point)
    throw ConstructionFailed("claimed period is not a return time");
  return PeriodicPointResult{std::move(point), period};
}

TransitPointResult construct_transit_point(const PointX2& ball_center,
                                           double radius,
                                           const PointX2& target_center,
                                           TruncationDepth d) {
  if (ball_center.cover.size() != target_center.cover.size() ||
      ball_center.message.size() != target_center.message.size())
    throw ShapeMismatch("ball and target live in different phase spaces");
  if (!(radius > 0.0)) throw InvalidParameter("radius must be positive");
  if (is_unreachable_pair(target_center.cover, target_center.message))
    throw ConstructionFailed(
        "no orbit hits a single-bit message equal to a constant cover");

  const std::size_t k0 = static_cast<std::size_t>(k0_of_epsilon(radius));
  Builder b = build_correcting_tail(ball_center, k0, target_center.cover,
                                    target_center.message);
  const std::size_t travel = b.sp.size();

  // After the correcting tail the orbit continues along the target's own
  // strategies, so the iterate agrees with it to the truncation depth.
  for (std::size_t i = 0; i < d.depth; ++i) {
    b.sp.push_back(target_center.place.term(i));
    b.sc.push_back(target_center.choice.term(i));
    b.sm.push_back(target_center.mixing.term(i));
  }

  const auto n = static_cast<std::uint32_t>(ball_center.cover.size());
  const auto p = static_cast<std::uint32_t>(ball_center.message.size());
  PointX2 point{Strategy(n, std::move(b.sp)), ball_center.cover,
                Strategy(p, std::move(b.sc)), ball_center.message,
                Strategy(p, std::move(b.sm))};

  if (!(d2(point, ball_center, d) < radius))
    throw ConstructionFailed("transit point left the starting ball");
  const PointX2 arrived = scismm_iterate(point, travel);
  if (!equal_to_depth(arrived, target_center, d.depth))
    throw ConstructionFailed("orbit missed the target center");
  return TransitPointResult{std::move(point), travel};
}

SensitivityResult sensitivity_probe(const PointX2& x, int closeness_exponent,
                                    std::size_t max_steps, TruncationDepth d) {
  if (closeness_exponent < 1)
    throw InvalidParameter("closeness exponent must be >= 1");
  const auto n = static_cast<std::uint32_t>(x.cover.size());
  const auto p = static_cast<std::uint32_t>(x.message.size());
  const std::size_t first = static_cast<std::size_t>(closeness_exponent) + 2;

  // Materialize enough terms to mutate one and to measure distances after
  // the divergence step; finite strategies keep their full length.
  const auto materialize = [&](const Strategy& s,
                               std::size_t count) -> std::vector<std::uint32_t> {
    const std::size_t len = s.cyclic() ? count : s.materialized();
    std::vector<std::uint32_t> terms;
    terms.reserve(len);
    for (std::size_t i = 0; i < len; ++i) terms.push_back(s.term(i));
    return terms;
  };

  PointX2 cur = scismm_iterate(x, first);
  for (std::size_t t = first; t + 1 <= max_steps; ++t) {
    if (!x.place.has_terms(t + 1 + d.depth) ||
        !x.choice.has_terms(t + 1 + d.depth) ||
        !x.mixing.has_terms(t + 1 + d.depth))
      break;
    const std::uint32_t cell = x.place.term(t);
    const std::uint32_t value = cur.message[x.choice.term(t)];

    // Redirecting the write works whenever some cell disagrees with the
    // written bit: either the original write flips its own cell and the
    // neighbour does not, or the redirected write flips a fresh cell.
    std::optional<std::uint32_t> redirect;
    if (cur.cover[cell] != value) {
      for (std::uint32_t b = 0; b < n; ++b)
        if (b != cell) { redirect = b; break; }
    } else {
      for (std::uint32_t b = 0; b < n; ++b)
        if (cur.cover[b] != value) { redirect = b; break; }
    }

    const std::size_t need = t + 1 + d.depth;
    PointX2 y = x;
    bool built = false;
    if (redirect) {
      auto terms = materialize(x.place, need);
      terms[t] = *redirect;
      y.place = Strategy(n, std::move(terms));
      y.choice = Strategy(p, materialize(x.choice, need));
      y.mixing = Strategy(p, materialize(x.mixing, need));
      built = true;
    } else if (p >= 2) {
      // Negating a different message bit separates the messages immediately.
      const std::uint32_t old_mix = x.mixing.term(t);
      auto terms = materialize(x.mixing, need);
      terms[t] = old_mix == 0 ? 1 : 0;
      y.mixing = Strategy(p, std::move(terms));
      y.place = Strategy(n, materialize(x.place, need));
      y.choice = Strategy(p, materialize(x.choice, need));
      built = true;
    }

    if (built) {
      const std::size_t diverge = t + 1;
      if (!(d2(x, y, d) < std::pow(10.0, -closeness_exponent)))
        throw ConstructionFailed("probe neighbour left the closeness ball");
      if (!(d2(scismm_iterate(x, diverge), scismm_iterate(y, diverge), d) >= 1.0))
        throw ConstructionFailed("probe neighbour failed to separate");
      return SensitivityResult{std::move(y), diverge};
    }
    cur = scismm_step(cur);
  }
  throw ProbeExhausted("no separating neighbour within the step budget");
}

}  // namespace scismm
