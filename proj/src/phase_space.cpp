#include "scismm/phase_space.hpp"

#include <cmath>

namespace scismm {

std::size_t dist_state(const BitVector& a, const BitVector& b) {
  return hamming_distance(a, b);
}

double dist_strategy(const Strategy& a, const Strategy& b, TruncationDepth d) {
  if (a.alphabet() != b.alphabet())
    throw AlphabetMismatch("strategy distance needs a common alphabet");
  if (!a.has_terms(d.depth) || !b.has_terms(d.depth))
    throw InsufficientStrategy("strategies shorter than the truncation depth");
  double sum = 0.0;
  double weight = 0.1;
  for (std::size_t k = 0; k < d.depth; ++k) {
    const double diff = std::abs(static_cast<double>(a.term(k)) -
                                 static_cast<double>(b.term(k)));
    sum += diff * weight;
    weight *= 0.1;
  }
  return sum * 9.0 / static_cast<double>(a.alphabet());
}

double d1(const PointX1& a, const PointX1& b, TruncationDepth d) {
  if (a.state.size() != b.state.size() ||
      a.strategy.alphabet() != b.strategy.alphabet())
    throw ShapeMismatch("points live in different phase spaces");
  return static_cast<double>(dist_state(a.state, b.state)) +
         dist_strategy(a.strategy, b.strategy, d);
}

double d2(const PointX2& a, const PointX2& b, TruncationDepth d) {
  if (a.cover.size() != b.cover.size() || a.message.size() != b.message.size())
    throw ShapeMismatch("points live in different phase spaces");
  return static_cast<double>(dist_state(a.cover, b.cover)) +
         static_cast<double>(dist_state(a.message, b.message)) +
         dist_strategy(a.place, b.place, d) +
         dist_strategy(a.choice, b.choice, d) +
         dist_strategy(a.mixing, b.mixing, d);
}

PointX1 g_step(const PointX1& p) {
  if (!p.strategy.has_terms(1))
    throw InsufficientStrategy("strategy exhausted");
  const std::uint32_t cell = p.strategy.term(0);
  BitVector state = p.state;
  state.flip(cell);  // negation update touches only the selected cell
  return PointX1{p.strategy.shifted(), std::move(state)};
}

PointX2 scismm_step(const PointX2& p) {
  if (!p.place.has_terms(1) || !p.choice.has_terms(1) || !p.mixing.has_terms(1))
    throw InsufficientStrategy("strategy exhausted");
  const std::uint32_t cell = p.place.term(0);
  const std::uint32_t read = p.choice.term(0);
  const std::uint32_t mix = p.mixing.term(0);
  if (cell >= p.cover.size() || read >= p.message.size() ||
      mix >= p.message.size())
    throw ShapeMismatch("strategy term outside the paired state");
  BitVector cover = p.cover;
  cover.set(cell, p.message[read] != 0);
  BitVector message = p.message;
  message.flip(mix);
  return PointX2{p.place.shifted(), std::move(cover), p.choice.shifted(),
                 std::move(message), p.mixing.shifted()};
}

PointX2 scismm_iterate(PointX2 p, std::size_t steps) {
  for (std::size_t i = 0; i < steps; ++i) p = scismm_step(p);
  return p;
}

int k0_of_epsilon(double eps) {
  if (!(eps > 0.0)) throw InvalidParameter("epsilon must be positive");
  const int k0 = static_cast<int>(std::floor(-std::log10(eps / 3.0))) + 1;
  return k0 < 1 ? 1 : k0;
}

bool equal_to_depth(const PointX2& a, const PointX2& b, std::size_t depth) {
  return a.cover == b.cover && a.message == b.message &&
         a.place.equal_prefix(b.place, depth) &&
         a.choice.equal_prefix(b.choice, depth) &&
         a.mixing.equal_prefix(b.mixing, depth);
}

}  // namespace scismm
