#include "scismm/chaotic.hpp"

namespace scismm {

BitVector vectorial_negation(const BitVector& v) {
  BitVector out = v;
  for (std::size_t i = 0; i < out.size(); ++i) out.flip(i);
  return out;
}

BooleanMap negation_map(std::uint32_t arity) {
  return BooleanMap{arity, [](const BitVector& v) { return vectorial_negation(v); }};
}

BitVector ci_step(const BitVector& state, const BooleanMap& f, std::size_t cell) {
  if (cell >= state.size()) throw IndexOutOfRange("update cell out of range");
  if (f.arity != state.size())
    throw ShapeMismatch("map arity does not match state length");
  BitVector image = f.rule(state);
  if (image.size() != state.size())
    throw ShapeMismatch("map rule changed the state length");
  BitVector out = state;
  out.set(cell, image[cell] != 0);
  return out;
}

BitVector ci_iterate(const BitVector& x0, const BooleanMap& f, const Strategy& s,
                     std::size_t steps) {
  if (s.alphabet() != x0.size())
    throw AlphabetMismatch("strategy alphabet does not match state length");
  if (!s.has_terms(steps))
    throw InsufficientStrategy("strategy shorter than the requested step count");
  BitVector state = x0;
  for (std::size_t n = 0; n < steps; ++n) state = ci_step(state, f, s.term(n));
  return state;
}

}  // namespace scismm
