#pragma once

#include <functional>

#include "scismm/bitvector.hpp"
#include "scismm/strategy.hpp"

namespace scismm {

// Discrete boolean metric: 0 iff the two bits agree.
inline int delta(int a, int b) { return a == b ? 0 : 1; }

// Flip every bit. Involution and bijection on states of any length.
BitVector vectorial_negation(const BitVector& v);

// Total update rule on states of a fixed width.
struct BooleanMap {
  std::uint32_t arity;
  std::function<BitVector(const BitVector&)> rule;
};

BooleanMap negation_map(std::uint32_t arity);

// Asynchronous update: position `cell` takes f(state)[cell], all other
// positions copy over unchanged.
BitVector ci_step(const BitVector& state, const BooleanMap& f, std::size_t cell);

// `steps` asynchronous updates; step n (1-based) updates cell S^{n-1}.
BitVector ci_iterate(const BitVector& x0, const BooleanMap& f, const Strategy& s,
                     std::size_t steps);

}  // namespace scismm
