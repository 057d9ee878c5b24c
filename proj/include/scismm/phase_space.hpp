#pragma once

#include <cstdint>

#include "scismm/bitvector.hpp"
#include "scismm/strategy.hpp"

namespace scismm {

// Point of the single-strategy phase space: one strategy and one state.
struct PointX1 {
  Strategy strategy;  // over N
  BitVector state;    // length N

  friend bool operator==(const PointX1&, const PointX1&) = default;
};

// Point of the embedding phase space: place/choice/mixing strategies plus the
// cover and message states.
struct PointX2 {
  Strategy place;     // over N
  BitVector cover;    // length N
  Strategy choice;    // over P
  BitVector message;  // length P
  Strategy mixing;    // over P

  friend bool operator==(const PointX2&, const PointX2&) = default;
};

// Number of strategy terms summed in distances. The dropped tail contributes
// less than 10^-depth, far below every tolerance used here.
struct TruncationDepth {
  std::size_t depth = 64;
};

// Hamming distance between equal-length states.
std::size_t dist_state(const BitVector& a, const BitVector& b);

// (9/N) * sum_k |a^k - b^k| / 10^(k+1) over the first `depth` terms; always
// in [0, 1).
double dist_strategy(const Strategy& a, const Strategy& b,
                     TruncationDepth d = {});

double d1(const PointX1& a, const PointX1& b, TruncationDepth d = {});
double d2(const PointX2& a, const PointX2& b, TruncationDepth d = {});

// Negation update at the first strategy term, then shift.
PointX1 g_step(const PointX1& p);

// One embedding step in phase space: substitute the chosen message bit into
// the chosen cover cell, negate the chosen message bit, shift all strategies.
PointX2 scismm_step(const PointX2& p);

PointX2 scismm_iterate(PointX2 p, std::size_t steps);

// Prefix length that keeps three strategy distances below eps in total:
// floor(-log10(eps/3)) + 1, never below 1.
int k0_of_epsilon(double eps);

// True when term(i) of each strategy pair agrees for every i < depth and the
// states are equal; the strongest equality the truncated metric can certify.
bool equal_to_depth(const PointX2& a, const PointX2& b, std::size_t depth);

}  // namespace scismm
