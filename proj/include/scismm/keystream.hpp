#pragma once

#include <cstdint>

#include "scismm/fraction.hpp"
#include "scismm/strategy.hpp"

namespace scismm {

// Control parameter of the piecewise linear map, strictly inside (0, 1/2).
class PlcmParameter {
 public:
  explicit PlcmParameter(UnitFraction p);
  UnitFraction value() const { return p_; }

 private:
  UnitFraction p_;
};

// Piecewise linear chaotic map on [0,1). Branches:
//   [0, p)    -> x / p
//   [p, 1/2]  -> (x - p) / (1/2 - p)
//   (1/2, 1)  -> same map applied to 1 - x
// The exact result 1 (reached only at x = 1/2) is not representable and is
// stored as numerator 0; the orbit is then stuck and the strategy generator
// reports it as degenerate.
UnitFraction plcm(UnitFraction x, const PlcmParameter& p);

// Seed mixing: numerator xor. A zero result freezes the orbit at 0, so it is
// rejected outright.
UnitFraction key_schedule(UnitFraction k, UnitFraction m);

struct CiisConfig {
  UnitFraction seed;     // K^0
  PlcmParameter p;
  std::uint32_t alphabet;
  std::size_t length;
};

// Keyed strategy stream: term n = floor(alphabet * K^n) clamped to
// alphabet - 1, with K^{n+1} = plcm(K^n, p). An orbit value of exactly 0
// while terms are still owed raises DegenerateSeed: the stream would be
// constant from there on and the caller must re-key.
Strategy ciis_strategy(const CiisConfig& cfg);

enum class StrategyMode { blind, paper_faithful };

struct StrategyTriple {
  Strategy place;   // over the cover alphabet N
  Strategy choice;  // over the message alphabet P
  Strategy mixing;  // over the message alphabet P
};

// Public per-stream constants (fractional parts of 1/phi, sqrt 2, sqrt 3).
// Blind mode seeds stream i with key xor c_i, so extraction can re-derive the
// strategies from the key alone.
inline constexpr std::uint64_t kStreamConstant1 = 0x9e3779b97f4a7c15ULL;
inline constexpr std::uint64_t kStreamConstant2 = 0x6a09e667f3bcc908ULL;
inline constexpr std::uint64_t kStreamConstant3 = 0xbb67ae8584caa73bULL;

// Three independent keyed streams sharing one control parameter. Blind mode
// seeds them with key xor c_i. Paper-faithful mode seeds the place stream
// with key xor message_fraction (the first 64 message bits, MSB-first,
// zero-padded) and derives the other two from that seed with c2/c3; such
// strategies cannot be re-derived without the message.
StrategyTriple derive_strategy_triple(UnitFraction key, const PlcmParameter& p,
                                      std::uint32_t cover_bits,
                                      std::uint32_t message_bits,
                                      std::size_t length, StrategyMode mode,
                                      UnitFraction message_fraction = {});

}  // namespace scismm
