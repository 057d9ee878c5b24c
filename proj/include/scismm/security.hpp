#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scismm/bitvector.hpp"
#include "scismm/keystream.hpp"
#include "scismm/phase_space.hpp"
#include "scismm/rng.hpp"

namespace scismm {

// Exact output distribution of the embedding over uniform covers, messages
// and strategy prefixes, obtained by full enumeration.
struct ExactDistribution {
  std::uint32_t cover_bits = 0;
  std::uint32_t message_bits = 0;
  std::size_t steps = 0;
  std::vector<std::uint64_t> counts;  // indexed by the stego state
  std::uint64_t total = 0;

  struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
  };

  Rational probability(std::size_t stego_index) const;  // reduced
  // True when every outcome has probability exactly 2^-cover_bits.
  bool uniform() const;
};

// Enumerates all 2^n covers, 2^p messages and n^t * p^(2t) strategy prefixes.
// BudgetExceeded when the product passes 2^26.
ExactDistribution exact_distribution(std::uint32_t n, std::uint32_t p,
                                     std::size_t t);

// Monte-Carlo uniformity check of the stego output against the flat
// distribution. Fully determined by (parameters, seed); trials draw from
// decorrelated per-index streams so any evaluation order reproduces the same
// report.
struct UniformityReport {
  std::uint32_t cover_bits = 0;
  std::uint32_t message_bits = 0;
  std::size_t steps = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string generator;  // algorithm identifier
  std::string key_hex;    // set for keyed runs
  std::string plcm_hex;   // set for keyed runs
  std::vector<std::uint64_t> bins;
  std::uint32_t dof = 0;
  double statistic = 0.0;
  double p_value = 0.0;

  // Line-oriented key=value serialization; field order is fixed and
  // documented in the README.
  std::string to_text() const;
};

// Draws uniform covers, messages and independent uniform strategy terms.
// Requires samples >= 10 * 2^n.
UniformityReport uniformity_test(std::uint32_t n, std::uint32_t p,
                                 std::size_t t, std::uint64_t samples,
                                 std::uint64_t seed);

// Control run: a broken generator emitting the all-zero stego state every
// time. Calibrates the test's reaction to maximal non-uniformity.
UniformityReport constant_output_report(std::uint32_t n, std::uint64_t samples,
                                        std::uint64_t seed);

// One report per key, with the strategy triple derived from the key (blind
// mode) instead of drawn uniformly. Deterministic keyed strategies only
// approximate the uniform-strategy hypothesis of the exact analysis, so these
// reports are exploratory and carry no acceptance threshold.
std::vector<UniformityReport> keyed_uniformity_test(
    const std::vector<UnitFraction>& keys, const PlcmParameter& p,
    std::uint32_t n, std::uint32_t p_bits, std::size_t t,
    std::uint64_t samples_per_key, std::uint64_t seed);

// Random phase-space point with the given alphabet sizes and finite strategy
// material. Used by the chaos experiments and their tests.
PointX2 random_point_x2(SplitMix64& rng, std::uint32_t n, std::uint32_t p,
                        std::size_t material);

// Deterministic experiment drivers behind the analyze subcommands.
struct TrialSummary {
  std::size_t succeeded = 0;
  std::size_t attempted = 0;
  std::string details;  // one line per failure, empty when all pass
};

TrialSummary periodic_density_trials(std::size_t trials, double eps,
                                     std::uint64_t seed, std::uint32_t max_n = 4,
                                     std::uint32_t max_p = 4);
TrialSummary transitivity_trials(std::size_t trials, double radius,
                                 std::uint64_t seed, std::uint32_t max_n = 4,
                                 std::uint32_t max_p = 4);
TrialSummary sensitivity_trials(std::size_t trials, int closeness_exponent,
                                std::size_t max_steps, std::uint64_t seed,
                                std::uint32_t max_n = 4,
                                std::uint32_t max_p = 4);

}  // namespace scismm
