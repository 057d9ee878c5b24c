#include "scismm/security.hpp"

#include <cstdio>
#include <numeric>

#include "scismm/chaos_lab.hpp"
#include "scismm/chi_square.hpp"
#include "scismm/embedding.hpp"

namespace scismm {

namespace {

constexpr std::uint64_t kEnumerationBudget = 1ULL << 26;
constexpr std::uint32_t kMaxTableBits = 20;

// Odometer over `digits` positions in base `base`; false once wrapped.
bool advance(std::vector<std::uint32_t>& digits, std::uint32_t base) {
  for (auto& d : digits) {
    if (++d < base) return true;
    d = 0;
  }
  return false;
}

void unpack_bits(std::uint64_t index, std::uint8_t* bits, std::uint32_t count) {
  for (std::uint32_t i = 0; i < count; ++i)
    bits[i] = static_cast<std::uint8_t>((index >> (count - 1 - i)) & 1u);
}

std::uint64_t pack_bits(const std::uint8_t* bits, std::uint32_t count) {
  std::uint64_t index = 0;
  for (std::uint32_t i = 0; i < count; ++i)
    index |= static_cast<std::uint64_t>(bits[i]) << (count - 1 - i);
  return index;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void finish_report(UniformityReport& rep) {
  rep.dof = static_cast<std::uint32_t>(rep.bins.size()) - 1;
  const double expected =
      static_cast<double>(rep.samples) / static_cast<double>(rep.bins.size());
  rep.statistic = chi_square_statistic(rep.bins, expected);
  rep.p_value = chi_square_p_value(rep.statistic, rep.dof);
}

}  // namespace

ExactDistribution::Rational ExactDistribution::probability(
    std::size_t stego_index) const {
  const std::uint64_t c = counts.at(stego_index);
  const std::uint64_t g = std::gcd(c == 0 ? total : c, total);
  return Rational{c / g, total / g};
}

bool ExactDistribution::uniform() const {
  for (std::uint64_t c : counts)
    if (c << cover_bits != total) return false;
  return true;
}

ExactDistribution exact_distribution(std::uint32_t n, std::uint32_t p,
                                     std::size_t t) {
  if (n == 0 || p == 0) throw InvalidParameter("alphabets must be >= 1");
  if (n > kMaxTableBits)
    throw InvalidParameter("outcome table too wide to tabulate");
  if (n + p > 26) throw BudgetExceeded("enumeration exceeds the 2^26 budget");

  unsigned __int128 work = static_cast<unsigned __int128>(1) << (n + p);
  for (std::size_t i = 0; i < t; ++i) {
    work *= n;
    work *= p;
    work *= p;
    if (work > kEnumerationBudget)
      throw BudgetExceeded("enumeration exceeds the 2^26 budget");
  }

  ExactDistribution dist;
  dist.cover_bits = n;
  dist.message_bits = p;
  dist.steps = t;
  dist.counts.assign(std::size_t{1} << n, 0);

  std::vector<std::uint32_t> sp(t, 0), sc(t, 0), sm(t, 0);
  std::vector<std::uint8_t> x(n), m(p);
  bool more_sp = true;
  while (more_sp) {
    bool more_sc = true;
    std::fill(sc.begin(), sc.end(), 0);
    while (more_sc) {
      bool more_sm = true;
      std::fill(sm.begin(), sm.end(), 0);
      while (more_sm) {
        for (std::uint64_t ci = 0; ci < (std::uint64_t{1} << n); ++ci) {
          for (std::uint64_t mi = 0; mi < (std::uint64_t{1} << p); ++mi) {
            unpack_bits(ci, x.data(), n);
            unpack_bits(mi, m.data(), p);
            embed_kernel(x.data(), n, m.data(), p, sp.data(), sc.data(),
                         sm.data(), t);
            ++dist.counts[pack_bits(x.data(), n)];
            ++dist.total;
          }
        }
        more_sm = t > 0 && advance(sm, p);
      }
      more_sc = t > 0 && advance(sc, p);
    }
    more_sp = t > 0 && advance(sp, n);
  }
  return dist;
}

std::string UniformityReport::to_text() const {
  std::string out;
  out += "report=uniformity\n";
  out += "version=1\n";
  out += "generator=" + generator + "\n";
  out += "n=" + std::to_string(cover_bits) + "\n";
  out += "p=" + std::to_string(message_bits) + "\n";
  out += "t=" + std::to_string(steps) + "\n";
  out += "samples=" + std::to_string(samples) + "\n";
  out += "seed=" + std::to_string(seed) + "\n";
  if (!key_hex.empty()) out += "key=" + key_hex + "\n";
  if (!plcm_hex.empty()) out += "plcm_p=" + plcm_hex + "\n";
  out += "dof=" + std::to_string(dof) + "\n";
  out += "statistic=" + format_double(statistic) + "\n";
  out += "p_value=" + format_double(p_value) + "\n";
  out += "bins=";
  for (std::size_t i = 0; i < bins.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(bins[i]);
  }
  out += "\n";
  return out;
}

UniformityReport uniformity_test(std::uint32_t n, std::uint32_t p,
                                 std::size_t t, std::uint64_t samples,
                                 std::uint64_t seed) {
  if (n == 0 || p == 0) throw InvalidParameter("alphabets must be >= 1");
  if (n > kMaxTableBits) throw InvalidParameter("bin table too wide");
  if (samples < (std::uint64_t{10} << n))
    throw InsufficientSamples("need at least 10 * 2^n samples");

  UniformityReport rep;
  rep.cover_bits = n;
  rep.message_bits = p;
  rep.steps = t;
  rep.samples = samples;
  rep.seed = seed;
  rep.generator = "splitmix64-trial-v1";
  rep.bins.assign(std::size_t{1} << n, 0);

  std::vector<std::uint8_t> x(n), m(p);
  std::vector<std::uint32_t> sp(t), sc(t), sm(t);
  for (std::uint64_t trial = 0; trial < samples; ++trial) {
    SplitMix64 rng = SplitMix64::for_trial(seed, trial);
    for (auto& b : x) b = rng.next_bit() ? 1 : 0;
    for (auto& b : m) b = rng.next_bit() ? 1 : 0;
    for (auto& s : sp) s = static_cast<std::uint32_t>(rng.next_below(n));
    for (auto& s : sc) s = static_cast<std::uint32_t>(rng.next_below(p));
    for (auto& s : sm) s = static_cast<std::uint32_t>(rng.next_below(p));
    embed_kernel(x.data(), n, m.data(), p, sp.data(), sc.data(), sm.data(), t);
    ++rep.bins[pack_bits(x.data(), n)];
  }
  finish_report(rep);
  return rep;
}

UniformityReport constant_output_report(std::uint32_t n, std::uint64_t samples,
                                        std::uint64_t seed) {
  if (n == 0 || n > kMaxTableBits) throw InvalidParameter("bad bin width");
  if (samples < (std::uint64_t{10} << n))
    throw InsufficientSamples("need at least 10 * 2^n samples");
  UniformityReport rep;
  rep.cover_bits = n;
  rep.message_bits = 0;
  rep.steps = 0;
  rep.samples = samples;
  rep.seed = seed;
  rep.generator = "constant-control";
  rep.bins.assign(std::size_t{1} << n, 0);
  rep.bins[0] = samples;
  finish_report(rep);
  return rep;
}

std::vector<UniformityReport> keyed_uniformity_test(
    const std::vector<UnitFraction>& keys, const PlcmParameter& p,
    std::uint32_t n, std::uint32_t p_bits, std::size_t t,
    std::uint64_t samples_per_key, std::uint64_t seed) {
  if (n == 0 || n > kMaxTableBits) throw InvalidParameter("bad bin width");
  if (samples_per_key < (std::uint64_t{10} << n))
    throw InsufficientSamples("need at least 10 * 2^n samples per key");

  std::vector<UniformityReport> reports;
  reports.reserve(keys.size());
  for (const UnitFraction& key : keys) {
    const StrategyTriple triple =
        derive_strategy_triple(key, p, n, p_bits, t, StrategyMode::blind);
    std::vector<std::uint32_t> sp(t), sc(t), sm(t);
    for (std::size_t i = 0; i < t; ++i) {
      sp[i] = triple.place.term(i);
      sc[i] = triple.choice.term(i);
      sm[i] = triple.mixing.term(i);
    }

    UniformityReport rep;
    rep.cover_bits = n;
    rep.message_bits = p_bits;
    rep.steps = t;
    rep.samples = samples_per_key;
    rep.seed = seed;
    rep.generator = "splitmix64-trial-v1/ciis-blind";
    rep.key_hex = key.to_hex();
    rep.plcm_hex = p.value().to_hex();
    rep.bins.assign(std::size_t{1} << n, 0);

    std::vector<std::uint8_t> x(n), m(p_bits);
    for (std::uint64_t trial = 0; trial < samples_per_key; ++trial) {
      SplitMix64 rng = SplitMix64::for_trial(seed ^ key.numerator, trial);
      for (auto& b : x) b = rng.next_bit() ? 1 : 0;
      for (auto& b : m) b = rng.next_bit() ? 1 : 0;
      embed_kernel(x.data(), n, m.data(), p_bits, sp.data(), sc.data(),
                   sm.data(), t);
      ++rep.bins[pack_bits(x.data(), n)];
    }
    finish_report(rep);
    reports.push_back(std::move(rep));
  }
  return reports;
}

PointX2 random_point_x2(SplitMix64& rng, std::uint32_t n, std::uint32_t p,
                        std::size_t material) {
  const auto random_bits = [&](std::uint32_t count) {
    BitVector v(count);
    for (std::uint32_t i = 0; i < count; ++i) v.set(i, rng.next_bit());
    return v;
  };
  const auto random_strategy = [&](std::uint32_t alphabet) {
    std::vector<std::uint32_t> terms(material);
    for (auto& term : terms)
      term = static_cast<std::uint32_t>(rng.next_below(alphabet));
    return Strategy(alphabet, std::move(terms));
  };
  BitVector cover = random_bits(n);
  BitVector message = random_bits(p);
  return PointX2{random_strategy(n), std::move(cover), random_strategy(p),
                 std::move(message), random_strategy(p)};
}

namespace {

struct SizePair {
  std::uint32_t n, p;
};

SizePair random_sizes(SplitMix64& rng, std::uint32_t max_n, std::uint32_t max_p) {
  return SizePair{static_cast<std::uint32_t>(1 + rng.next_below(max_n)),
                  static_cast<std::uint32_t>(1 + rng.next_below(max_p))};
}

void note_failure(TrialSummary& summary, std::size_t trial, std::uint32_t n,
                  std::uint32_t p, const char* what) {
  summary.details += "trial " + std::to_string(trial) +
                     " (n=" + std::to_string(n) + " p=" + std::to_string(p) +
                     "): " + what + "\n";
}

}  // namespace

TrialSummary periodic_density_trials(std::size_t trials, double eps,
                                     std::uint64_t seed, std::uint32_t max_n,
                                     std::uint32_t max_p) {
  TrialSummary summary;
  summary.attempted = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    SplitMix64 rng = SplitMix64::for_trial(seed, i);
    const SizePair sz = random_sizes(rng, max_n, max_p);
    PointX2 target = random_point_x2(rng, sz.n, sz.p, 128);
    // Exact return to the target's states must be dynamically possible.
    while (is_unreachable_pair(target.cover, target.message))
      target = random_point_x2(rng, sz.n, sz.p, 128);
    try {
      construct_periodic_point(target, eps);
      ++summary.succeeded;
    } catch (const ConstructionFailed& e) {
      note_failure(summary, i, sz.n, sz.p, e.what());
    }
  }
  return summary;
}

TrialSummary transitivity_trials(std::size_t trials, double radius,
                                 std::uint64_t seed, std::uint32_t max_n,
                                 std::uint32_t max_p) {
  TrialSummary summary;
  summary.attempted = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    SplitMix64 rng = SplitMix64::for_trial(seed, i);
    const SizePair sz = random_sizes(rng, max_n, max_p);
    PointX2 ball_center = random_point_x2(rng, sz.n, sz.p, 128);
    PointX2 target = random_point_x2(rng, sz.n, sz.p, 128);
    while (is_unreachable_pair(target.cover, target.message))
      target = random_point_x2(rng, sz.n, sz.p, 128);
    try {
      construct_transit_point(ball_center, radius, target);
      ++summary.succeeded;
    } catch (const ConstructionFailed& e) {
      note_failure(summary, i, sz.n, sz.p, e.what());
    }
  }
  return summary;
}

TrialSummary sensitivity_trials(std::size_t trials, int closeness_exponent,
                                std::size_t max_steps, std::uint64_t seed,
                                std::uint32_t max_n, std::uint32_t max_p) {
  TrialSummary summary;
  summary.attempted = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    SplitMix64 rng = SplitMix64::for_trial(seed, i);
    SizePair sz = random_sizes(rng, max_n, max_p);
    // A single-cell, single-bit system admits no distinct neighbour at all.
    while (sz.n == 1 && sz.p == 1) sz = random_sizes(rng, max_n, max_p);
    const PointX2 x =
        random_point_x2(rng, sz.n, sz.p, max_steps + 70);
    try {
      sensitivity_probe(x, closeness_exponent, max_steps);
      ++summary.succeeded;
    } catch (const ProbeExhausted& e) {
      note_failure(summary, i, sz.n, sz.p, e.what());
    } catch (const ConstructionFailed& e) {
      note_failure(summary, i, sz.n, sz.p, e.what());
    }
  }
  return summary;
}

}  // namespace scismm
