#include "scismm/keystream.hpp"

namespace scismm {

namespace {
constexpr std::uint64_t kHalf = 1ULL << 63;

std::uint64_t div_q64(std::uint64_t num, std::uint64_t den) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(num) << 64) / den);
}
}  // namespace

PlcmParameter::PlcmParameter(UnitFraction p) : p_(p) {
  if (p.numerator == 0 || p.numerator >= kHalf)
    throw InvalidParameter("control parameter must lie strictly in (0, 1/2)");
}

UnitFraction plcm(UnitFraction x, const PlcmParameter& p) {
  const std::uint64_t q = p.value().numerator;
  std::uint64_t a = x.numerator;
  if (a > kHalf) a = 0 - a;  // reflect (1/2, 1) onto (0, 1/2)
  if (a < q) return UnitFraction{div_q64(a, q)};
  if (a == kHalf) return UnitFraction{0};  // exact 1, wrapped
  return UnitFraction{div_q64(a - q, kHalf - q)};
}

UnitFraction key_schedule(UnitFraction k, UnitFraction m) {
  const std::uint64_t mixed = k.numerator ^ m.numerator;
  if (mixed == 0) throw DegenerateSeed("seed xor collapsed to zero");
  return UnitFraction{mixed};
}

Strategy ciis_strategy(const CiisConfig& cfg) {
  if (cfg.alphabet == 0) throw InvalidParameter("alphabet must be >= 1");
  std::vector<std::uint32_t> terms;
  terms.reserve(cfg.length);
  UnitFraction k = cfg.seed;
  for (std::size_t n = 0; n < cfg.length; ++n) {
    if (k.numerator == 0)
      throw DegenerateSeed("keystream orbit reached 0; re-key");
    auto wide = (static_cast<unsigned __int128>(cfg.alphabet) * k.numerator) >> 64;
    auto term = static_cast<std::uint32_t>(wide);
    if (term >= cfg.alphabet) term = cfg.alphabet - 1;
    terms.push_back(term);
    k = plcm(k, cfg.p);
  }
  return Strategy(cfg.alphabet, std::move(terms));
}

StrategyTriple derive_strategy_triple(UnitFraction key, const PlcmParameter& p,
                                      std::uint32_t cover_bits,
                                      std::uint32_t message_bits,
                                      std::size_t length, StrategyMode mode,
                                      UnitFraction message_fraction) {
  if (cover_bits == 0 || message_bits == 0)
    throw InvalidParameter("alphabets must be >= 1");
  if (key.numerator == 0) throw DegenerateSeed("zero key");

  UnitFraction s1, s2, s3;
  if (mode == StrategyMode::blind) {
    s1 = key_schedule(key, UnitFraction{kStreamConstant1});
    s2 = key_schedule(key, UnitFraction{kStreamConstant2});
    s3 = key_schedule(key, UnitFraction{kStreamConstant3});
  } else {
    s1 = key_schedule(key, message_fraction);
    s2 = key_schedule(s1, UnitFraction{kStreamConstant2});
    s3 = key_schedule(s1, UnitFraction{kStreamConstant3});
  }
  return StrategyTriple{
      ciis_strategy({s1, p, cover_bits, length}),
      ciis_strategy({s2, p, message_bits, length}),
      ciis_strategy({s3, p, message_bits, length}),
  };
}

}  // namespace scismm
