#include "scismm/fraction.hpp"

#include <cmath>

namespace scismm {

double UnitFraction::value() const { return static_cast<double>(numerator) * 0x1p-64; }

UnitFraction UnitFraction::from_double(double x) {
  if (!(x >= 0.0) || x >= 1.0) throw InvalidParameter("value outside [0,1)");
  long double scaled = std::floor(static_cast<long double>(x) * 0x1p64L);
  if (scaled >= 0x1p64L) scaled = 0x1p64L - 1.0L;
  return UnitFraction{static_cast<std::uint64_t>(scaled)};
}

UnitFraction UnitFraction::from_hex(const std::string& s) {
  if (s.size() != 16) throw InvalidParameter("expected 16 hex digits");
  std::uint64_t v = 0;
  for (char c : s) {
    std::uint64_t digit;
    if (c >= '0' && c <= '9') digit = static_cast<std::uint64_t>(c - '0');
    else if (c >= 'a' && c <= 'f') digit = static_cast<std::uint64_t>(c - 'a' + 10);
    else throw InvalidParameter("expected lowercase hex digits");
    v = (v << 4) | digit;
  }
  return UnitFraction{v};
}

std::string UnitFraction::to_hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 0; i < 16; ++i)
    s[static_cast<std::size_t>(i)] = digits[(numerator >> (60 - 4 * i)) & 0xf];
  return s;
}

}  // namespace scismm
