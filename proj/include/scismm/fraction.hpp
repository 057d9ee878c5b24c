#pragma once

#include <cstdint>
#include <string>

#include "scismm/errors.hpp"

namespace scismm {

// Value in [0,1) stored as numerator / 2^64. All keystream arithmetic runs on
// the numerator with exact integer operations, so identical keys reproduce
// identical strategies on every platform.
struct UnitFraction {
  std::uint64_t numerator = 0;

  double value() const;

  // Convenience for tests and display; floor(x * 2^64).
  static UnitFraction from_double(double x);

  // Exactly 16 lowercase hex digits.
  static UnitFraction from_hex(const std::string& s);
  std::string to_hex() const;

  friend bool operator==(const UnitFraction&, const UnitFraction&) = default;
};

}  // namespace scismm
