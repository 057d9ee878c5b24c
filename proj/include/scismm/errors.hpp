#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scismm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : Error { using Error::Error; };
struct InsufficientStrategy : Error { using Error::Error; };
struct AlphabetMismatch : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct InvalidParameter : Error { using Error::Error; };
struct DegenerateSeed : Error { using Error::Error; };
struct InvalidThresholds : Error { using Error::Error; };
struct MalformedHeader : Error { using Error::Error; };
struct TruncatedPixelData : Error { using Error::Error; };
struct UnsupportedMaxval : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct InsufficientSamples : Error { using Error::Error; };
struct ConstructionFailed : Error { using Error::Error; };
struct ProbeExhausted : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };

// Extraction failure; carries the message indices that have no surviving write.
class UndecodableMessage : public Error {
 public:
  UndecodableMessage(const std::string& what, std::vector<std::uint32_t> missing)
      : Error(what), missing_(std::move(missing)) {}
  const std::vector<std::uint32_t>& missing() const { return missing_; }

 private:
  std::vector<std::uint32_t> missing_;
};

}  // namespace scismm
