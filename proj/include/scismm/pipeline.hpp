#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scismm/bitvector.hpp"
#include "scismm/keystream.hpp"
#include "scismm/pgm.hpp"

namespace scismm {

// Secret material: the keystream seed and the map control parameter.
// Serialized as "<16 hex>:<16 hex>", both lowercase.
struct StegoKey {
  UnitFraction k;
  UnitFraction p;  // validated against (0, 1/2) when strategies are derived
};

StegoKey parse_key(const std::string& text);
std::string format_key(const StegoKey& key);

// Public parameters of one embedding, written next to the stego image.
// The key never appears here.
struct StegoSidecar {
  int version = 1;
  std::uint64_t lsc_count = 0;     // n
  std::uint64_t message_bits = 0;  // p_bits
  std::uint64_t steps = 0;         // t
  StrategyMode mode = StrategyMode::blind;
  UnitFraction plcm_p;
  int threshold_m = 1;

  std::string to_text() const;
  static StegoSidecar from_text(const std::string& text);
};

// MSB-first packing; trailing pad bits are zero and the sidecar carries the
// exact bit length.
BitVector bytes_to_bits(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> bits_to_bytes(const BitVector& bits);

struct EmbedOptions {
  int threshold_m = 1;
  std::optional<std::uint64_t> steps;  // starting point for the extension
  StrategyMode mode = StrategyMode::blind;
};

struct EmbedOutcome {
  PgmImage stego;
  StegoSidecar sidecar;
};

// Full embedding pipeline: split off the cover's least significant
// coefficients, derive the keyed strategies, extend the step count until
// every message bit keeps a surviving write (cap 64 * message bits, raises
// CapExceeded beyond it), embed, and splice the result back into the image.
// An empty message returns the canonicalized cover untouched.
EmbedOutcome embed_into_image(const PgmImage& cover,
                              const std::vector<std::uint8_t>& message,
                              const StegoKey& key,
                              const EmbedOptions& options = {});

// Blind extraction from a stego image plus its sidecar. Only blind-mode
// sidecars can be extracted: a strategy seed folded with the message cannot
// be re-derived without it.
std::vector<std::uint8_t> extract_from_image(const PgmImage& stego,
                                             const StegoSidecar& sidecar,
                                             const StegoKey& key);

}  // namespace scismm
