#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scismm/bitvector.hpp"
#include "scismm/strategy.hpp"

namespace scismm {

// One embedding run: a cover state, a message, and the three strategies that
// drive substitution (place), message selection (choice) and message mixing.
struct ScismmInput {
  BitVector cover;    // x0, length N
  BitVector message;  // m0, length P
  Strategy place;     // over N
  Strategy choice;    // over P
  Strategy mixing;    // over P
  std::size_t steps;  // T
};

struct EmbedStep {
  std::size_t n;         // 1-based step index
  std::uint32_t place;   // cover cell written
  std::uint32_t choice;  // message index read (pre-mix value)
  std::uint8_t written;  // the bit that went into the cover
  std::uint32_t mix;     // message index negated after the write
};

struct EmbedTrace {
  std::vector<EmbedStep> steps;
};

struct EmbedResult {
  BitVector stego;
  EmbedTrace trace;
};

// Message state after `steps` mixing negations: bit j of the result is
// m0_j xor parity of the number of mixing terms equal to j among the first
// `steps` terms.
BitVector mix_message(const BitVector& m0, const Strategy& mixing,
                      std::size_t steps);

// Embedding recurrence. Step n (1-based): cover cell place^{n-1} takes the
// pre-mix message bit at index choice^{n-1}; the message then advances one
// mixing negation at index mixing^{n-1}.
EmbedResult embed(const ScismmInput& in);

// Same recurrence on raw 0/1 arrays, without trace bookkeeping. `message`
// is advanced in place. Shared by the exhaustive and Monte-Carlo harnesses.
void embed_kernel(std::uint8_t* cover, std::size_t n, std::uint8_t* message,
                  std::size_t p, const std::uint32_t* place,
                  const std::uint32_t* choice, const std::uint32_t* mixing,
                  std::size_t steps);

// Where a message bit can be recovered from the stego state: the last step
// writing its cell, and the mixing parity accumulated before that step.
struct RecoverySlot {
  std::size_t step;    // 1-based step whose write survives
  std::uint32_t cell;  // cover cell holding the bit
  std::uint8_t parity; // xor-correction to undo the mixing
};

struct DecodabilityReport {
  std::uint32_t message_bits = 0;
  std::vector<std::uint32_t> recoverable;  // ascending
  std::vector<std::uint32_t> missing;      // ascending
  std::vector<std::optional<RecoverySlot>> plan;  // indexed by message bit

  bool complete() const { return missing.empty(); }
};

// Last-write analysis of the strategy prefix: message index j is recoverable
// iff some step reads j and is the final write to its cover cell.
DecodabilityReport decodability(const Strategy& place, const Strategy& choice,
                                const Strategy& mixing, std::uint32_t n,
                                std::uint32_t p, std::size_t steps);

// Blind extraction. Throws UndecodableMessage carrying the missing index set
// when any message bit has no surviving write.
BitVector extract_message(const BitVector& stego, const Strategy& place,
                          const Strategy& choice, const Strategy& mixing,
                          std::uint32_t p, std::size_t steps);

}  // namespace scismm
