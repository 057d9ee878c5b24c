#include "scismm/embedding.hpp"

#include <algorithm>

namespace scismm {

namespace {

void check_input(const ScismmInput& in) {
  if (in.place.alphabet() != in.cover.size())
    throw AlphabetMismatch("place strategy alphabet != cover length");
  if (in.choice.alphabet() != in.message.size())
    throw AlphabetMismatch("choice strategy alphabet != message length");
  if (in.mixing.alphabet() != in.message.size())
    throw AlphabetMismatch("mixing strategy alphabet != message length");
  if (!in.place.has_terms(in.steps) || !in.choice.has_terms(in.steps) ||
      !in.mixing.has_terms(in.steps))
    throw InsufficientStrategy("strategies shorter than the step count");
}

}  // namespace

BitVector mix_message(const BitVector& m0, const Strategy& mixing,
                      std::size_t steps) {
  if (mixing.alphabet() != m0.size())
    throw AlphabetMismatch("mixing strategy alphabet != message length");
  if (!mixing.has_terms(steps))
    throw InsufficientStrategy("mixing strategy shorter than the step count");
  BitVector m = m0;
  for (std::size_t i = 0; i < steps; ++i) m.flip(mixing.term(i));
  return m;
}

EmbedResult embed(const ScismmInput& in) {
  check_input(in);
  BitVector stego = in.cover;
  BitVector m = in.message;
  EmbedTrace trace;
  trace.steps.reserve(in.steps);
  for (std::size_t i = 0; i < in.steps; ++i) {
    const std::uint32_t cell = in.place.term(i);
    const std::uint32_t read = in.choice.term(i);
    const std::uint32_t mix = in.mixing.term(i);
    const std::uint8_t bit = m[read];
    stego.set(cell, bit != 0);
    m.flip(mix);
    trace.steps.push_back(EmbedStep{i + 1, cell, read, bit, mix});
  }
  return EmbedResult{std::move(stego), std::move(trace)};
}

void embed_kernel(std::uint8_t* cover, std::size_t, std::uint8_t* message,
                  std::size_t, const std::uint32_t* place,
                  const std::uint32_t* choice, const std::uint32_t* mixing,
                  std::size_t steps) {
  for (std::size_t i = 0; i < steps; ++i) {
    cover[place[i]] = message[choice[i]];
    message[mixing[i]] ^= 1u;
  }
}

DecodabilityReport decodability(const Strategy& place, const Strategy& choice,
                                const Strategy& mixing, std::uint32_t n,
                                std::uint32_t p, std::size_t steps) {
  if (place.alphabet() != n || choice.alphabet() != p || mixing.alphabet() != p)
    throw AlphabetMismatch("strategy alphabets do not match (n, p)");
  if (!place.has_terms(steps) || !choice.has_terms(steps) ||
      !mixing.has_terms(steps))
    throw InsufficientStrategy("strategies shorter than the step count");

  // Final write per cover cell; 0 means never written.
  std::vector<std::size_t> last_write(n, 0);
  for (std::size_t i = 0; i < steps; ++i) last_write[place.term(i)] = i + 1;

  DecodabilityReport rep;
  rep.message_bits = p;
  rep.plan.assign(p, std::nullopt);
  for (std::size_t i = 0; i < steps; ++i) {
    const std::size_t step = i + 1;
    const std::uint32_t cell = place.term(i);
    if (last_write[cell] != step) continue;  // overwritten later
    const std::uint32_t j = choice.term(i);
    // Keep the greatest surviving step per message index.
    if (!rep.plan[j] || rep.plan[j]->step < step)
      rep.plan[j] = RecoverySlot{step, cell, 0};
  }

  // Mixing parity accumulated strictly before the surviving write.
  for (std::uint32_t j = 0; j < p; ++j) {
    if (!rep.plan[j]) continue;
    std::uint8_t parity = 0;
    for (std::size_t i = 0; i + 1 < rep.plan[j]->step; ++i)
      parity ^= mixing.term(i) == j ? 1u : 0u;
    rep.plan[j]->parity = parity;
  }

  for (std::uint32_t j = 0; j < p; ++j)
    (rep.plan[j] ? rep.recoverable : rep.missing).push_back(j);
  return rep;
}

BitVector extract_message(const BitVector& stego, const Strategy& place,
                          const Strategy& choice, const Strategy& mixing,
                          std::uint32_t p, std::size_t steps) {
  const auto n = static_cast<std::uint32_t>(stego.size());
  const DecodabilityReport rep = decodability(place, choice, mixing, n, p, steps);
  if (!rep.complete())
    throw UndecodableMessage("message bits without a surviving write",
                             rep.missing);
  BitVector message(p);
  for (std::uint32_t j = 0; j < p; ++j) {
    const RecoverySlot& slot = *rep.plan[j];
    message.set(j, (stego[slot.cell] ^ slot.parity) != 0);
  }
  return message;
}

}  // namespace scismm
