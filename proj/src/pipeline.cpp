#include "scismm/pipeline.hpp"

#include <algorithm>

#include "scismm/embedding.hpp"
#include "scismm/media.hpp"

namespace scismm {

namespace {

constexpr std::uint64_t kExtensionFactor = 64;

// First 64 message bits as a fixed-point fraction, MSB first, zero padded.
UnitFraction message_fraction(const BitVector& bits) {
  std::uint64_t numerator = 0;
  const std::size_t take = std::min<std::size_t>(bits.size(), 64);
  for (std::size_t i = 0; i < take; ++i)
    numerator |= static_cast<std::uint64_t>(bits[i]) << (63 - i);
  return UnitFraction{numerator};
}

std::uint64_t parse_u64(const std::string& value, const char* what) {
  if (value.empty() ||
      value.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidParameter(std::string("bad numeric field: ") + what);
  return std::stoull(value);
}

}  // namespace

StegoKey parse_key(const std::string& text) {
  if (text.size() != 33 || text[16] != ':')
    throw InvalidParameter("key must be <16 hex>:<16 hex>");
  return StegoKey{UnitFraction::from_hex(text.substr(0, 16)),
                  UnitFraction::from_hex(text.substr(17, 16))};
}

std::string format_key(const StegoKey& key) {
  return key.k.to_hex() + ":" + key.p.to_hex();
}

std::string StegoSidecar::to_text() const {
  std::string out;
  out += "version=" + std::to_string(version) + "\n";
  out += "n=" + std::to_string(lsc_count) + "\n";
  out += "p_bits=" + std::to_string(message_bits) + "\n";
  out += "t=" + std::to_string(steps) + "\n";
  out += std::string("mode=") +
         (mode == StrategyMode::blind ? "blind" : "paper") + "\n";
  out += "plcm_p=" + plcm_p.to_hex() + "\n";
  out += "m=" + std::to_string(threshold_m) + "\n";
  return out;
}

StegoSidecar StegoSidecar::from_text(const std::string& text) {
  StegoSidecar sc;
  bool seen[7] = {};
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidParameter("sidecar line without '='");
    const std::string k = line.substr(0, eq);
    const std::string v = line.substr(eq + 1);
    if (k == "version") {
      sc.version = static_cast<int>(parse_u64(v, "version"));
      seen[0] = true;
    } else if (k == "n") {
      sc.lsc_count = parse_u64(v, "n");
      seen[1] = true;
    } else if (k == "p_bits") {
      sc.message_bits = parse_u64(v, "p_bits");
      seen[2] = true;
    } else if (k == "t") {
      sc.steps = parse_u64(v, "t");
      seen[3] = true;
    } else if (k == "mode") {
      if (v == "blind") sc.mode = StrategyMode::blind;
      else if (v == "paper") sc.mode = StrategyMode::paper_faithful;
      else throw InvalidParameter("unknown sidecar mode");
      seen[4] = true;
    } else if (k == "plcm_p") {
      sc.plcm_p = UnitFraction::from_hex(v);
      seen[5] = true;
    } else if (k == "m") {
      sc.threshold_m = static_cast<int>(parse_u64(v, "m"));
      seen[6] = true;
    } else {
      throw InvalidParameter("unknown sidecar field: " + k);
    }
  }
  for (bool s : seen)
    if (!s) throw InvalidParameter("sidecar is missing a required field");
  if (sc.version != 1) throw InvalidParameter("unsupported sidecar version");
  return sc;
}

BitVector bytes_to_bits(const std::vector<std::uint8_t>& bytes) {
  if (bytes.empty()) throw InvalidParameter("cannot pack zero bytes");
  BitVector bits(bytes.size() * 8);
  for (std::size_t i = 0; i < bytes.size(); ++i)
    for (std::size_t b = 0; b < 8; ++b)
      bits.set(i * 8 + b, (bytes[i] >> (7 - b)) & 1u);
  return bits;
}

std::vector<std::uint8_t> bits_to_bytes(const BitVector& bits) {
  std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i])
      bytes[i / 8] |= static_cast<std::uint8_t>(1u << (7 - i % 8));
  return bytes;
}

EmbedOutcome embed_into_image(const PgmImage& cover,
                              const std::vector<std::uint8_t>& message,
                              const StegoKey& key, const EmbedOptions& options) {
  if (options.threshold_m < 1 || options.threshold_m > 8)
    throw InvalidParameter("threshold must lie in [1, 8]");

  EmbedOutcome out;
  out.sidecar.mode = options.mode;
  out.sidecar.plcm_p = key.p;
  out.sidecar.threshold_m = options.threshold_m;

  if (message.empty()) {
    out.stego = cover;
    out.sidecar.lsc_count =
        lsc_positions(cover, options.threshold_m).size();
    return out;
  }

  const PlcmParameter p(key.p);
  const BitVector lsc = extract_lsc(cover, options.threshold_m);
  const BitVector bits = bytes_to_bits(message);
  const auto n = static_cast<std::uint32_t>(lsc.size());
  const auto p_bits = static_cast<std::uint32_t>(bits.size());
  out.sidecar.lsc_count = n;
  out.sidecar.message_bits = p_bits;

  if (p_bits > 8ull * n)
    throw InvalidParameter("message exceeds 8 bits per coefficient");
  const UnitFraction mf = message_fraction(bits);

  // Extend the step count until every message bit keeps a surviving write.
  const std::uint64_t cap = kExtensionFactor * p_bits;
  std::uint64_t steps = std::max<std::uint64_t>(
      options.steps.value_or(p_bits), p_bits);
  StrategyTriple triple = derive_strategy_triple(key.k, p, n, p_bits, steps,
                                                 options.mode, mf);
  while (!decodability(triple.place, triple.choice, triple.mixing, n, p_bits,
                       steps)
              .complete()) {
    if (steps >= cap)
      throw CapExceeded("no fully decodable step count within the cap");
    steps = std::min(cap, steps * 2);
    triple = derive_strategy_triple(key.k, p, n, p_bits, steps, options.mode,
                                    mf);
  }

  const EmbedResult result = embed(ScismmInput{
      lsc, bits, triple.place, triple.choice, triple.mixing, steps});
  out.stego = replace_lsc(cover, options.threshold_m, result.stego);
  out.sidecar.steps = steps;
  return out;
}

std::vector<std::uint8_t> extract_from_image(const PgmImage& stego,
                                             const StegoSidecar& sidecar,
                                             const StegoKey& key) {
  if (sidecar.mode != StrategyMode::blind)
    throw InvalidParameter(
        "paper-faithful sidecars cannot be extracted without the message");
  if (sidecar.message_bits == 0) return {};
  if (sidecar.plcm_p != key.p)
    throw InvalidParameter("sidecar control parameter disagrees with the key");

  const PlcmParameter p(key.p);
  const BitVector lsc = extract_lsc(stego, sidecar.threshold_m);
  if (lsc.size() != sidecar.lsc_count)
    throw InvalidParameter("sidecar does not match the image dimensions");

  const auto n = static_cast<std::uint32_t>(lsc.size());
  const auto p_bits = static_cast<std::uint32_t>(sidecar.message_bits);
  const StrategyTriple triple = derive_strategy_triple(
      key.k, p, n, p_bits, sidecar.steps, StrategyMode::blind);
  const BitVector bits = extract_message(lsc, triple.place, triple.choice,
                                         triple.mixing, p_bits, sidecar.steps);
  return bits_to_bytes(bits);
}

}  // namespace scismm
