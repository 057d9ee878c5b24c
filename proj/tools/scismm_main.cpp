#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scismm/chaos_lab.hpp"
#include "scismm/errors.hpp"
#include "scismm/media.hpp"
#include "scismm/pgm.hpp"
#include "scismm/pipeline.hpp"
#include "scismm/security.hpp"

namespace {

// Exit codes: 0 ok, 2 malformed inputs, 3 degenerate seed, 4 decodability cap
// exceeded, 5 undecodable message, 6 failed chaos verification.
constexpr int kExitMalformed = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitCap = 4;
constexpr int kExitUndecodable = 5;
constexpr int kExitVerification = 6;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw scismm::InvalidParameter("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw scismm::InvalidParameter("cannot write " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

std::vector<std::uint8_t> to_bytes(const std::string& s) {
  return {s.begin(), s.end()};
}

std::string from_bytes(const std::vector<std::uint8_t>& v) {
  return {v.begin(), v.end()};
}

scismm::StrategyMode parse_mode(const std::string& mode) {
  if (mode == "blind") return scismm::StrategyMode::blind;
  if (mode == "paper") return scismm::StrategyMode::paper_faithful;
  throw scismm::InvalidParameter("mode must be blind or paper");
}

int run_embed(const std::string& key_text, const std::string& cover_path,
              const std::string& message_path, const std::string& out_path,
              const std::string& sidecar_path, int threshold, long long steps,
              const std::string& mode) {
  const scismm::StegoKey key = scismm::parse_key(key_text);
  const scismm::PgmImage cover = scismm::pgm_read(read_file(cover_path));
  const std::vector<std::uint8_t> message = to_bytes(read_file(message_path));

  scismm::EmbedOptions options;
  options.threshold_m = threshold;
  options.mode = parse_mode(mode);
  if (steps >= 0) options.steps = static_cast<std::uint64_t>(steps);

  if (message.size() * 8 > scismm::lsc_positions(cover, threshold).size())
    std::cerr << "warning: message longer than the coefficient count; "
                 "expect a high step count\n";

  const scismm::EmbedOutcome outcome =
      scismm::embed_into_image(cover, message, key, options);
  write_file(out_path, scismm::pgm_write(outcome.stego));
  write_file(sidecar_path, outcome.sidecar.to_text());
  std::cout << "embedded " << message.size() << " bytes into " << out_path
            << " (t=" << outcome.sidecar.steps << ")\n";
  return 0;
}

int run_extract(const std::string& key_text, const std::string& stego_path,
                const std::string& sidecar_path, const std::string& out_path) {
  const scismm::StegoKey key = scismm::parse_key(key_text);
  const scismm::PgmImage stego = scismm::pgm_read(read_file(stego_path));
  const scismm::StegoSidecar sidecar =
      scismm::StegoSidecar::from_text(read_file(sidecar_path));
  const std::vector<std::uint8_t> message =
      scismm::extract_from_image(stego, sidecar, key);
  if (out_path == "-") {
    std::cout << from_bytes(message);
  } else {
    write_file(out_path, from_bytes(message));
    std::cout << "extracted " << message.size() << " bytes into " << out_path
              << "\n";
  }
  return 0;
}

int run_analyze_exact(unsigned n, unsigned p, unsigned long long t) {
  const scismm::ExactDistribution dist = scismm::exact_distribution(n, p, t);
  std::cout << "exact n=" << n << " p=" << p << " t=" << t
            << " outcomes=" << dist.total << "\n";
  if (dist.uniform()) {
    const auto prob = dist.probability(0);
    std::cout << "uniform: true, prob=" << prob.num << "/" << prob.den << "\n";
    return 0;
  }
  std::cout << "uniform: false\n";
  for (std::size_t i = 0; i < dist.counts.size(); ++i) {
    const auto prob = dist.probability(i);
    std::cout << "  y=" << i << " prob=" << prob.num << "/" << prob.den << "\n";
  }
  return 0;
}

int run_analyze_uniformity(unsigned n, unsigned p, unsigned long long t,
                           unsigned long long samples, unsigned long long seed,
                           bool control, const std::string& keys_csv,
                           const std::string& plcm_hex) {
  if (control) {
    std::cout << scismm::constant_output_report(n, samples, seed).to_text();
    return 0;
  }
  if (!keys_csv.empty()) {
    if (plcm_hex.empty())
      throw scismm::InvalidParameter("--keys requires --plcm-p");
    std::vector<scismm::UnitFraction> keys;
    std::stringstream ss(keys_csv);
    std::string item;
    while (std::getline(ss, item, ','))
      keys.push_back(scismm::UnitFraction::from_hex(item));
    const scismm::PlcmParameter plcm_p(scismm::UnitFraction::from_hex(plcm_hex));
    const auto reports =
        scismm::keyed_uniformity_test(keys, plcm_p, n, p, t, samples, seed);
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) std::cout << "\n";
      std::cout << reports[i].to_text();
    }
    return 0;
  }
  std::cout << scismm::uniformity_test(n, p, t, samples, seed).to_text();
  return 0;
}

int report_trials(const char* label, const scismm::TrialSummary& summary,
                  std::size_t required) {
  std::cout << label << " verified: " << summary.succeeded << "/"
            << summary.attempted << "\n";
  if (!summary.details.empty()) std::cout << summary.details;
  return summary.succeeded >= required ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Keyed bit-layer steganography with a chaotic-iteration lab"};
  app.require_subcommand(1);

  std::string key_text, cover_path, message_path, out_path, sidecar_path;
  std::string mode = "blind";
  int threshold = 1;
  long long steps = -1;

  auto* embed = app.add_subcommand("embed", "hide a message in a PGM image");
  embed->add_option("--key", key_text, "secret, <16 hex>:<16 hex>")->required();
  embed->add_option("--in", cover_path, "cover image (PGM)")->required();
  embed->add_option("--msg", message_path, "message file")->required();
  embed->add_option("--out", out_path, "stego image path")->required();
  embed->add_option("--sidecar", sidecar_path, "sidecar path")->required();
  embed->add_option("--m", threshold, "significance threshold (default 1)");
  embed->add_option("--t", steps, "starting iteration count (default p_bits)");
  embed->add_option("--mode", mode, "blind (default) or paper");

  auto* extract = app.add_subcommand("extract", "recover a hidden message");
  extract->add_option("--key", key_text, "secret, <16 hex>:<16 hex>")->required();
  extract->add_option("--in", cover_path, "stego image (PGM)")->required();
  extract->add_option("--sidecar", sidecar_path, "sidecar path")->required();
  extract->add_option("--out", out_path, "output file, '-' for stdout")
      ->required();

  auto* analyze = app.add_subcommand("analyze", "run a verification experiment");
  analyze->require_subcommand(1);

  unsigned an = 2, ap = 1;
  unsigned long long at = 1, samples = 1024, seed = 1;
  bool control = false;
  std::string keys_csv, plcm_hex;
  unsigned long long trials = 100, max_steps = 1000;
  double eps = 0.3, radius = 0.3;
  unsigned closeness = 2;
  unsigned long long min_success = 0;

  auto* exact = analyze->add_subcommand(
      "exact", "exhaustive output distribution of the embedding");
  exact->add_option("--n", an, "cover bits")->required();
  exact->add_option("--p", ap, "message bits")->required();
  exact->add_option("--t", at, "iterations")->required();

  auto* uniformity = analyze->add_subcommand(
      "uniformity", "chi-square test of the stego distribution");
  uniformity->add_option("--n", an, "cover bits")->required();
  uniformity->add_option("--p", ap, "message bits");
  uniformity->add_option("--t", at, "iterations");
  uniformity->add_option("--samples", samples, "sample count")->required();
  uniformity->add_option("--seed", seed, "generator seed");
  uniformity->add_flag("--control", control,
                       "replace the embedder by a constant-output control");
  uniformity->add_option("--keys", keys_csv,
                         "comma-separated 16-hex keys: test CIIS strategies");
  uniformity->add_option("--plcm-p", plcm_hex, "control parameter, 16 hex");

  auto* periodic = analyze->add_subcommand(
      "chaos-periodic", "periodic points near random targets");
  periodic->add_option("--trials", trials, "number of targets");
  periodic->add_option("--eps", eps, "ball radius");
  periodic->add_option("--seed", seed, "generator seed");

  auto* transit = analyze->add_subcommand(
      "chaos-transit", "orbits from random balls onto random targets");
  transit->add_option("--trials", trials, "number of ball pairs");
  transit->add_option("--ra", radius, "starting ball radius");
  transit->add_option("--seed", seed, "generator seed");

  auto* sensitivity = analyze->add_subcommand(
      "chaos-sensitivity", "orbit separation from close neighbours");
  sensitivity->add_option("--trials", trials, "number of starting points");
  sensitivity->add_option("--k", closeness, "closeness exponent");
  sensitivity->add_option("--maxn", max_steps, "step budget");
  sensitivity->add_option("--seed", seed, "generator seed");
  sensitivity->add_option("--min-success", min_success,
                          "required successes (default 95%)");

  try {
    app.parse(argc, argv);

    if (embed->parsed())
      return run_embed(key_text, cover_path, message_path, out_path,
                       sidecar_path, threshold, steps, mode);
    if (extract->parsed())
      return run_extract(key_text, cover_path, sidecar_path, out_path);
    if (exact->parsed()) return run_analyze_exact(an, ap, at);
    if (uniformity->parsed())
      return run_analyze_uniformity(an, ap, at, samples, seed, control,
                                    keys_csv, plcm_hex);
    if (periodic->parsed())
      return report_trials("chaos-periodic",
                           scismm::periodic_density_trials(trials, eps, seed),
                           trials);
    if (transit->parsed())
      return report_trials("chaos-transit",
                           scismm::transitivity_trials(trials, radius, seed),
                           trials);
    if (sensitivity->parsed()) {
      const std::size_t required =
          min_success > 0 ? min_success : (trials * 95 + 99) / 100;
      return report_trials(
          "chaos-sensitivity",
          scismm::sensitivity_trials(trials, static_cast<int>(closeness),
                                     max_steps, seed),
          required);
    }
    return kExitMalformed;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitMalformed;
  } catch (const scismm::DegenerateSeed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const scismm::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const scismm::UndecodableMessage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUndecodable;
  } catch (const scismm::ConstructionFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const scismm::ProbeExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const scismm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
