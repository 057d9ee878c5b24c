#include "scismm/chi_square.hpp"

#include <cmath>

#include "scismm/errors.hpp"

namespace scismm {

namespace {

constexpr int kMaxIterations = 100000;
constexpr double kEps = 1e-16;

// Lower regularized gamma P(s, x) by its power series; valid for x < s + 1.
double gamma_p_series(double s, double x) {
  double term = 1.0 / s;
  double sum = term;
  for (int k = 1; k < kMaxIterations; ++k) {
    term *= x / (s + k);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) break;
  }
  return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

// Upper regularized gamma Q(s, x) by modified Lentz continued fraction;
// valid for x >= s + 1.
double gamma_q_fraction(double s, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int k = 1; k < kMaxIterations; ++k) {
    const double an = -k * (k - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return std::exp(-x + s * std::log(x) - std::lgamma(s)) * h;
}

}  // namespace

double regularized_gamma_q(double s, double x) {
  if (!(s > 0.0) || x < 0.0)
    throw InvalidParameter("gamma Q needs s > 0 and x >= 0");
  if (x == 0.0) return 1.0;
  if (x < s + 1.0) return 1.0 - gamma_p_series(s, x);
  return gamma_q_fraction(s, x);
}

double chi_square_statistic(const std::vector<std::uint64_t>& bins,
                            double expected) {
  if (!(expected > 0.0)) throw InvalidParameter("expected count must be > 0");
  double stat = 0.0;
  for (std::uint64_t observed : bins) {
    const double diff = static_cast<double>(observed) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

double chi_square_p_value(double statistic, std::uint32_t dof) {
  if (dof == 0) throw InvalidParameter("degrees of freedom must be >= 1");
  return regularized_gamma_q(dof / 2.0, statistic / 2.0);
}

}  // namespace scismm
