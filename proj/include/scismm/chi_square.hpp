#pragma once

#include <cstdint>
#include <vector>

namespace scismm {

// Upper regularized incomplete gamma Q(s, x); series/continued-fraction
// evaluation with absolute error below 1e-10 over the ranges used here.
double regularized_gamma_q(double s, double x);

// Pearson statistic against a flat expectation.
double chi_square_statistic(const std::vector<std::uint64_t>& bins,
                            double expected);

// Survival probability of the chi-square law: Q(dof/2, statistic/2).
double chi_square_p_value(double statistic, std::uint32_t dof);

}  // namespace scismm
