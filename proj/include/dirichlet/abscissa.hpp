// SPDX-License-Identifier: Apache-2.0

#ifndef DIRICHLET_ABSCISSA_HPP
#define DIRICHLET_ABSCISSA_HPP

#include <span>
#include <string>
#include <vector>

#include "dirichlet/series.hpp"

namespace dirichlet {

/// A growth-exponent estimate of an abscissa from N coefficients.
///
/// The estimator reads the running maximum E(M) = max_{m <= M} |A_m| of the
/// partial sums on the dyadic window [N/2, N] and fits
///   log E(M) = sigma log M + beta log log M + c
/// by least squares. When the partial sums converge numerically the series
/// is re-read as a_n n^k for k = 1, 2, ... until they diverge, and k is
/// subtracted (`shift`). A value of -inf means the sums converged for every
/// tried shift.
struct AbscissaValue {
  double value = 0.0;
  double radius = 0.01;  // heuristic uncertainty, floored at 0.01
  int shift = 0;
  double log_power = 0.0;  // fitted beta
};

/// sigma_c from A_M = sum_{n <= M} a_n.
AbscissaValue estimate_sigma_c(const CoefficientRule& rule, Index N);
/// sigma_a from sum_{n <= M} |a_n|.
AbscissaValue estimate_sigma_a(const CoefficientRule& rule, Index N);

/// Same estimators on already generated coefficients a_1..a_N.
AbscissaValue estimate_sigma_c(std::span<const Complex> coeffs);
AbscissaValue estimate_sigma_a(std::span<const Complex> coeffs);

/// Sampled sup_t |sum_{n <= N} a_n n^{-eps - it}|, and the same over the
/// first N/2 terms. A ratio near one is evidence of boundedness, not proof.
struct BoundednessProbe {
  double epsilon = 0.0;
  double sup_full = 0.0;
  double sup_half = 0.0;
  double growth_ratio = 0.0;
  bool bounded = false;
};

struct ProbeGrid {
  double T = 64.0;
  double h = 0.5;
};

struct AbscissaEstimate {
  AbscissaValue sigma_c;
  AbscissaValue sigma_a;
  double sigma_u_low = 0.0;
  double sigma_u_high = 0.0;
  Index N = 0;
  std::vector<BoundednessProbe> probes;
  std::string note;
};

/// sigma_u is not estimated: the result is the bracket
/// [sigma_c estimate, sigma_a estimate] plus boundedness probes.
AbscissaEstimate bracket_sigma_u(const CoefficientRule& rule, Index N,
                                 std::span<const double> probe_eps, ProbeGrid grid = {});

}  // namespace dirichlet

#endif  // DIRICHLET_ABSCISSA_HPP
