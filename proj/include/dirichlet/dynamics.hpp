// SPDX-License-Identifier: Apache-2.0

#ifndef DIRICHLET_DYNAMICS_HPP
#define DIRICHLET_DYNAMICS_HPP

#include <string>
#include <vector>

#include "dirichlet/operators.hpp"
#include "dirichlet/series.hpp"

namespace dirichlet {

/// z^k by binary powering; real z stays exactly real.
Complex integer_power(Complex z, int k);

/// T^k f: coefficients gamma_n^k a_n, one power per coefficient.
DirichletPolynomial power_apply(const Multiplier& m, int k, const DirichletPolynomial& f);

/// (1/k) sum_{j=1}^{k} T^j f, coefficient-wise via the geometric sum
/// gamma (1 - gamma^k) / (1 - gamma); summed directly when gamma is within
/// 1e-4 of 1 and equal to k when gamma = 1.
DirichletPolynomial cesaro_mean(const Multiplier& m, int k, const DirichletPolynomial& f);

/// l1 seminorm bound sum_n |gamma_n^k a_n| n^{-eps} / k of (1/k) T^k f,
/// which is P_eps itself for a single monomial. Falls back to log space when
/// gamma_n^k overflows.
double normalized_power_norm(const Multiplier& m, const DirichletPolynomial& f, double epsilon,
                             int k);
/// Natural log of normalized_power_norm, computed in log space.
double normalized_power_log_norm(const Multiplier& m, const DirichletPolynomial& f,
                                 double epsilon, int k);

enum class OrbitVerdict { diverges, converges, inconclusive };

std::string to_string(OrbitVerdict verdict);

struct DynamicsSample {
  int k = 0;
  double value = 0.0;
};

/// Orbit diagnostic for (1/k) T^k f. A diverging orbit witnesses that T is
/// neither power bounded nor mean ergodic; "converges" is only evidence.
struct DynamicsReport {
  std::vector<DynamicsSample> samples;
  OrbitVerdict verdict = OrbitVerdict::inconclusive;
  double fitted_rate = 0.0;  // slope of log(k * value) over k in [k_max/2, k_max]
};

DynamicsReport ergodicity_diagnostic(const Multiplier& m, const DirichletPolynomial& f,
                                     double epsilon, int k_max);

}  // namespace dirichlet

#endif  // DIRICHLET_DYNAMICS_HPP
