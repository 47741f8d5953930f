// SPDX-License-Identifier: Apache-2.0

#include "dirichlet/abscissa.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "dirichlet/errors.hpp"
#include "dirichlet/kernels.hpp"

namespace dirichlet {

namespace {

constexpr Index kMinN = 100;
constexpr int kMaxShift = 8;
constexpr double kCauchyTolerance = 1e-8;
constexpr double kDecayRatio = 0.9;
constexpr double kRadiusFloor = 0.01;
constexpr double kMaxLogPower = 5.0;
constexpr double kBoundedRatio = 1.1;

std::vector<Complex> generate(const CoefficientRule& rule, Index N) {
  if (N < kMinN) throw DomainError("abscissa: N must be >= " + std::to_string(kMinN));
  std::vector<Complex> coeffs(static_cast<std::size_t>(N));
  rule.fill(1, coeffs);
  return coeffs;
}

// partial[M] = sum_{n <= M} b_n with b_n = (|a_n| or a_n) n^k; partial[0] = 0.
std::vector<Complex> partial_sums(std::span<const Complex> coeffs, bool absolute, int k) {
  std::vector<Complex> partial(coeffs.size() + 1);
  kernels::CompensatedComplexSum acc;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const Complex a = absolute ? Complex{std::abs(coeffs[j]), 0.0} : coeffs[j];
    acc.add(k == 0 ? a : a * std::pow(static_cast<double>(j + 1), k));
    partial[j + 1] = acc.value();
  }
  return partial;
}

double oscillation(const std::vector<Complex>& partial, std::size_t lo, std::size_t hi) {
  double osc = 0.0;
  for (std::size_t m = lo; m <= hi; ++m) osc = std::max(osc, std::abs(partial[hi] - partial[m]));
  return osc;
}

// Numerical convergence: tiny Cauchy oscillation on [N/2, N], or oscillations
// on the last three dyadic windows decaying geometrically.
bool converges(const std::vector<Complex>& partial) {
  const std::size_t N = partial.size() - 1;
  const double o3 = oscillation(partial, N / 2, N);
  if (o3 <= kCauchyTolerance * std::max(1.0, std::abs(partial[N]))) return true;
  const double o2 = oscillation(partial, N / 4, N / 2);
  const double o1 = oscillation(partial, N / 8, N / 4);
  return o3 < kDecayRatio * o2 && o2 < kDecayRatio * o1;
}

AbscissaValue fit_growth(const std::vector<Complex>& partial) {
  const std::size_t N = partial.size() - 1;
  const std::size_t lo = (N + 1) / 2;

  std::vector<double> log_m;
  std::vector<double> log_log_m;
  std::vector<double> log_e;
  double envelope = 0.0;
  for (std::size_t m = 1; m < lo; ++m) envelope = std::max(envelope, std::abs(partial[m]));
  double ratio_min = std::numeric_limits<double>::infinity();
  double ratio_max = -std::numeric_limits<double>::infinity();
  for (std::size_t m = lo; m <= N; ++m) {
    envelope = std::max(envelope, std::abs(partial[m]));
    if (envelope == 0.0) continue;
    const double lm = std::log(static_cast<double>(m));
    log_m.push_back(lm);
    log_log_m.push_back(std::log(lm));
    log_e.push_back(std::log(envelope));
    ratio_min = std::min(ratio_min, log_e.back() / lm);
    ratio_max = std::max(ratio_max, log_e.back() / lm);
  }
  AbscissaValue out;
  if (log_e.empty()) {
    out.value = -std::numeric_limits<double>::infinity();
    out.radius = 0.0;
    return out;
  }
  if (log_e.size() < 3) {
    out.value = log_e.back() / log_m.back();
    return out;
  }

  const auto rows = static_cast<Eigen::Index>(log_e.size());
  Eigen::Map<const Eigen::VectorXd> x1(log_m.data(), rows);
  Eigen::Map<const Eigen::VectorXd> x2(log_log_m.data(), rows);
  Eigen::Map<const Eigen::VectorXd> y(log_e.data(), rows);
  const Eigen::VectorXd c1 = x1.array() - x1.mean();
  const Eigen::VectorXd c2 = x2.array() - x2.mean();
  const Eigen::VectorXd cy = y.array() - y.mean();

  const double slope = c1.dot(cy) / c1.squaredNorm();

  Eigen::MatrixXd design(rows, 2);
  design.col(0) = c1;
  design.col(1) = c2;
  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(cy);

  const bool use_log_power = std::isfinite(coef(1)) && std::abs(coef(1)) <= kMaxLogPower;
  out.value = use_log_power ? coef(0) : slope;
  out.log_power = use_log_power ? coef(1) : 0.0;
  out.radius = std::max({kRadiusFloor, ratio_max - ratio_min, std::abs(coef(0) - slope)});
  if (!std::isfinite(out.radius)) out.radius = std::abs(slope - out.value) + kRadiusFloor;
  return out;
}

AbscissaValue estimate(std::span<const Complex> coeffs, bool absolute) {
  if (static_cast<Index>(coeffs.size()) < kMinN) {
    throw DomainError("abscissa: need at least " + std::to_string(kMinN) + " coefficients");
  }
  for (int k = 0; k <= kMaxShift; ++k) {
    const auto partial = partial_sums(coeffs, absolute, k);
    if (converges(partial)) continue;
    AbscissaValue out = fit_growth(partial);
    out.value -= k;
    out.shift = k;
    return out;
  }
  AbscissaValue out;
  out.value = -std::numeric_limits<double>::infinity();
  out.radius = 0.0;
  out.shift = kMaxShift;
  return out;
}

}  // namespace

AbscissaValue estimate_sigma_c(std::span<const Complex> coeffs) { return estimate(coeffs, false); }
AbscissaValue estimate_sigma_a(std::span<const Complex> coeffs) { return estimate(coeffs, true); }

AbscissaValue estimate_sigma_c(const CoefficientRule& rule, Index N) {
  return estimate_sigma_c(generate(rule, N));
}

AbscissaValue estimate_sigma_a(const CoefficientRule& rule, Index N) {
  return estimate_sigma_a(generate(rule, N));
}

AbscissaEstimate bracket_sigma_u(const CoefficientRule& rule, Index N,
                                 std::span<const double> probe_eps, ProbeGrid grid) {
  if (probe_eps.empty()) throw DomainError("bracket_sigma_u: probe_eps must be non-empty");
  for (double eps : probe_eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) {
      throw DomainError("bracket_sigma_u: probe epsilons must be finite and > 0");
    }
  }
  if (!(grid.T > 0.0) || !(grid.h > 0.0)) throw DomainError("bracket_sigma_u: bad probe grid");
  const auto coeffs = generate(rule, N);

  AbscissaEstimate out;
  out.N = N;
  out.sigma_c = estimate_sigma_c(coeffs);
  out.sigma_a = estimate_sigma_a(coeffs);
  out.sigma_u_high = out.sigma_a.value;
  out.sigma_u_low = std::min(out.sigma_c.value, out.sigma_a.value);
  out.note =
      "sigma_u is bracketed, not estimated: sigma_c <= sigma_u <= sigma_a; "
      "boundedness probes are evidence only";

  const bool complex_coeffs =
      std::any_of(coeffs.begin(), coeffs.end(), [](Complex a) { return a.imag() != 0.0; });
  kernels::LineGrid line;
  line.t0 = complex_coeffs ? -grid.T : 0.0;
  line.h = grid.h;
  line.count =
      static_cast<std::size_t>(std::floor((complex_coeffs ? 2.0 : 1.0) * grid.T / grid.h)) + 1;

  const std::span<const Complex> all(coeffs);
  for (double eps : probe_eps) {
    BoundednessProbe probe;
    probe.epsilon = eps;
    probe.sup_full = kernels::max_abs_parallel(kernels::prepare_line(all, eps), line).value;
    probe.sup_half =
        kernels::max_abs_parallel(kernels::prepare_line(all.first(all.size() / 2), eps), line)
            .value;
    probe.growth_ratio = probe.sup_half > 0.0 ? probe.sup_full / probe.sup_half
                         : probe.sup_full > 0.0 ? std::numeric_limits<double>::infinity()
                                                : 1.0;
    probe.bounded = probe.growth_ratio <= kBoundedRatio;
    out.probes.push_back(probe);
  }
  return out;
}

}  // namespace dirichlet
