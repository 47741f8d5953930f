// SPDX-License-Identifier: Apache-2.0

#include "dirichlet/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dirichlet/errors.hpp"
#include "dirichlet/evaluation.hpp"

namespace dirichlet {

namespace {

constexpr int kMinKMax = 10;
constexpr double kNearOne = 1e-4;
constexpr double kDivergeFactor = 1e3;
constexpr double kConvergeFactor = 1e-6;
constexpr double kMinGrowthRate = 1e-9;

void check_k(int k) {
  if (k < 1) throw DomainError("iterate count k must be >= 1, got " + std::to_string(k));
}

void check_domain(const Multiplier& m, const DirichletPolynomial& f) {
  if (m.requires_zero_constant() && f.coefficient(1) != Complex{}) {
    throw DomainError("operator " + m.label() + " requires a_1 = 0");
  }
}

Complex geometric_sum(Complex gamma, int k) {
  if (gamma == Complex{1.0, 0.0}) return Complex{static_cast<double>(k), 0.0};
  if (std::abs(1.0 - gamma) < kNearOne) {
    Complex power{1.0, 0.0};
    Complex sum{0.0, 0.0};
    for (int j = 1; j <= k; ++j) {
      power *= gamma;
      sum += power;
    }
    return sum;
  }
  return gamma * (1.0 - integer_power(gamma, k)) / (1.0 - gamma);
}

}  // namespace

std::string to_string(OrbitVerdict verdict) {
  switch (verdict) {
    case OrbitVerdict::diverges: return "diverges";
    case OrbitVerdict::converges: return "converges";
    case OrbitVerdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

Complex integer_power(Complex z, int k) {
  if (k < 0) return 1.0 / integer_power(z, -k);
  Complex result{1.0, 0.0};
  Complex base = z;
  for (unsigned e = static_cast<unsigned>(k); e != 0; e >>= 1) {
    if (e & 1U) result *= base;
    base *= base;
  }
  return result;
}

DirichletPolynomial power_apply(const Multiplier& m, int k, const DirichletPolynomial& f) {
  check_k(k);
  check_domain(m, f);
  DirichletPolynomial::Map out;
  for (const auto& [n, a] : f) out.emplace_hint(out.end(), n, integer_power(m(n), k) * a);
  return DirichletPolynomial(std::move(out));
}

DirichletPolynomial cesaro_mean(const Multiplier& m, int k, const DirichletPolynomial& f) {
  check_k(k);
  check_domain(m, f);
  DirichletPolynomial::Map out;
  for (const auto& [n, a] : f) {
    out.emplace_hint(out.end(), n, geometric_sum(m(n), k) * a / static_cast<double>(k));
  }
  return DirichletPolynomial(std::move(out));
}

double normalized_power_log_norm(const Multiplier& m, const DirichletPolynomial& f,
                                 double epsilon, int k) {
  check_k(k);
  check_domain(m, f);
  std::vector<double> logs;
  for (const auto& [n, a] : f) {
    const double g = std::abs(m(n));
    if (g == 0.0) continue;
    logs.push_back(k * std::log(g) + std::log(std::abs(a)) -
                   epsilon * std::log(static_cast<double>(n)));
  }
  if (logs.empty()) return -std::numeric_limits<double>::infinity();
  const double top = *std::max_element(logs.begin(), logs.end());
  double sum = 0.0;
  for (double l : logs) sum += std::exp(l - top);
  return top + std::log(sum) - std::log(static_cast<double>(k));
}

double normalized_power_norm(const Multiplier& m, const DirichletPolynomial& f, double epsilon,
                             int k) {
  if (!(epsilon >= 0.0)) throw DomainError("normalized_power_norm: epsilon must be >= 0");
  const auto iterate = scale(1.0 / static_cast<double>(k), power_apply(m, k, f));
  const double direct = l1_upper(iterate, epsilon);
  if (std::isfinite(direct)) return direct;
  return std::exp(normalized_power_log_norm(m, f, epsilon, k));
}

DynamicsReport ergodicity_diagnostic(const Multiplier& m, const DirichletPolynomial& f,
                                     double epsilon, int k_max) {
  if (k_max < kMinKMax) {
    throw DomainError("ergodicity_diagnostic: k_max must be >= " + std::to_string(kMinKMax));
  }
  if (!(epsilon >= 0.0)) throw DomainError("ergodicity_diagnostic: epsilon must be >= 0");
  DynamicsReport report;
  std::vector<double> log_values;
  for (int k = 1; k <= k_max; ++k) {
    report.samples.push_back({k, normalized_power_norm(m, f, epsilon, k)});
    log_values.push_back(normalized_power_log_norm(m, f, epsilon, k));
  }

  const double log_first = log_values.front();
  if (!std::isfinite(log_first)) {
    report.verdict = OrbitVerdict::converges;
    report.fitted_rate = -std::numeric_limits<double>::infinity();
    return report;
  }

  // Least-squares slope of log(k * value_k) against k on the second half.
  const int k0 = (k_max + 1) / 2;
  double mean_k = 0.0;
  double mean_y = 0.0;
  const int count = k_max - k0 + 1;
  for (int k = k0; k <= k_max; ++k) {
    mean_k += k;
    mean_y += log_values[static_cast<std::size_t>(k - 1)] + std::log(static_cast<double>(k));
  }
  mean_k /= count;
  mean_y /= count;
  double sxy = 0.0;
  double sxx = 0.0;
  for (int k = k0; k <= k_max; ++k) {
    const double y =
        log_values[static_cast<std::size_t>(k - 1)] + std::log(static_cast<double>(k));
    sxy += (k - mean_k) * (y - mean_y);
    sxx += (k - mean_k) * (k - mean_k);
  }
  report.fitted_rate = sxy / sxx;

  const std::size_t last = log_values.size() - 1;
  const double l1 = log_values[last - 2];
  const double l2 = log_values[last - 1];
  const double l3 = log_values[last];
  const bool increasing = l1 < l2 && l2 < l3;
  const double big = log_first + std::log(kDivergeFactor);
  const bool far_above = l1 > big && l2 > big && l3 > big;
  if (increasing && (far_above || report.fitted_rate > kMinGrowthRate)) {
    report.verdict = OrbitVerdict::diverges;
  } else if (l3 < log_first + std::log(kConvergeFactor)) {
    report.verdict = OrbitVerdict::converges;
  } else {
    report.verdict = OrbitVerdict::inconclusive;
  }
  return report;
}

}  // namespace dirichlet
