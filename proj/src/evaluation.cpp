// SPDX-License-Identifier: Apache-2.0

#include "dirichlet/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "dirichlet/errors.hpp"
#include "dirichlet/kernels.hpp"

namespace dirichlet {

namespace {

constexpr Index kDefaultWindowMin = 4096;
constexpr Index kDefaultWindowMax = 65536;
constexpr double kMaxGridPoints = 1e8;

bool is_real(const std::vector<Complex>& x) {
  return std::all_of(x.begin(), x.end(), [](Complex z) { return z.imag() == 0.0; });
}

bool alternating_decreasing(const std::vector<Complex>& x) {
  for (std::size_t j = 0; j + 1 < x.size(); ++j) {
    const double a = x[j].real();
    const double b = x[j + 1].real();
    if (!(a * b < 0.0) || std::abs(b) > std::abs(a)) return false;
  }
  return true;
}

bool one_sign_decreasing(const std::vector<Complex>& x) {
  const bool positive = x.front().real() > 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double a = x[j].real();
    if (positive ? !(a > 0.0) : !(a < 0.0)) return false;
    if (j + 1 < x.size() && std::abs(x[j + 1].real()) > std::abs(a)) return false;
  }
  return true;
}

// Bound for sum_{n > last} |x_n| assuming |x_n| <= c n^{-p}, with c and p
// read off the maxima of the third and fourth quarters of the window.
double power_law_remainder(const std::vector<Complex>& x, Index first_n) {
  const std::size_t L = x.size();
  if (L < 8) return std::numeric_limits<double>::infinity();
  const std::size_t q3 = L / 2;
  const std::size_t q4 = (3 * L) / 4;
  double m3 = 0.0;
  double m4 = 0.0;
  for (std::size_t j = q3; j < q4; ++j) m3 = std::max(m3, std::abs(x[j]));
  for (std::size_t j = q4; j < L; ++j) m4 = std::max(m4, std::abs(x[j]));
  if (m4 == 0.0 && m3 == 0.0) return 0.0;
  if (m4 == 0.0 || m3 <= m4) return std::numeric_limits<double>::infinity();
  const double n3 = static_cast<double>(first_n + static_cast<Index>(q3));
  const double n4 = static_cast<double>(first_n + static_cast<Index>(q4));
  const double p = std::log(m3 / m4) / std::log(n4 / n3);
  if (!(p > 1.0)) return std::numeric_limits<double>::infinity();
  const double end = static_cast<double>(first_n + static_cast<Index>(L) - 1);
  // c = m4 n4^p, sum_{n > end} c n^{-p} <= c end^{1-p} / (p - 1)
  return m4 * std::exp(p * std::log(n4) + (1.0 - p) * std::log(end)) / (p - 1.0);
}

}  // namespace

std::string to_string(TailMethod method) {
  switch (method) {
    case TailMethod::zero: return "zero";
    case TailMethod::alternating: return "alternating";
    case TailMethod::positive: return "positive";
    case TailMethod::window_sup: return "window_sup";
  }
  return "unknown";
}

Complex evaluate(const DirichletPolynomial& f, HalfPlanePoint s) {
  return kernels::value_on_line(kernels::prepare_line(f, s.sigma()), s.t());
}

Complex evaluate_truncated(const CoefficientRule& rule, Index n_max, HalfPlanePoint s) {
  if (n_max < 1) throw DomainError("evaluate_truncated: n_max must be >= 1");
  return kernels::rule_sum_parallel(rule, 1, n_max, s);
}

Complex summation_by_parts(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) {
    throw DomainError("summation_by_parts: length mismatch (" + std::to_string(x.size()) +
                      " vs " + std::to_string(y.size()) + ")");
  }
  if (x.empty()) throw DomainError("summation_by_parts: sequences must be non-empty");
  const std::size_t N = x.size();
  Complex partial{0.0, 0.0};
  Complex correction{0.0, 0.0};
  for (std::size_t n = 0; n + 1 < N; ++n) {
    partial += x[n];
    correction += partial * (y[n + 1] - y[n]);
  }
  partial += x[N - 1];
  return partial * y[N - 1] - correction;
}

TailBound tail_bound_monotone(const CoefficientRule& rule, const WeightSequence& weight, Index M,
                              double epsilon, Index window) {
  if (M < 0) throw DomainError("tail_bound_monotone: M must be >= 0");
  if (!std::isfinite(epsilon)) throw DomainError("tail_bound_monotone: epsilon must be finite");
  if (!weight) throw DomainError("tail_bound_monotone: missing weight sequence");
  const Index L =
      window > 0 ? window : std::clamp(M, kDefaultWindowMin, kDefaultWindowMax);
  if (L < 8) throw DomainError("tail_bound_monotone: window must hold at least 8 terms");

  const Index first = M + 1;
  std::vector<Complex> x(static_cast<std::size_t>(L));
  rule.fill(first, x);
  std::vector<double> y(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const Index n = first + static_cast<Index>(j);
    x[j] *= std::exp(-epsilon * std::log(static_cast<double>(n)));
    y[j] = weight(n);
  }

  bool non_increasing = true;
  bool non_decreasing = true;
  for (std::size_t j = 0; j + 1 < y.size(); ++j) {
    if (y[j + 1] > y[j]) non_increasing = false;
    if (y[j + 1] < y[j]) non_decreasing = false;
    if (!non_increasing && !non_decreasing) {
      throw DiagnosticError("tail_bound_monotone: weight is not monotone near n = " +
                            std::to_string(first + static_cast<Index>(j) + 1));
    }
  }

  TailBound out;
  out.M = M;
  out.window = L;
  double max_weight = 0.0;
  for (double v : y) max_weight = std::max(max_weight, std::abs(v));
  const bool decaying_weight = non_increasing && y.back() >= 0.0;
  out.weight_factor = decaying_weight ? y.front() : std::abs(y.front()) + 2.0 * max_weight;

  const bool all_zero = std::all_of(x.begin(), x.end(), [](Complex z) { return z == Complex{}; });
  if (all_zero) {
    out.method = TailMethod::zero;
    out.partial_sum_sup = power_law_remainder(x, first);
  } else if (is_real(x) && alternating_decreasing(x)) {
    out.method = TailMethod::alternating;
    out.partial_sum_sup = std::abs(x.front());
  } else if (is_real(x) && one_sign_decreasing(x)) {
    out.method = TailMethod::positive;
    kernels::CompensatedSum acc;
    for (Complex z : x) acc.add(std::abs(z.real()));
    out.partial_sum_sup = acc.value() + power_law_remainder(x, first);
  } else {
    out.method = TailMethod::window_sup;
    Complex partial{0.0, 0.0};
    double sup = 0.0;
    for (Complex z : x) {
      partial += z;
      sup = std::max(sup, std::abs(partial));
    }
    out.partial_sum_sup = sup + power_law_remainder(x, first);
  }
  out.bound = out.weight_factor == 0.0 ? 0.0 : out.weight_factor * out.partial_sum_sup;
  return out;
}

Index select_truncation(const CoefficientRule& rule, double epsilon, double target, Index m_max) {
  if (!(target > 0.0)) throw DomainError("select_truncation: target must be positive");
  const WeightSequence unit = [](Index) { return 1.0; };
  auto ok = [&](Index M) { return tail_bound_monotone(rule, unit, M, epsilon).bound <= target; };
  Index hi = 64;
  while (!ok(hi)) {
    if (hi >= m_max) {
      throw DiagnosticError("select_truncation: no truncation up to " + std::to_string(m_max) +
                            " meets the target");
    }
    hi = std::min(m_max, hi * 2);
  }
  Index lo = hi / 2;
  while (hi - lo > 1) {
    const Index mid = lo + (hi - lo) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;
}

SeminormGrid default_seminorm_grid(const DirichletPolynomial& f) {
  const double span = 2.0 * std::numbers::pi / std::numbers::ln2 *
                      static_cast<double>(std::max<Index>(f.max_index(), 1));
  return {std::min(span, 1000.0), 1e-2, f.has_complex_coefficients()};
}

double l1_upper(const DirichletPolynomial& f, double epsilon) {
  double upper = 0.0;
  for (const auto& [n, a] : f) {
    upper += std::abs(a) * std::exp(-epsilon * std::log(static_cast<double>(n)));
  }
  return upper;
}

SeminormEstimate seminorm(const DirichletPolynomial& f, double epsilon, double T, double h) {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("seminorm: epsilon must be finite and >= 0");
  }
  if (!(T > 0.0) || !(h > 0.0) || !std::isfinite(T) || !std::isfinite(h)) {
    throw DomainError("seminorm: T and h must be finite and positive");
  }
  const bool symmetric = f.has_complex_coefficients();
  const double points = std::floor((symmetric ? 2.0 * T : T) / h) + 1.0;
  if (points > kMaxGridPoints) throw DomainError("seminorm: grid has too many points");

  kernels::LineGrid grid{symmetric ? -T : 0.0, h, static_cast<std::size_t>(points)};
  const auto terms = kernels::prepare_line(f, epsilon);
  const auto best = kernels::max_abs_parallel(terms, grid);

  SeminormEstimate out;
  out.epsilon = epsilon;
  out.upper = l1_upper(f, epsilon);
  // The sampled maximum can exceed the l1 bound only by rounding.
  out.lower = std::min(best.value, out.upper);
  out.argmax_t = best.t;
  out.grid = {T, h, symmetric};
  return out;
}

SeminormEstimate seminorm(const DirichletPolynomial& f, double epsilon) {
  const auto grid = default_seminorm_grid(f);
  return seminorm(f, epsilon, grid.T, grid.h);
}

}  // namespace dirichlet
