// SPDX-License-Identifier: Apache-2.0

#include "dirichlet/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "dirichlet/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dirichlet::kernels {

namespace {

constexpr std::size_t kGridBlock = 256;
constexpr Index kSumBlock = 4096;

// n^{-s} as |n^{-s}| times a unit phase. At t = 0 the phase is exactly (1, -0).
inline Complex phase(double t, double log_n) {
  const double arg = t * log_n;
  return {std::cos(arg), -std::sin(arg)};
}

inline Complex power_term(Complex a, Index n, double sigma, double t) {
  if (sigma == 0.0 && t == 0.0) return a;
  const double log_n = std::log(static_cast<double>(n));
  const Complex weighted = a * std::exp(-sigma * log_n);
  if (t == 0.0) return weighted;
  return weighted * phase(t, log_n);
}

LineMax block_max(const LineTerms& terms, const LineGrid& grid, std::size_t begin,
                  std::size_t end) {
  LineMax best{-1.0, 0.0};
  for (std::size_t j = begin; j < end; ++j) {
    const double t = grid.at(j);
    const double v = std::abs(value_on_line(terms, t));
    if (v > best.value) best = {v, t};
  }
  return best;
}

Complex block_rule_sum(const CoefficientRule& rule, Index first, Index last, HalfPlanePoint s,
                       std::vector<Complex>& scratch) {
  scratch.resize(static_cast<std::size_t>(last - first + 1));
  rule.fill(first, scratch);
  CompensatedComplexSum acc;
  for (Index n = first; n <= last; ++n) {
    const Complex a = scratch[static_cast<std::size_t>(n - first)];
    acc.add(power_term(a, n, s.sigma(), s.t()));
  }
  return acc.value();
}

void check_range(Index first, Index last) {
  if (first < 1 || last < first) {
    throw DomainError("rule_sum: need 1 <= first <= last");
  }
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

LineTerms prepare_line(const DirichletPolynomial& f, double sigma) {
  LineTerms out;
  out.sigma = sigma;
  out.log_n.reserve(f.size());
  out.weighted.reserve(f.size());
  for (const auto& [n, a] : f) {
    const double log_n = std::log(static_cast<double>(n));
    out.log_n.push_back(log_n);
    out.weighted.push_back(a * std::exp(-sigma * log_n));
  }
  return out;
}

LineTerms prepare_line(std::span<const Complex> dense_coeffs, double sigma) {
  LineTerms out;
  out.sigma = sigma;
  for (std::size_t j = 0; j < dense_coeffs.size(); ++j) {
    if (dense_coeffs[j] == Complex{}) continue;
    const double log_n = std::log(static_cast<double>(j + 1));
    out.log_n.push_back(log_n);
    out.weighted.push_back(dense_coeffs[j] * std::exp(-sigma * log_n));
  }
  return out;
}

Complex value_on_line(const LineTerms& terms, double t) {
  Complex acc{0.0, 0.0};
  const std::size_t m = terms.log_n.size();
  for (std::size_t j = 0; j < m; ++j) acc += terms.weighted[j] * phase(t, terms.log_n[j]);
  return acc;
}

LineMax max_abs_serial(const LineTerms& terms, const LineGrid& grid) {
  LineMax best = block_max(terms, grid, 0, grid.count);
  if (best.value < 0.0) best.value = 0.0;
  return best;
}

LineMax max_abs_parallel(const LineTerms& terms, const LineGrid& grid) {
  const std::size_t blocks = (grid.count + kGridBlock - 1) / kGridBlock;
  std::vector<LineMax> partial(blocks);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t b = 0; b < blocks; ++b) {
    partial[b] = block_max(terms, grid, b * kGridBlock, std::min(grid.count, (b + 1) * kGridBlock));
  }
  LineMax best{0.0, grid.t0};
  bool first = true;
  for (const auto& p : partial) {
    if (first || p.value > best.value) {
      best = p;
      first = false;
    }
  }
  if (best.value < 0.0) best.value = 0.0;
  return best;
}

void sample_abs_serial(const LineTerms& terms, const LineGrid& grid, std::span<double> out) {
  if (out.size() != grid.count) throw DomainError("sample_abs: output size mismatch");
  for (std::size_t j = 0; j < grid.count; ++j) out[j] = std::abs(value_on_line(terms, grid.at(j)));
}

void sample_abs_parallel(const LineTerms& terms, const LineGrid& grid, std::span<double> out) {
  if (out.size() != grid.count) throw DomainError("sample_abs: output size mismatch");
  const auto count = static_cast<std::ptrdiff_t>(grid.count);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < count; ++j) {
    const auto i = static_cast<std::size_t>(j);
    out[i] = std::abs(value_on_line(terms, grid.at(i)));
  }
}

Complex rule_sum_serial(const CoefficientRule& rule, Index first, Index last, HalfPlanePoint s) {
  check_range(first, last);
  CompensatedComplexSum acc;
  for (Index n = first; n <= last; ++n) {
    acc.add(power_term(rule(n), n, s.sigma(), s.t()));
  }
  return acc.value();
}

Complex rule_sum_parallel(const CoefficientRule& rule, Index first, Index last,
                          HalfPlanePoint s) {
  check_range(first, last);
  const Index blocks = (last - first) / kSumBlock + 1;
  std::vector<Complex> partial(static_cast<std::size_t>(blocks));
#pragma omp parallel
  {
    std::vector<Complex> scratch;
#pragma omp for schedule(static)
    for (Index b = 0; b < blocks; ++b) {
      const Index lo = first + b * kSumBlock;
      const Index hi = std::min(last, lo + kSumBlock - 1);
      partial[static_cast<std::size_t>(b)] = block_rule_sum(rule, lo, hi, s, scratch);
    }
  }
  CompensatedComplexSum acc;
  for (const Complex& p : partial) acc.add(p);
  return acc.value();
}

}  // namespace dirichlet::kernels
