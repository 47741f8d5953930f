// SPDX-License-Identifier: Apache-2.0

#ifndef DIRICHLET_KERNELS_HPP
#define DIRICHLET_KERNELS_HPP

// Data-parallel inner loops. Every kernel has a serial reference version and
// an OpenMP version. The parallel versions decompose work into blocks of a
// fixed size and combine block results in block order, so their output does
// not depend on the number of threads.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "dirichlet/series.hpp"

namespace dirichlet::kernels {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(Complex z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

/// Terms of a Dirichlet polynomial pre-weighted for the line Re s = sigma:
/// weighted[j] = a_{n_j} n_j^{-sigma} and log_n[j] = log n_j.
struct LineTerms {
  double sigma = 0.0;
  std::vector<double> log_n;
  std::vector<Complex> weighted;
};

LineTerms prepare_line(const DirichletPolynomial& f, double sigma);
/// Same for dense coefficients a_1, ..., a_N.
LineTerms prepare_line(std::span<const Complex> dense_coeffs, double sigma);

/// t_j = t0 + j h for j = 0, ..., count - 1.
struct LineGrid {
  double t0 = 0.0;
  double h = 1.0;
  std::size_t count = 0;
  double at(std::size_t j) const { return t0 + static_cast<double>(j) * h; }
};

/// f(sigma + i t) for prepared terms.
Complex value_on_line(const LineTerms& terms, double t);

struct LineMax {
  double value = 0.0;
  double t = 0.0;
};

/// max_j |f(sigma + i t_j)|; ties go to the smallest j.
LineMax max_abs_serial(const LineTerms& terms, const LineGrid& grid);
LineMax max_abs_parallel(const LineTerms& terms, const LineGrid& grid);

/// out[j] = |f(sigma + i t_j)|.
void sample_abs_serial(const LineTerms& terms, const LineGrid& grid, std::span<double> out);
void sample_abs_parallel(const LineTerms& terms, const LineGrid& grid, std::span<double> out);

/// Compensated sum_{n = first}^{last} rule(n) n^{-s}.
Complex rule_sum_serial(const CoefficientRule& rule, Index first, Index last, HalfPlanePoint s);
Complex rule_sum_parallel(const CoefficientRule& rule, Index first, Index last, HalfPlanePoint s);

/// Number of threads the parallel kernels will use.
int max_threads();

}  // namespace dirichlet::kernels

#endif  // DIRICHLET_KERNELS_HPP
