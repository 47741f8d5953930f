// SPDX-License-Identifier: Apache-2.0

#ifndef DIRICHLET_EVALUATION_HPP
#define DIRICHLET_EVALUATION_HPP

#include <functional>
#include <span>
#include <string>

#include "dirichlet/series.hpp"

namespace dirichlet {

/// sum_n a_n n^{-s}, with n^{-s} = exp(-s log n).
Complex evaluate(const DirichletPolynomial& f, HalfPlanePoint s);

/// evaluate(truncate(rule, n_max), s) without materializing the polynomial.
/// Compensated summation; runs on the parallel kernel.
Complex evaluate_truncated(const CoefficientRule& rule, Index n_max, HalfPlanePoint s);

/// sum_{n=1}^{N} x_n y_n through the Abel rearrangement
///   X_N y_N - sum_{n=1}^{N-1} X_n (y_{n+1} - y_n),   X_n = x_1 + ... + x_n.
/// Throws DomainError on empty input or a length mismatch.
Complex summation_by_parts(std::span<const Complex> x, std::span<const Complex> y);

/// Real weight sequence n -> y_n, asserted monotone beyond the truncation.
using WeightSequence = std::function<double(Index)>;

/// How the partial sums of the discarded tail were bounded.
enum class TailMethod {
  zero,          // every inspected term vanishes
  alternating,   // real, alternating, non-increasing magnitudes: first term bounds
  positive,      // one sign, decreasing: window sum plus power-law remainder
  window_sup,    // generic: window maximum plus absolute power-law remainder
};

std::string to_string(TailMethod method);

struct TailBound {
  Index M = 0;
  double bound = 0.0;          // bound for |sum_{n > M} a_n n^{-eps} y_n|
  double partial_sum_sup = 0;  // bound for sup_k |sum_{n=M+1}^{M+k} a_n n^{-eps}|
  double weight_factor = 0;    // Abel factor from the monotone weight
  Index window = 0;            // number of inspected terms beyond M
  TailMethod method = TailMethod::zero;
};

/// Abel estimate for the tail of sum a_n n^{-eps} y_n beyond M. The
/// partial sums of x_n = a_n n^{-eps} are bounded from a window of terms past
/// M (see TailMethod) and multiplied by the monotone-weight factor: y_{M+1}
/// for non-negative non-increasing weights, |y_{M+1}| + 2 max|y| otherwise.
/// Throws DiagnosticError if the weight is not monotone on the window.
TailBound tail_bound_monotone(const CoefficientRule& rule, const WeightSequence& weight, Index M,
                              double epsilon, Index window = 0);

/// Smallest power-of-two-refined M (found by bisection) whose tail bound
/// with unit weight is at most `target`. Throws DiagnosticError if no M up to
/// `m_max` qualifies.
Index select_truncation(const CoefficientRule& rule, double epsilon, double target,
                        Index m_max = Index{1} << 40);

struct SeminormGrid {
  double T = 0.0;
  double h = 0.0;
  bool symmetric = false;  // sampled t in [-T, T] rather than [0, T]
};

/// Bracket lower <= P_eps(f) <= upper. `lower` is the largest sampled
/// |f(eps + it)| on the grid, `upper` is sum |a_n| n^{-eps}.
struct SeminormEstimate {
  double epsilon = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double argmax_t = 0.0;
  SeminormGrid grid;

  bool exact() const { return lower == upper; }
};

/// Default sampling: T = min(2 pi / log 2 * max_index, 1000), h = 1e-2.
SeminormGrid default_seminorm_grid(const DirichletPolynomial& f);

SeminormEstimate seminorm(const DirichletPolynomial& f, double epsilon, double T, double h);
SeminormEstimate seminorm(const DirichletPolynomial& f, double epsilon);

/// sum |a_n| n^{-eps}, the triangle-inequality bound for P_eps.
double l1_upper(const DirichletPolynomial& f, double epsilon);

}  // namespace dirichlet

#endif  // DIRICHLET_EVALUATION_HPP
