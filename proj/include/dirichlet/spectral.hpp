// SPDX-License-Identifier: Apache-2.0

#ifndef DIRICHLET_SPECTRAL_HPP
#define DIRICHLET_SPECTRAL_HPP

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dirichlet/series.hpp"

namespace dirichlet {

/// Where D acts: all series, or the subspace with a_1 = 0.
enum class Space { full, zero_subspace };

std::string to_string(Space space);

/// |log n + lambda| <= this tolerance counts as lambda = -log n.
inline constexpr double kSpectrumTolerance = 1e-12;
/// Resolvent points this close to the spectrum carry a warning.
inline constexpr double kNearSpectrumDistance = 1e-6;

struct Eigenvalue {
  Index n = 2;  // eigenvector monomial(n)
};
/// lambda = 0 on the full space, eigenvector the constant 1.
struct EigenvalueConstant {};
struct ResolventPoint {
  double gap = 0.0;
  bool near_spectrum = false;
};
/// Spectrum point without eigenvector. D has pure point spectrum on both
/// spaces, so classify_point never produces this; kept for reporting.
struct SpectrumNonEigen {
  std::string reason;
};

using Verdict = std::variant<Eigenvalue, EigenvalueConstant, ResolventPoint, SpectrumNonEigen>;

struct SpectrumClassification {
  Complex lambda;
  Space space = Space::zero_subspace;
  Verdict verdict;

  bool in_resolvent_set() const { return std::holds_alternative<ResolventPoint>(verdict); }
  /// "eigenvalue", "eigenvalue_constant", "resolvent_point" or "spectrum_non_eigen".
  std::string verdict_name() const;
  /// The eigenvector for eigenvalue verdicts, the zero polynomial otherwise.
  DirichletPolynomial eigenvector() const;
};

/// Raised when a resolvent is requested at a spectrum point.
class SpectralError : public std::domain_error {
 public:
  explicit SpectralError(SpectrumClassification classification);
  const SpectrumClassification& classification() const { return classification_; }

 private:
  SpectrumClassification classification_;
};

/// inf_{n >= 2} |log n + lambda| and the n attaining it (window method around
/// n = exp(-Re lambda)). n = 0 when exp(-Re lambda) exceeds e^43, where only
/// |Im lambda| is reported.
struct LogDistance {
  double distance = 0.0;
  Index n = 2;
};
LogDistance nearest_log(Complex lambda);

/// min(|lambda|, inf_{n >= 2} |log n + lambda|). Zero at spectrum points.
double spectral_gap(Complex lambda);

SpectrumClassification classify_point(Complex lambda, Space space);

/// lambda f - D f, i.e. b_n -> (lambda + log n) b_n.
DirichletPolynomial shifted_operator_apply(Complex lambda, const DirichletPolynomial& f);

/// (lambda I - D)^{-1} f: b_n -> b_n / (log n + lambda) for n >= 2 and
/// b_1 -> b_1 / lambda on the full space. Throws SpectralError at spectrum
/// points and DomainError for b_1 != 0 on the zero subspace.
DirichletPolynomial resolvent_apply(Complex lambda, const DirichletPolynomial& f, Space space);

struct BvReport {
  double mu = 0.0;
  double delta = 0.0;
  Index N = 0;
  std::vector<double> partial_sums;  // V_m = sum_{n=2}^{m} |g_n - g_{n+1}|, m = 2..N
  double fitted_c = 0.0;             // max_{n<=N} mu^2 n^{1+delta/2} |g_n - g_{n+1}|
  double fitted_c_half = 0.0;        // same over n <= N/2
  double majorant_ratio = 0.0;       // V_N / sum_{n=2}^{N} C / (mu^2 n^{1+delta/2})
  bool bounded = false;              // fitted C moved less than 1% from N/2 to N

  double total_variation() const { return partial_sums.empty() ? 0.0 : partial_sums.back(); }
};

/// Variation of g_n = 1 / ((log n + lambda) n^delta) and its majorant
/// C / (mu^2 n^{1 + delta/2}). Requires 0 < delta < 1 and N >= 1000.
BvReport bv_check(Complex lambda, double delta, Index N);

/// inf_{n >= 2} |-1/log n - nu|, the distance from nu to the spectrum of J.
/// n = 0 when the infimum is only approached as n -> infinity.
LogDistance integration_symbol_distance(Complex nu);

struct ReciprocalReport {
  Complex mu;
  bool in_rho_d = false;
  bool in_rho_j_reciprocal = false;
  bool consistent = false;
};

/// Compares mu in rho(D) with 1/mu in rho(J) on the zero subspace.
ReciprocalReport reciprocal_spectrum_check(Complex mu);

}  // namespace dirichlet

#endif  // DIRICHLET_SPECTRAL_HPP
