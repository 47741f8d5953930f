// SPDX-License-Identifier: Apache-2.0

#ifndef DIRICHLET_OPERATORS_HPP
#define DIRICHLET_OPERATORS_HPP

#include <functional>
#include <string>
#include <vector>

#include "dirichlet/series.hpp"

namespace dirichlet {

/// Diagonal operator a_n -> gamma_n a_n, defined for n >= first_index.
///
/// first_index is 1 or 2. A multiplier with first_index 2 acts only on the
/// zero-constant subspace (a_1 = 0).
class Multiplier {
 public:
  using Symbol = std::function<Complex(Index)>;

  Multiplier(std::string label, Symbol symbol, Index first_index = 1);

  static Multiplier identity();
  /// D: gamma_n = -log n for n >= 1 (gamma_1 = 0 annihilates constants).
  static Multiplier differentiation();
  /// J: gamma_n = -1 / log n for n >= 2.
  static Multiplier integration();

  Complex operator()(Index n) const;
  Index first_index() const { return first_index_; }
  bool requires_zero_constant() const { return first_index_ == 2; }
  const std::string& label() const { return label_; }

 private:
  std::string label_;
  Symbol symbol_;
  Index first_index_;
};

enum class Growth { admissible, inadmissible, inconclusive };

std::string to_string(Growth growth);

struct GrowthReport {
  Growth verdict = Growth::inconclusive;
  std::vector<Index> sample_n;
  std::vector<double> ratio;  // log|gamma_n| / log n
  double tail_exponent = 0.0; // slope of log|log|gamma_n|| against log log n
};

/// Samples log|gamma_n| / log n on a geometric grid up to n_max (>= 1000).
/// Admissible: the tail ratios are below 0.05 in absolute value, or they are
/// decreasing while log|gamma_n| grows like a power (log n)^q with q < 0.8.
/// Inadmissible: the tail ratios stay >= 0.05 and q >= 0.8.
/// Throws DomainError on gamma_n = 0.
GrowthReport check_growth(const Multiplier& m, Index n_max);

/// Coefficient-wise gamma_n a_n. Throws DomainError when m requires a_1 = 0
/// and f has a constant term.
DirichletPolynomial apply(const Multiplier& m, const DirichletPolynomial& f);

DirichletPolynomial differentiate(const DirichletPolynomial& f);
DirichletPolynomial integrate(const DirichletPolynomial& f);

/// Symbol-wise product; first_index is the larger of the two.
Multiplier compose(const Multiplier& m1, const Multiplier& m2);

}  // namespace dirichlet

#endif  // DIRICHLET_OPERATORS_HPP
