// SPDX-License-Identifier: Apache-2.0

#ifndef DIRICHLET_SERIES_HPP
#define DIRICHLET_SERIES_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dirichlet {

using Complex = std::complex<double>;
using Index = std::int64_t;

/// A point s = sigma + i t of the complex plane. Both parts must be finite.
class HalfPlanePoint {
 public:
  HalfPlanePoint(double sigma, double t);
  explicit HalfPlanePoint(Complex s) : HalfPlanePoint(s.real(), s.imag()) {}

  double sigma() const { return sigma_; }
  double t() const { return t_; }
  Complex value() const { return {sigma_, t_}; }

 private:
  double sigma_;
  double t_;
};

/// Finite Dirichlet series f(s) = sum_n a_n n^{-s}, stored sparsely.
///
/// Normal form: every stored index is >= 1 and no stored coefficient is zero.
/// Every constructor and every free function below returns normal form.
class DirichletPolynomial {
 public:
  using Map = std::map<Index, Complex>;
  using const_iterator = Map::const_iterator;

  DirichletPolynomial() = default;
  explicit DirichletPolynomial(Map coeffs);
  DirichletPolynomial(std::initializer_list<std::pair<const Index, Complex>> terms);

  /// a_n, or zero when n is not stored.
  Complex coefficient(Index n) const;
  /// Largest stored index, 0 for the zero polynomial.
  Index max_index() const;
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  bool has_complex_coefficients() const;

  const Map& terms() const { return coeffs_; }
  const_iterator begin() const { return coeffs_.begin(); }
  const_iterator end() const { return coeffs_.end(); }

  bool operator==(const DirichletPolynomial&) const = default;

 private:
  Map coeffs_;
};

/// |a_n - b_n| <= rel_tol * max(|a_n|, |b_n|) at every index stored in either.
bool coefficients_match(const DirichletPolynomial& a, const DirichletPolynomial& b,
                        double rel_tol = 1e-12);

/// e_n(s) = n^{-s}.
DirichletPolynomial monomial(Index n);
DirichletPolynomial constant(Complex c);

DirichletPolynomial add(const DirichletPolynomial& f, const DirichletPolynomial& g);
DirichletPolynomial subtract(const DirichletPolynomial& f, const DirichletPolynomial& g);
DirichletPolynomial scale(Complex c, const DirichletPolynomial& f);

/// Dirichlet convolution c_n = sum_{d | n} a_d b_{n/d}, the coefficient map of
/// the pointwise product. Iterates stored index pairs.
DirichletPolynomial dirichlet_multiply(const DirichletPolynomial& f,
                                       const DirichletPolynomial& g);

/// Drops the coefficient at n = 1.
DirichletPolynomial without_constant(const DirichletPolynomial& f);

inline DirichletPolynomial operator+(const DirichletPolynomial& f, const DirichletPolynomial& g) {
  return add(f, g);
}
inline DirichletPolynomial operator-(const DirichletPolynomial& f, const DirichletPolynomial& g) {
  return subtract(f, g);
}
inline DirichletPolynomial operator*(Complex c, const DirichletPolynomial& f) { return scale(c, f); }
inline DirichletPolynomial operator*(const DirichletPolynomial& f, const DirichletPolynomial& g) {
  return dirichlet_multiply(f, g);
}

/// Exact abscissas of a test rule. Only test code reads these.
struct KnownAbscissas {
  std::optional<double> sigma_c;
  std::optional<double> sigma_u;
  std::optional<double> sigma_a;
};

/// Deterministic generator n -> a_n for an infinite Dirichlet series.
class CoefficientRule {
 public:
  enum class Kind { ones, eta, zeta_shift, moebius, custom };

  static CoefficientRule ones();
  /// a_n = (-1)^{n+1}, the alternating zeta function.
  static CoefficientRule eta();
  /// a_n = n^{-k}, i.e. zeta(s + k).
  static CoefficientRule zeta_shift(double k);
  static CoefficientRule moebius();
  static CoefficientRule custom(std::string name, std::function<Complex(Index)> generator,
                                std::optional<KnownAbscissas> known = std::nullopt);
  /// a_n = table[n - 1] for n <= table.size(), zero beyond.
  static CoefficientRule table(std::vector<Complex> values);

  Complex operator()(Index n) const;
  /// Writes a_first, ..., a_{first + out.size() - 1} into out.
  void fill(Index first, std::span<Complex> out) const;

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  /// The shift k of zeta_shift(k), zero for the other kinds.
  double shift() const { return shift_; }
  const std::optional<KnownAbscissas>& known() const { return known_; }

 private:
  CoefficientRule(Kind kind, std::string name, std::function<Complex(Index)> generator,
                  std::optional<KnownAbscissas> known, double shift = 0.0);

  Kind kind_;
  std::string name_;
  std::function<Complex(Index)> generator_;
  std::optional<KnownAbscissas> known_;
  double shift_ = 0.0;
};

/// Moebius function by trial division.
int moebius_mu(Index n);

/// Polynomial with a_n = rule(n) for n <= n_max.
DirichletPolynomial truncate(const CoefficientRule& rule, Index n_max);

}  // namespace dirichlet

#endif  // DIRICHLET_SERIES_HPP
