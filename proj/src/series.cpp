// SPDX-License-Identifier: Apache-2.0

#include "dirichlet/series.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "dirichlet/errors.hpp"

namespace dirichlet {

namespace {

const Complex kZero{0.0, 0.0};

void normalize(DirichletPolynomial::Map& coeffs) {
  std::erase_if(coeffs, [](const auto& kv) { return kv.second == kZero; });
}

// n^{-k}; small integer shifts use exact integer powers so that fill() and
// operator() agree bit for bit.
inline double zeta_term(Index n, double k) {
  const double x = static_cast<double>(n);
  if (k == 1.0) return 1.0 / x;
  if (k == 2.0) return 1.0 / (x * x);
  if (k == 3.0) return 1.0 / (x * x * x);
  if (k == 0.0) return 1.0;
  return std::pow(x, -k);
}

void check_index(Index n, const char* what) {
  if (n < 1) {
    throw DomainError(std::string(what) + ": index must be >= 1, got " + std::to_string(n));
  }
}

}  // namespace

HalfPlanePoint::HalfPlanePoint(double sigma, double t) : sigma_(sigma), t_(t) {
  if (!std::isfinite(sigma) || !std::isfinite(t)) {
    throw DomainError("HalfPlanePoint: both components must be finite");
  }
}

DirichletPolynomial::DirichletPolynomial(Map coeffs) : coeffs_(std::move(coeffs)) {
  if (!coeffs_.empty()) check_index(coeffs_.begin()->first, "DirichletPolynomial");
  normalize(coeffs_);
}

DirichletPolynomial::DirichletPolynomial(
    std::initializer_list<std::pair<const Index, Complex>> terms) {
  for (const auto& [n, a] : terms) {
    check_index(n, "DirichletPolynomial");
    coeffs_[n] += a;
  }
  normalize(coeffs_);
}

Complex DirichletPolynomial::coefficient(Index n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? kZero : it->second;
}

Index DirichletPolynomial::max_index() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

bool DirichletPolynomial::has_complex_coefficients() const {
  for (const auto& [n, a] : coeffs_) {
    if (a.imag() != 0.0) return true;
  }
  return false;
}

bool coefficients_match(const DirichletPolynomial& a, const DirichletPolynomial& b,
                        double rel_tol) {
  auto close = [rel_tol](Complex x, Complex y) {
    return std::abs(x - y) <= rel_tol * std::max(std::abs(x), std::abs(y));
  };
  for (const auto& [n, x] : a) {
    if (!close(x, b.coefficient(n))) return false;
  }
  for (const auto& [n, y] : b) {
    if (!close(a.coefficient(n), y)) return false;
  }
  return true;
}

DirichletPolynomial monomial(Index n) {
  check_index(n, "monomial");
  return DirichletPolynomial(DirichletPolynomial::Map{{n, Complex{1.0, 0.0}}});
}

DirichletPolynomial constant(Complex c) {
  return DirichletPolynomial(DirichletPolynomial::Map{{1, c}});
}

DirichletPolynomial add(const DirichletPolynomial& f, const DirichletPolynomial& g) {
  DirichletPolynomial::Map out = f.terms();
  for (const auto& [n, b] : g) out[n] += b;
  return DirichletPolynomial(std::move(out));
}

DirichletPolynomial subtract(const DirichletPolynomial& f, const DirichletPolynomial& g) {
  DirichletPolynomial::Map out = f.terms();
  for (const auto& [n, b] : g) out[n] -= b;
  return DirichletPolynomial(std::move(out));
}

DirichletPolynomial scale(Complex c, const DirichletPolynomial& f) {
  DirichletPolynomial::Map out;
  for (const auto& [n, a] : f) out.emplace_hint(out.end(), n, c * a);
  return DirichletPolynomial(std::move(out));
}

DirichletPolynomial dirichlet_multiply(const DirichletPolynomial& f,
                                       const DirichletPolynomial& g) {
  DirichletPolynomial::Map out;
  for (const auto& [n1, a] : f) {
    for (const auto& [n2, b] : g) {
      Index n = 0;
      if (__builtin_mul_overflow(n1, n2, &n)) {
        throw DomainError("dirichlet_multiply: index product " + std::to_string(n1) + " * " +
                          std::to_string(n2) + " overflows");
      }
      out[n] += a * b;
    }
  }
  return DirichletPolynomial(std::move(out));
}

DirichletPolynomial without_constant(const DirichletPolynomial& f) {
  DirichletPolynomial::Map out = f.terms();
  out.erase(1);
  return DirichletPolynomial(std::move(out));
}

int moebius_mu(Index n) {
  check_index(n, "moebius_mu");
  int sign = 1;
  for (Index p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

CoefficientRule::CoefficientRule(Kind kind, std::string name,
                                 std::function<Complex(Index)> generator,
                                 std::optional<KnownAbscissas> known, double shift)
    : kind_(kind),
      name_(std::move(name)),
      generator_(std::move(generator)),
      known_(std::move(known)),
      shift_(shift) {}

CoefficientRule CoefficientRule::ones() {
  return {Kind::ones, "ones", [](Index) { return Complex{1.0, 0.0}; },
          KnownAbscissas{1.0, 1.0, 1.0}};
}

CoefficientRule CoefficientRule::eta() {
  return {Kind::eta, "eta", [](Index n) { return Complex{n % 2 == 1 ? 1.0 : -1.0, 0.0}; },
          KnownAbscissas{0.0, 0.0, 1.0}};
}

CoefficientRule CoefficientRule::zeta_shift(double k) {
  if (!std::isfinite(k)) throw DomainError("zeta_shift: k must be finite");
  const double a = 1.0 - k;
  return {Kind::zeta_shift, "zeta_shift",
          [k](Index n) { return Complex{zeta_term(n, k), 0.0}; },
          KnownAbscissas{a, a, a}, k};
}

CoefficientRule CoefficientRule::moebius() {
  // sigma_c depends on the Riemann hypothesis; only sigma_a is recorded.
  return {Kind::moebius, "moebius",
          [](Index n) { return Complex{static_cast<double>(moebius_mu(n)), 0.0}; },
          KnownAbscissas{std::nullopt, std::nullopt, 1.0}};
}

CoefficientRule CoefficientRule::custom(std::string name, std::function<Complex(Index)> generator,
                                        std::optional<KnownAbscissas> known) {
  if (!generator) throw DomainError("custom rule '" + name + "' has no generator");
  return {Kind::custom, std::move(name), std::move(generator), std::move(known)};
}

CoefficientRule CoefficientRule::table(std::vector<Complex> values) {
  auto shared = std::make_shared<const std::vector<Complex>>(std::move(values));
  return {Kind::custom, "table",
          [shared](Index n) {
            return static_cast<std::size_t>(n) <= shared->size()
                       ? (*shared)[static_cast<std::size_t>(n - 1)]
                       : Complex{0.0, 0.0};
          },
          std::nullopt};
}

Complex CoefficientRule::operator()(Index n) const {
  check_index(n, name_.c_str());
  return generator_(n);
}

void CoefficientRule::fill(Index first, std::span<Complex> out) const {
  check_index(first, name_.c_str());
  const auto count = static_cast<Index>(out.size());
  switch (kind_) {
    case Kind::ones:
      for (auto& a : out) a = Complex{1.0, 0.0};
      return;
    case Kind::eta:
      for (Index j = 0; j < count; ++j) {
        out[static_cast<std::size_t>(j)] = Complex{(first + j) % 2 == 1 ? 1.0 : -1.0, 0.0};
      }
      return;
    case Kind::zeta_shift:
      for (Index j = 0; j < count; ++j) {
        out[static_cast<std::size_t>(j)] = Complex{zeta_term(first + j, shift_), 0.0};
      }
      return;
    default:
      for (Index j = 0; j < count; ++j) out[static_cast<std::size_t>(j)] = generator_(first + j);
  }
}

DirichletPolynomial truncate(const CoefficientRule& rule, Index n_max) {
  check_index(n_max, "truncate");
  std::vector<Complex> block(static_cast<std::size_t>(n_max));
  rule.fill(1, block);
  DirichletPolynomial::Map out;
  for (Index n = 1; n <= n_max; ++n) {
    const Complex a = block[static_cast<std::size_t>(n - 1)];
    if (a != kZero) out.emplace_hint(out.end(), n, a);
  }
  return DirichletPolynomial(std::move(out));
}

}  // namespace dirichlet
