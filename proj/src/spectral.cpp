// SPDX-License-Identifier: Apache-2.0

#include "dirichlet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "dirichlet/errors.hpp"
#include "dirichlet/kernels.hpp"

namespace dirichlet {

namespace {

// Above this log n the integers are too dense for double-precision logs.
constexpr double kMaxWindowLog = 43.0;
constexpr Index kMinBvN = 1000;

double log_distance(Index n, Complex lambda) {
  return std::abs(Complex{std::log(static_cast<double>(n)), 0.0} + lambda);
}

double inverse_log_distance(Index n, Complex nu) {
  return std::abs(Complex{1.0 / std::log(static_cast<double>(n)), 0.0} + nu);
}

// Minimum of dist(n) over the integers around `center`, clamped to n >= 2.
template <class Dist>
LogDistance scan_window(double center, Dist dist) {
  const Index c = std::max<Index>(2, static_cast<Index>(std::floor(center)));
  LogDistance best{std::numeric_limits<double>::infinity(), 2};
  for (Index n = std::max<Index>(2, c - 1); n <= c + 2; ++n) {
    const double d = dist(n);
    if (d < best.distance) best = {d, n};
  }
  return best;
}

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << z.real() << ", " << z.imag() << ')';
  return os.str();
}

}  // namespace

std::string to_string(Space space) {
  return space == Space::full ? "full" : "zero";
}

std::string SpectrumClassification::verdict_name() const {
  struct Name {
    std::string operator()(const Eigenvalue&) const { return "eigenvalue"; }
    std::string operator()(const EigenvalueConstant&) const { return "eigenvalue_constant"; }
    std::string operator()(const ResolventPoint&) const { return "resolvent_point"; }
    std::string operator()(const SpectrumNonEigen&) const { return "spectrum_non_eigen"; }
  };
  return std::visit(Name{}, verdict);
}

DirichletPolynomial SpectrumClassification::eigenvector() const {
  if (const auto* e = std::get_if<Eigenvalue>(&verdict)) return monomial(e->n);
  if (std::holds_alternative<EigenvalueConstant>(verdict)) return monomial(1);
  return {};
}

SpectralError::SpectralError(SpectrumClassification classification)
    : std::domain_error("lambda = " + describe(classification.lambda) +
                        " lies in the spectrum of D on the " + to_string(classification.space) +
                        " space (" + classification.verdict_name() + ")"),
      classification_(std::move(classification)) {}

LogDistance nearest_log(Complex lambda) {
  const double x = -lambda.real();
  if (x <= std::numbers::ln2) {
    // |log n + lambda| increases with n once log n >= -Re lambda.
    return {log_distance(2, lambda), 2};
  }
  if (x >= kMaxWindowLog) return {std::abs(lambda.imag()), 0};
  return scan_window(std::exp(x), [&](Index n) { return log_distance(n, lambda); });
}

double spectral_gap(Complex lambda) {
  return std::min(std::abs(lambda), nearest_log(lambda).distance);
}

SpectrumClassification classify_point(Complex lambda, Space space) {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) {
    throw DomainError("classify_point: lambda must be finite");
  }
  SpectrumClassification out{lambda, space, ResolventPoint{}};
  const LogDistance nearest = nearest_log(lambda);
  if (nearest.n >= 2 && nearest.distance <= kSpectrumTolerance) {
    out.verdict = Eigenvalue{nearest.n};
    return out;
  }
  if (std::abs(lambda) <= kSpectrumTolerance) {
    if (space == Space::full) {
      out.verdict = EigenvalueConstant{};
    } else {
      // D is invertible on the zero subspace with inverse J; the denominators
      // of the resolvent symbol are log n >= log 2.
      out.verdict = ResolventPoint{nearest_log(Complex{}).distance, false};
    }
    return out;
  }
  const double gap = std::min(std::abs(lambda), nearest.distance);
  const bool near = nearest.distance <= kNearSpectrumDistance ||
                    (space == Space::full && std::abs(lambda) <= kNearSpectrumDistance);
  out.verdict = ResolventPoint{gap, near};
  return out;
}

DirichletPolynomial shifted_operator_apply(Complex lambda, const DirichletPolynomial& f) {
  DirichletPolynomial::Map out;
  for (const auto& [n, b] : f) {
    const Complex symbol = Complex{std::log(static_cast<double>(n)), 0.0} + lambda;
    out.emplace_hint(out.end(), n, symbol * b);
  }
  return DirichletPolynomial(std::move(out));
}

DirichletPolynomial resolvent_apply(Complex lambda, const DirichletPolynomial& f, Space space) {
  auto cls = classify_point(lambda, space);
  if (!cls.in_resolvent_set()) throw SpectralError(std::move(cls));
  if (space == Space::zero_subspace && f.coefficient(1) != Complex{}) {
    throw DomainError("resolvent on the zero subspace requires b_1 = 0, got b_1 = " +
                      describe(f.coefficient(1)));
  }
  DirichletPolynomial::Map out;
  for (const auto& [n, b] : f) {
    const Complex denom =
        n == 1 ? lambda : Complex{std::log(static_cast<double>(n)), 0.0} + lambda;
    out.emplace_hint(out.end(), n, b / denom);
  }
  return DirichletPolynomial(std::move(out));
}

BvReport bv_check(Complex lambda, double delta, Index N) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("bv_check: need 0 < delta < 1");
  if (N < kMinBvN) throw DomainError("bv_check: N must be >= " + std::to_string(kMinBvN));
  auto cls = classify_point(lambda, Space::zero_subspace);
  if (!cls.in_resolvent_set()) throw SpectralError(std::move(cls));
  const double mu = std::get<ResolventPoint>(cls.verdict).gap;

  auto g = [&](Index n) {
    const double x = static_cast<double>(n);
    return 1.0 / ((Complex{std::log(x), 0.0} + lambda) * std::pow(x, delta));
  };

  BvReport report;
  report.mu = mu;
  report.delta = delta;
  report.N = N;
  report.partial_sums.reserve(static_cast<std::size_t>(N - 1));
  kernels::CompensatedSum variation;
  kernels::CompensatedSum majorant;
  const double exponent = 1.0 + delta / 2.0;
  Complex current = g(2);
  for (Index n = 2; n <= N; ++n) {
    const Complex next = g(n + 1);
    const double diff = std::abs(current - next);
    variation.add(diff);
    report.partial_sums.push_back(variation.value());
    const double weight = std::pow(static_cast<double>(n), exponent);
    const double scaled = mu * mu * weight * diff;
    report.fitted_c = std::max(report.fitted_c, scaled);
    if (n <= N / 2) report.fitted_c_half = report.fitted_c;
    majorant.add(1.0 / (mu * mu * weight));
    current = next;
  }
  report.majorant_ratio = report.total_variation() / (report.fitted_c * majorant.value());
  report.bounded = std::abs(report.fitted_c - report.fitted_c_half) <= 0.01 * report.fitted_c;
  return report;
}

LogDistance integration_symbol_distance(Complex nu) {
  const double re = nu.real();
  if (re >= 0.0) {
    // |1/log n + nu| decreases towards |nu| as n grows.
    return {std::abs(nu), 0};
  }
  const double u = -1.0 / re;  // minimizing log n
  if (u <= std::numbers::ln2) return {inverse_log_distance(2, nu), 2};
  if (u >= kMaxWindowLog) return {std::abs(nu.imag()), 0};
  return scan_window(std::exp(u), [&](Index n) { return inverse_log_distance(n, nu); });
}

ReciprocalReport reciprocal_spectrum_check(Complex mu) {
  if (mu == Complex{}) throw DomainError("reciprocal_spectrum_check: mu must be nonzero");
  ReciprocalReport report;
  report.mu = mu;
  report.in_rho_d = classify_point(mu, Space::zero_subspace).in_resolvent_set();
  const Complex nu = 1.0 / mu;
  const LogDistance nearest = integration_symbol_distance(nu);
  // |1/log n + 1/mu| = |log n + mu| / (|mu| log n): the same tolerance as for D.
  const bool in_spectrum =
      nearest.n >= 2 && nearest.distance <= kSpectrumTolerance * std::abs(nu) /
                                                std::log(static_cast<double>(nearest.n));
  report.in_rho_j_reciprocal = !in_spectrum;
  report.consistent = report.in_rho_d == report.in_rho_j_reciprocal;
  return report;
}

}  // namespace dirichlet
