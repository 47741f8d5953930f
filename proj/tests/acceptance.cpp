// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "dirichlet/abscissa.hpp"
#include "dirichlet/dynamics.hpp"
#include "dirichlet/evaluation.hpp"
#include "dirichlet/operators.hpp"
#include "dirichlet/spectral.hpp"
#include "dirichlet/volterra.hpp"
#include "support.hpp"

using namespace dirichlet;
using namespace testing_support;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double logn(Index n) { return std::log(static_cast<double>(n)); }

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool coefficientwise(const DirichletPolynomial& got, const DirichletPolynomial& want, double tol) {
  return coefficients_match(got, want, tol);
}

Outcome inverse_identities() {
  Outcome o;
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_polynomial(rng, {.max_index = 512, .max_terms = 64, .zero_constant = true});
    o.require(coefficientwise(integrate(differentiate(f)), f, 1e-12), "JD f != f");
    o.require(coefficientwise(differentiate(integrate(f)), f, 1e-12), "DJ f != f");
  }
  o.detail = o.pass ? "200 polynomials, JD = DJ = I within 1e-12" : o.detail;
  return o;
}

Outcome spectrum() {
  Outcome o;
  for (Index n = 2; n <= 1000; ++n) {
    const Complex lambda = -logn(n);
    const auto c = classify_point(lambda, Space::zero_subspace);
    const auto* e = std::get_if<Eigenvalue>(&c.verdict);
    o.require(e != nullptr && e->n == n, "classify(-log " + std::to_string(n) + ") is not Eigenvalue{n}");
    o.require(shifted_operator_apply(lambda, monomial(n)).is_zero(),
              "(lambda I - D) n^{-s} != 0 for n = " + std::to_string(n));
  }
  o.detail = o.pass ? "n = 2..1000 all eigenvalues, kernels exact" : o.detail;
  return o;
}

Outcome cesaro_growth() {
  Outcome o;
  double worst = 0.0;
  for (double eps : {0.1, 1.0}) {
    for (int k = 1; k <= 40; ++k) {
      const double d = normalized_power_norm(Multiplier::differentiation(), monomial(3), eps, k);
      const double d_want = std::pow(logn(3), k) / (k * std::pow(3.0, eps));
      const double j = normalized_power_norm(Multiplier::integration(), monomial(2), eps, k);
      const double j_want = 1.0 / (k * std::pow(logn(2), k) * std::pow(2.0, eps));
      worst = std::max({worst, rel_err(d, d_want), rel_err(j, j_want)});
    }
    const auto dr = ergodicity_diagnostic(Multiplier::differentiation(), monomial(3), eps, 40);
    const auto jr = ergodicity_diagnostic(Multiplier::integration(), monomial(2), eps, 40);
    o.require(dr.verdict == OrbitVerdict::diverges, "D at 3^{-s}, eps = " + fmt(eps) + ": " + to_string(dr.verdict));
    o.require(jr.verdict == OrbitVerdict::diverges, "J at 2^{-s}, eps = " + fmt(eps) + ": " + to_string(jr.verdict));
  }
  o.require(worst <= 1e-9, "relative error " + fmt(worst));
  o.detail = o.pass ? "max rel err " + fmt(worst) + ", four verdicts diverge" : o.detail;
  return o;
}

Outcome resolvent_round_trip() {
  Outcome o;
  Rng rng(4);
  int tested = 0;
  double worst = 0.0;
  while (tested < 50) {
    const Complex lambda(uniform(rng, -8.0, 4.0), uniform(rng, -3.0, 3.0));
    const double mu = spectral_gap(lambda);
    if (!(mu > 0.05)) continue;
    ++tested;
    const auto f = random_polynomial(rng, {.max_index = 256, .max_terms = 40, .zero_constant = true});
    const auto out = resolvent_apply(lambda, f, Space::zero_subspace);
    const auto back = shifted_operator_apply(lambda, out);
    for (const auto& [n, b] : f) {
      worst = std::max(worst, std::abs(back.coefficient(n) - b));
      o.require(std::abs(out.coefficient(n)) <= std::abs(b) / mu,
                "|out_n| > |b_n| / mu at n = " + std::to_string(n));
    }
  }
  o.require(worst <= 1e-10, "round-trip error " + fmt(worst));
  o.detail = o.pass ? "50 points, max round-trip error " + fmt(worst) : o.detail;
  return o;
}

Outcome bounded_variation() {
  Outcome o;
  const Complex lambda = 1.0;
  const double delta = 0.5;
  const auto r = bv_check(lambda, delta, 10000);
  const double drift = std::abs(r.fitted_c - r.fitted_c_half) / r.fitted_c;
  o.require(r.bounded && drift < 0.01, "fitted C drifted by " + fmt(drift));
  auto g = [&](Index n) { return 1.0 / ((logn(n) + lambda) * std::pow(static_cast<double>(n), delta)); };
  for (Index n = 2; n <= 10000; ++n) {
    const double d = std::abs(g(n) - g(n + 1));
    const double bound = r.fitted_c / (r.mu * r.mu * std::pow(static_cast<double>(n), 1.0 + delta / 2.0));
    o.require(d <= bound, "term bound fails at n = " + std::to_string(n));
  }
  o.detail = o.pass ? "C = " + fmt(r.fitted_c) + ", drift " + fmt(drift) + ", all terms bounded" : o.detail;
  return o;
}

Outcome reciprocal_spectrum() {
  Outcome o;
  Rng rng(6);
  std::vector<Complex> sweep;
  for (Index n = 2; n <= 50; ++n) sweep.emplace_back(-logn(n), 0.0);
  while (sweep.size() < 200) sweep.emplace_back(uniform(rng, -6.0, 3.0), uniform(rng, -2.0, 2.0));
  int bad = 0;
  for (const Complex mu : sweep) bad += reciprocal_spectrum_check(mu).consistent ? 0 : 1;
  o.require(bad == 0, std::to_string(bad) + " inconsistencies");
  o.detail = o.pass ? "200 points, 0 inconsistencies" : o.detail;
  return o;
}

Outcome volterra_identity() {
  Outcome o;
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_polynomial(rng, {.max_index = 256, .max_terms = 30});
    o.require(volterra_identity_check(g).match, "V_g(1) != g - a_1");
    const auto f = random_polynomial(rng, {.max_index = 64});
    o.require(volterra_apply(g, f).coefficient(1) == Complex{}, "first coefficient of V_g(f) != 0");
  }
  o.detail = o.pass ? "100 symbols, identity holds, a_1 = 0 throughout" : o.detail;
  return o;
}

Outcome convolution_product() {
  Outcome o;
  Rng rng(8);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_polynomial(rng, {.max_index = 100});
    const auto g = random_polynomial(rng, {.max_index = 100});
    const HalfPlanePoint s(uniform(rng, 0.1, 3.0), uniform(rng, -50.0, 50.0));
    const Complex want = evaluate(f, s) * evaluate(g, s);
    worst = std::max(worst, std::abs(evaluate(f * g, s) - want) / (1.0 + std::abs(want)));
  }
  o.require(worst <= 1e-10, "scaled error " + fmt(worst));
  o.detail = o.pass ? "100 triples, max scaled error " + fmt(worst) : o.detail;
  return o;
}

Outcome abscissa_corpus() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const Index N = 100000;
  const auto ones_c = estimate_sigma_c(CoefficientRule::ones(), N);
  const auto ones_a = estimate_sigma_a(CoefficientRule::ones(), N);
  const auto eta_c = estimate_sigma_c(CoefficientRule::eta(), N);
  const auto eta_a = estimate_sigma_a(CoefficientRule::eta(), N);
  const auto zeta_a = estimate_sigma_a(CoefficientRule::zeta_shift(2), N);
  const double seconds = elapsed_since(start);
  o.require(std::abs(ones_c.value - 1.0) <= 0.02, "ones sigma_c = " + fmt(ones_c.value));
  o.require(std::abs(ones_a.value - 1.0) <= 0.02, "ones sigma_a = " + fmt(ones_a.value));
  o.require(std::abs(eta_c.value) <= 0.05, "eta sigma_c = " + fmt(eta_c.value));
  o.require(std::abs(eta_a.value - 1.0) <= 0.02, "eta sigma_a = " + fmt(eta_a.value));
  o.require(zeta_a.shift >= 1 && std::abs(zeta_a.value + 1.0) <= 0.05,
            "zeta_shift(2) sigma_a = " + fmt(zeta_a.value) + " (shift " + std::to_string(zeta_a.shift) + ")");
  o.require(seconds < 5.0, "took " + fmt(seconds) + " s");
  o.detail = o.pass ? "ones (" + fmt(ones_c.value) + ", " + fmt(ones_a.value) + "), eta (" + fmt(eta_c.value) +
                          ", " + fmt(eta_a.value) + "), zeta_shift(2) sigma_a " + fmt(zeta_a.value) + " shift " +
                          std::to_string(zeta_a.shift)
                    : o.detail;
  return o;
}

Outcome evaluation_oracle() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto rule = CoefficientRule::zeta_shift(2);
  // Leave a tenth of the tolerance for rounding in the partial sum.
  const Index N = select_truncation(rule, 0.0, 0.9e-8);
  const Complex v = evaluate_truncated(rule, N, HalfPlanePoint(0.0, 0.0));
  const double seconds = elapsed_since(start);
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  const double err = std::abs(v - zeta2);
  o.require(err <= 1e-8, "error " + fmt(err) + " at N = " + std::to_string(N));
  o.require(seconds < 1.0, "took " + fmt(seconds) + " s");
  o.detail = o.pass ? "N = " + std::to_string(N) + ", error " + fmt(err) : o.detail;
  return o;
}

Outcome seminorm_sanity() {
  Outcome o;
  for (double eps : {0.0, 0.5, 1.0}) {
    const auto e = seminorm(monomial(2), eps);
    const double want = std::pow(2.0, -eps);
    o.require(e.lower == e.upper, "lower != upper at eps = " + fmt(eps));
    o.require(std::abs(e.upper - want) <= 2.0 * std::numeric_limits<double>::epsilon() * want,
              "P_eps(2^{-s}) = " + fmt(e.upper) + " at eps = " + fmt(eps));
  }
  const auto e = seminorm(DirichletPolynomial{{1, 1.0}, {2, -1.0}}, 0.0);
  o.require(std::abs(e.lower - 2.0) <= 1e-3, "P_0(1 - 2^{-s}) lower = " + fmt(e.lower));
  o.detail = o.pass ? "exact for 2^{-s}; 1 - 2^{-s} lower " + fmt(e.lower) : o.detail;
  return o;
}

Outcome spectral_gap_oracle() {
  Outcome o;
  const Index limit = 1000000;
  std::vector<double> logs(static_cast<std::size_t>(limit) + 1);
  for (Index n = 2; n <= limit; ++n) logs[static_cast<std::size_t>(n)] = logn(n);
  Rng rng(12);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Complex lambda(uniform(rng, -10.0, 3.0), uniform(rng, -5.0, 5.0));
    double brute = std::abs(lambda);
    for (std::size_t n = 2; n < logs.size(); ++n) brute = std::min(brute, std::abs(logs[n] + lambda));
    worst = std::max(worst, std::abs(spectral_gap(lambda) - brute));
  }
  o.require(worst <= 1e-12, "max difference " + fmt(worst));
  o.detail = o.pass ? "100 points, max difference " + fmt(worst) : o.detail;
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
  double budget_seconds;  // 0: no runtime requirement
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "inverse identities JD = DJ = I", inverse_identities, 1.0},
      {2, "spectrum of D on the zero subspace", spectrum, 1.0},
      {3, "Cesaro growth of the two witnesses", cesaro_growth, 0.0},
      {4, "resolvent round trip and gap bound", resolvent_round_trip, 0.0},
      {5, "bounded-variation estimate", bounded_variation, 0.0},
      {6, "reciprocal spectrum consistency", reciprocal_spectrum, 0.0},
      {7, "Volterra identity", volterra_identity, 0.0},
      {8, "convolution vs pointwise product", convolution_product, 0.0},
      {9, "abscissa corpus", abscissa_corpus, 0.0},
      {10, "evaluation oracle zeta(2)", evaluation_oracle, 0.0},
      {11, "seminorm sanity", seminorm_sanity, 0.0},
      {12, "spectral gap oracle", spectral_gap_oracle, 0.0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double seconds = elapsed_since(start);
    if (c.budget_seconds > 0.0 && seconds >= c.budget_seconds) {
      o.pass = false;
      o.detail = "took " + fmt(seconds) + " s, budget " + fmt(c.budget_seconds) + " s";
    }
    std::printf("[%s] %2d %-40s %7.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, seconds, o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
