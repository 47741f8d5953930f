// SPDX-License-Identifier: Apache-2.0

#include "dirichlet/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dirichlet/errors.hpp"

namespace dirichlet {

namespace {

constexpr Index kMinGrowthN = 1000;
constexpr int kGrowthSamples = 64;
constexpr double kRatioThreshold = 0.05;
constexpr double kPowerThreshold = 0.8;

std::string format_complex(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << z.real() << ", " << z.imag() << ')';
  return os.str();
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxx > 0.0 ? sxy / sxx : 0.0;
}

}  // namespace

std::string to_string(Growth growth) {
  switch (growth) {
    case Growth::admissible: return "admissible";
    case Growth::inadmissible: return "inadmissible";
    case Growth::inconclusive: return "inconclusive";
  }
  return "unknown";
}

Multiplier::Multiplier(std::string label, Symbol symbol, Index first_index)
    : label_(std::move(label)), symbol_(std::move(symbol)), first_index_(first_index) {
  if (!symbol_) throw DomainError("Multiplier '" + label_ + "' has no symbol");
  if (first_index_ != 1 && first_index_ != 2) {
    throw DomainError("Multiplier '" + label_ + "': first index must be 1 or 2");
  }
}

Multiplier Multiplier::identity() {
  return {"I", [](Index) { return Complex{1.0, 0.0}; }, 1};
}

Multiplier Multiplier::differentiation() {
  return {"D", [](Index n) { return Complex{-std::log(static_cast<double>(n)), 0.0}; }, 1};
}

Multiplier Multiplier::integration() {
  return {"J", [](Index n) { return Complex{-1.0 / std::log(static_cast<double>(n)), 0.0}; }, 2};
}

Complex Multiplier::operator()(Index n) const {
  if (n < first_index_) {
    throw DomainError("Multiplier '" + label_ + "' is undefined at n = " + std::to_string(n));
  }
  return symbol_(n);
}

GrowthReport check_growth(const Multiplier& m, Index n_max) {
  if (n_max < kMinGrowthN) {
    throw DomainError("check_growth: n_max must be >= " + std::to_string(kMinGrowthN));
  }
  GrowthReport report;
  const double log_max = std::log(static_cast<double>(n_max));
  const double log_min = std::log(2.0);
  for (int j = 0; j < kGrowthSamples; ++j) {
    const double u = log_min + (log_max - log_min) * j / (kGrowthSamples - 1);
    const auto n = std::clamp<Index>(std::llround(std::exp(u)), 2, n_max);
    if (!report.sample_n.empty() && report.sample_n.back() == n) continue;
    const Complex g = m(n);
    if (g == Complex{}) {
      throw DomainError("check_growth: gamma_" + std::to_string(n) + " = 0 in multiplier '" +
                        m.label() + "'");
    }
    report.sample_n.push_back(n);
    report.ratio.push_back(std::log(std::abs(g)) / std::log(static_cast<double>(n)));
  }

  const std::size_t tail = report.ratio.size() - report.ratio.size() / 4;
  bool small = true;
  bool large = true;
  bool decreasing = true;
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t i = tail; i < report.ratio.size(); ++i) {
    const double r = std::abs(report.ratio[i]);
    small = small && r < kRatioThreshold;
    large = large && r >= kRatioThreshold;
    if (i > tail && r > std::abs(report.ratio[i - 1])) decreasing = false;
    const double log_n = std::log(static_cast<double>(report.sample_n[i]));
    const double log_gamma = std::abs(report.ratio[i]) * log_n;
    if (log_gamma > 0.0) {
      x.push_back(std::log(log_n));
      y.push_back(std::log(log_gamma));
    }
  }
  report.tail_exponent = x.size() >= 2 ? least_squares_slope(x, y) : 0.0;

  if (small) {
    report.verdict = Growth::admissible;
  } else if (decreasing && report.tail_exponent < kPowerThreshold) {
    report.verdict = Growth::admissible;
  } else if (large && report.tail_exponent >= kPowerThreshold) {
    report.verdict = Growth::inadmissible;
  } else {
    report.verdict = Growth::inconclusive;
  }
  return report;
}

DirichletPolynomial apply(const Multiplier& m, const DirichletPolynomial& f) {
  if (m.requires_zero_constant() && f.coefficient(1) != Complex{}) {
    throw DomainError("operator " + m.label() + " requires a_1 = 0, got a_1 = " +
                      format_complex(f.coefficient(1)));
  }
  DirichletPolynomial::Map out;
  for (const auto& [n, a] : f) out.emplace_hint(out.end(), n, m(n) * a);
  return DirichletPolynomial(std::move(out));
}

DirichletPolynomial differentiate(const DirichletPolynomial& f) {
  static const Multiplier d = Multiplier::differentiation();
  return apply(d, f);
}

DirichletPolynomial integrate(const DirichletPolynomial& f) {
  static const Multiplier j = Multiplier::integration();
  return apply(j, f);
}

Multiplier compose(const Multiplier& m1, const Multiplier& m2) {
  return {m1.label() + "*" + m2.label(), [m1, m2](Index n) { return m1(n) * m2(n); },
          std::max(m1.first_index(), m2.first_index())};
}

}  // namespace dirichlet
