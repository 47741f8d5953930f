// SPDX-License-Identifier: Apache-2.0

// Random generators shared by the property tests. Fixed seeds keep failures
// reproducible.

#ifndef DIRICHLET_TESTS_SUPPORT_HPP
#define DIRICHLET_TESTS_SUPPORT_HPP

#include <cmath>
#include <random>

#include "dirichlet/series.hpp"

namespace testing_support {

using dirichlet::Complex;
using dirichlet::DirichletPolynomial;
using dirichlet::Index;

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Index uniform_index(Rng& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

inline Complex random_complex(Rng& rng, double scale = 1.0) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
}

struct PolyShape {
  Index max_index = 64;
  std::size_t max_terms = 12;
  bool zero_constant = false;
  bool complex_coefficients = true;
};

inline DirichletPolynomial random_polynomial(Rng& rng, const PolyShape& shape = {}) {
  DirichletPolynomial::Map coeffs;
  const Index first = shape.zero_constant ? 2 : 1;
  const auto terms = static_cast<std::size_t>(uniform_index(rng, 1, static_cast<Index>(shape.max_terms)));
  for (std::size_t i = 0; i < terms; ++i) {
    const Index n = uniform_index(rng, first, shape.max_index);
    coeffs[n] = shape.complex_coefficients ? random_complex(rng) : Complex{uniform(rng, -1.0, 1.0), 0.0};
  }
  return DirichletPolynomial(std::move(coeffs));
}

inline double rel_err(Complex got, Complex want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

}  // namespace testing_support

#endif  // DIRICHLET_TESTS_SUPPORT_HPP
