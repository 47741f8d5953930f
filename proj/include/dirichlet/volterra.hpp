// SPDX-License-Identifier: Apache-2.0

#ifndef DIRICHLET_VOLTERRA_HPP
#define DIRICHLET_VOLTERRA_HPP

#include "dirichlet/series.hpp"

namespace dirichlet {

/// V_g(f) = J(g' f). The product g' f has no constant term, so this is total
/// on polynomials and the result never has one either.
DirichletPolynomial volterra_apply(const DirichletPolynomial& g, const DirichletPolynomial& f);

struct VolterraIdentityReport {
  DirichletPolynomial lhs;  // V_g(1)
  DirichletPolynomial rhs;  // g - a_1
  bool match = false;       // coefficient-wise, 1e-12 relative
};

/// Checks V_g(1) = g - a_1.
VolterraIdentityReport volterra_identity_check(const DirichletPolynomial& g);

}  // namespace dirichlet

#endif  // DIRICHLET_VOLTERRA_HPP
