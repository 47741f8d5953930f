// SPDX-License-Identifier: Apache-2.0

#include "dirichlet/volterra.hpp"

#include "dirichlet/operators.hpp"

namespace dirichlet {

DirichletPolynomial volterra_apply(const DirichletPolynomial& g, const DirichletPolynomial& f) {
  return integrate(dirichlet_multiply(differentiate(g), f));
}

VolterraIdentityReport volterra_identity_check(const DirichletPolynomial& g) {
  VolterraIdentityReport report;
  report.lhs = volterra_apply(g, monomial(1));
  report.rhs = without_constant(g);
  report.match = coefficients_match(report.lhs, report.rhs);
  return report;
}

}  // namespace dirichlet
