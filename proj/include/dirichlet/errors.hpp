// SPDX-License-Identifier: Apache-2.0

#ifndef DIRICHLET_ERRORS_HPP
#define DIRICHLET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dirichlet {

/// Raised when an argument lies outside an operation's domain (bad index,
/// nonzero constant term where the zero-constant subspace is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a numerical diagnostic detects that its own preconditions do
/// not hold on the inspected data (e.g. a weight that is not monotone).
class DiagnosticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dirichlet

#endif  // DIRICHLET_ERRORS_HPP
