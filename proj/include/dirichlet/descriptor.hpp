// SPDX-License-Identifier: Apache-2.0

#ifndef DIRICHLET_DESCRIPTOR_HPP
#define DIRICHLET_DESCRIPTOR_HPP

// JSON series descriptors used by the command-line front end:
//
//   {"kind":"poly","terms":[{"n":2,"re":1.0,"im":0.5}, ...]}
//   {"kind":"rule","name":"ones"|"eta"|"moebius"|"zeta_shift","k":2,"truncate":1000}
//
// "im" defaults to 0. Rules need "truncate" wherever a polynomial is
// required.

#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "dirichlet/series.hpp"

namespace dirichlet::cli {

using Json = nlohmann::ordered_json;

/// Malformed user input; the message names the offending field.
class DescriptorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RuleDescriptor {
  CoefficientRule rule;
  std::optional<Index> truncate;
};

using SeriesDescriptor = std::variant<DirichletPolynomial, RuleDescriptor>;

SeriesDescriptor parse_series(const Json& j, const std::string& field);
/// Parses text, or the contents of the file named after a leading '@'.
SeriesDescriptor parse_series_text(std::string_view text, const std::string& field);

/// The polynomial a descriptor denotes; rules must carry "truncate".
DirichletPolynomial to_polynomial(const SeriesDescriptor& d, const std::string& field);
/// Rules as is; polynomials become table rules.
CoefficientRule to_rule(const SeriesDescriptor& d);

/// "re,im" or "re".
Complex parse_complex(std::string_view text, const std::string& field);

/// Integral doubles below 2^53 as JSON integers, non-finite values as null,
/// everything else as a shortest round-trip double.
Json number(double x);
Json complex_to_json(Complex z);
Json series_to_json(const DirichletPolynomial& f);

/// Reads `text`, or a file when it starts with '@'.
std::string resolve_argument(std::string_view text, const std::string& field);

}  // namespace dirichlet::cli

#endif  // DIRICHLET_DESCRIPTOR_HPP
