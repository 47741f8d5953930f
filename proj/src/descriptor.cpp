// SPDX-License-Identifier: Apache-2.0

#include "dirichlet/descriptor.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "dirichlet/errors.hpp"

namespace dirichlet::cli {

namespace {

constexpr double kMaxExactInteger = 9007199254740992.0;  // 2^53

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw DescriptorError(field + ": " + what);
}

double get_number(const Json& obj, const char* key, const std::string& field, bool required) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) fail(field + "." + key, "missing");
    return 0.0;
  }
  if (!it->is_number()) fail(field + "." + key, "expected a number");
  return it->get<double>();
}

Index get_index(const Json& obj, const char* key, const std::string& field) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(field + "." + key, "missing");
  if (!it->is_number_integer() || it->get<std::int64_t>() < 1) {
    fail(field + "." + key, "expected an integer >= 1");
  }
  return it->get<std::int64_t>();
}

DirichletPolynomial parse_poly(const Json& j, const std::string& field) {
  const auto terms = j.find("terms");
  if (terms == j.end()) fail(field + ".terms", "missing");
  if (!terms->is_array()) fail(field + ".terms", "expected an array");
  DirichletPolynomial::Map coeffs;
  for (std::size_t i = 0; i < terms->size(); ++i) {
    const std::string where = field + ".terms[" + std::to_string(i) + "]";
    const Json& t = (*terms)[i];
    if (!t.is_object()) fail(where, "expected an object");
    const Index n = get_index(t, "n", where);
    const Complex a{get_number(t, "re", where, true), get_number(t, "im", where, false)};
    if (!coeffs.emplace(n, a).second) fail(where + ".n", "duplicate index " + std::to_string(n));
  }
  return DirichletPolynomial(std::move(coeffs));
}

RuleDescriptor parse_rule(const Json& j, const std::string& field) {
  const auto name_it = j.find("name");
  if (name_it == j.end()) fail(field + ".name", "missing");
  if (!name_it->is_string()) fail(field + ".name", "expected a string");
  const std::string name = name_it->get<std::string>();

  std::optional<CoefficientRule> rule;
  if (name == "ones") {
    rule = CoefficientRule::ones();
  } else if (name == "eta") {
    rule = CoefficientRule::eta();
  } else if (name == "moebius") {
    rule = CoefficientRule::moebius();
  } else if (name == "zeta_shift") {
    const auto k = j.find("k");
    if (k == j.end()) fail(field + ".k", "missing (required by zeta_shift)");
    if (!k->is_number_integer()) fail(field + ".k", "expected an integer");
    rule = CoefficientRule::zeta_shift(static_cast<double>(k->get<std::int64_t>()));
  } else {
    fail(field + ".name", "unknown rule '" + name + "'");
  }

  RuleDescriptor out{*rule, std::nullopt};
  if (j.contains("truncate")) out.truncate = get_index(j, "truncate", field);
  return out;
}

}  // namespace

SeriesDescriptor parse_series(const Json& j, const std::string& field) {
  if (!j.is_object()) fail(field, "expected a JSON object");
  const auto kind = j.find("kind");
  if (kind == j.end()) fail(field + ".kind", "missing");
  if (!kind->is_string()) fail(field + ".kind", "expected a string");
  const std::string k = kind->get<std::string>();
  if (k == "poly") return parse_poly(j, field);
  if (k == "rule") return parse_rule(j, field);
  fail(field + ".kind", "expected \"poly\" or \"rule\", got \"" + k + "\"");
}

SeriesDescriptor parse_series_text(std::string_view text, const std::string& field) {
  const std::string body = resolve_argument(text, field);
  Json j;
  try {
    j = Json::parse(body);
  } catch (const Json::parse_error& e) {
    fail(field, std::string("malformed JSON (") + e.what() + ")");
  }
  return parse_series(j, field);
}

DirichletPolynomial to_polynomial(const SeriesDescriptor& d, const std::string& field) {
  if (const auto* p = std::get_if<DirichletPolynomial>(&d)) return *p;
  const auto& r = std::get<RuleDescriptor>(d);
  if (!r.truncate) fail(field + ".truncate", "required for rule descriptors here");
  return truncate(r.rule, *r.truncate);
}

CoefficientRule to_rule(const SeriesDescriptor& d) {
  if (const auto* r = std::get_if<RuleDescriptor>(&d)) return r->rule;
  const auto& p = std::get<DirichletPolynomial>(d);
  std::vector<Complex> table(static_cast<std::size_t>(p.max_index()));
  for (const auto& [n, a] : p) table[static_cast<std::size_t>(n - 1)] = a;
  return CoefficientRule::table(std::move(table));
}

Complex parse_complex(std::string_view text, const std::string& field) {
  auto parse_part = [&](std::string_view part) {
    double value = 0.0;
    const auto* end = part.data() + part.size();
    const auto [ptr, ec] = std::from_chars(part.data(), end, value);
    if (part.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
      fail(field, "expected \"re,im\" with finite numbers, got \"" + std::string(text) + "\"");
    }
    return value;
  };
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_part(text), 0.0};
  return {parse_part(text.substr(0, comma)), parse_part(text.substr(comma + 1))};
}

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  if (x == std::trunc(x) && std::abs(x) < kMaxExactInteger) {
    return static_cast<std::int64_t>(x);
  }
  return x;
}

Json complex_to_json(Complex z) { return Json{{"re", number(z.real())}, {"im", number(z.imag())}}; }

Json series_to_json(const DirichletPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [n, a] : f) {
    Json t{{"n", n}, {"re", number(a.real())}};
    if (a.imag() != 0.0) t["im"] = number(a.imag());
    terms.push_back(std::move(t));
  }
  return Json{{"kind", "poly"}, {"terms", std::move(terms)}};
}

std::string resolve_argument(std::string_view text, const std::string& field) {
  if (text.empty() || text.front() != '@') return std::string(text);
  const std::string path(text.substr(1));
  std::ifstream in(path);
  if (!in) fail(field, "cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace dirichlet::cli
