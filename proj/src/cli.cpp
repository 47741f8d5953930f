// SPDX-License-Identifier: Apache-2.0

#include "dirichlet/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <limits>
#include <map>
#include <optional>

#include "dirichlet/abscissa.hpp"
#include "dirichlet/descriptor.hpp"
#include "dirichlet/dynamics.hpp"
#include "dirichlet/errors.hpp"
#include "dirichlet/evaluation.hpp"
#include "dirichlet/operators.hpp"
#include "dirichlet/spectral.hpp"
#include "dirichlet/volterra.hpp"

namespace dirichlet::cli {

namespace {

constexpr Index kDefaultAbscissaN = 100000;

Json abscissa_to_json(const AbscissaValue& v) {
  return Json{{"value", number(v.value)},
              {"radius", number(v.radius)},
              {"shift", v.shift},
              {"log_power", number(v.log_power)}};
}

Space parse_space(const std::string& s) {
  if (s == "zero") return Space::zero_subspace;
  return Space::full;  // CLI11 restricts the choices
}

Json classification_to_json(const SpectrumClassification& c) {
  Json j{{"lambda", complex_to_json(c.lambda)},
         {"space", to_string(c.space)},
         {"verdict", c.verdict_name()}};
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Eigenvalue>) {
          j["n"] = v.n;
          j["eigenvector"] = series_to_json(c.eigenvector());
        } else if constexpr (std::is_same_v<V, EigenvalueConstant>) {
          j["eigenvector"] = series_to_json(c.eigenvector());
        } else if constexpr (std::is_same_v<V, ResolventPoint>) {
          j["gap"] = number(v.gap);
          j["near_spectrum"] = v.near_spectrum;
        } else {
          j["reason"] = v.reason;
        }
      },
      c.verdict);
  return j;
}

// CSV: series as n,re,im rows, dynamics as k,value rows, anything else as
// flattened key,value pairs.
std::string csv_scalar(const Json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    return quoted + "\"";
  }
  return v.dump();
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << prefix << ',' << csv_scalar(j) << '\n';
  }
}

void write_csv(const Json& j, std::ostream& out) {
  if (j.is_object() && j.contains("terms") && j.value("kind", "") == "poly") {
    out << "n,re,im\n";
    for (const auto& t : j["terms"]) {
      out << t["n"].dump() << ',' << t["re"].dump() << ',' << t.value("im", Json(0)).dump()
          << '\n';
    }
    return;
  }
  if (j.is_object() && j.contains("samples")) {
    out << "k,value\n";
    for (const auto& s : j["samples"]) out << s["k"].dump() << ',' << s["value"].dump() << '\n';
    return;
  }
  out << "key,value\n";
  flatten(j, "", out);
}

struct Options {
  std::string format = "json";
  std::string series;
  std::string other;
  std::string g;
  std::string s;
  std::string lambda;
  std::string mu;
  std::string space = "zero";
  std::string op = "D";
  double eps = 0.0;
  double delta = 0.5;
  std::optional<double> T;
  std::optional<double> h;
  std::optional<Index> N;
  std::vector<double> probes{0.1, 0.5};
  double probe_T = ProbeGrid{}.T;
  double probe_h = ProbeGrid{}.h;
  int k_max = 40;
  bool check = false;
};

using Handler = std::function<Json()>;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  const std::string red = color ? "\033[31m" : "";
  const std::string reset = color ? "\033[0m" : "";
  auto report = [&](const std::string& msg) { err << red << "error: " << reset << msg << '\n'; };

  CLI::App app{"Dirichlet series operators", "dirichlet"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::map<const CLI::App*, Handler> handlers;
  auto add = [&](const char* name, const char* description, Handler h) {
    CLI::App* sub = app.add_subcommand(name, description);
    handlers[sub] = std::move(h);
    return sub;
  };
  auto series_opt = [&](CLI::App* sub, bool required = true) {
    sub->add_option("--series", o.series, "Series descriptor (JSON or @file)")->required(required);
  };
  auto poly = [&](const std::string& text, const char* field) {
    return to_polynomial(parse_series_text(text, field), field);
  };

  auto* eval = add("eval", "Evaluate f(s)", [&] {
    const Complex s = parse_complex(o.s, "--s");
    return complex_to_json(evaluate(poly(o.series, "series"), HalfPlanePoint(s.real(), s.imag())));
  });
  series_opt(eval);
  eval->add_option("--s", o.s, "Point re,im")->required();

  auto* diff = add("diff", "Apply D", [&] { return series_to_json(differentiate(poly(o.series, "series"))); });
  series_opt(diff);

  auto* integ = add("integrate", "Apply J (requires a_1 = 0)",
                    [&] { return series_to_json(integrate(poly(o.series, "series"))); });
  series_opt(integ);

  auto* mul = add("mul", "Dirichlet product", [&] {
    return series_to_json(dirichlet_multiply(poly(o.series, "series"), poly(o.other, "other")));
  });
  series_opt(mul);
  mul->add_option("--other", o.other, "Second factor (JSON or @file)")->required();

  auto* semi = add("seminorm", "Bracket sup |f| on Re s > eps", [&] {
    const auto f = poly(o.series, "series");
    const auto grid = default_seminorm_grid(f);
    const auto est = seminorm(f, o.eps, o.T.value_or(grid.T), o.h.value_or(grid.h));
    return Json{{"epsilon", number(est.epsilon)},
                {"lower", number(est.lower)},
                {"upper", number(est.upper)},
                {"argmax_t", number(est.argmax_t)},
                {"T", number(est.grid.T)},
                {"h", number(est.grid.h)},
                {"symmetric", est.grid.symmetric},
                {"exact", est.exact()}};
  });
  series_opt(semi);
  semi->add_option("--eps", o.eps, "Half-plane offset")->required();
  semi->add_option("--T", o.T, "Grid half-length");
  semi->add_option("--step", o.h, "Grid step");

  auto* absc = add("abscissa", "Estimate sigma_c, sigma_a and bracket sigma_u", [&] {
    const auto d = parse_series_text(o.series, "series");
    Index N = kDefaultAbscissaN;
    if (const auto* r = std::get_if<RuleDescriptor>(&d); r != nullptr && r->truncate) N = *r->truncate;
    if (const auto* p = std::get_if<DirichletPolynomial>(&d)) N = p->max_index();
    if (o.N) N = *o.N;
    const auto est = bracket_sigma_u(to_rule(d), N, o.probes, ProbeGrid{o.probe_T, o.probe_h});
    Json probes = Json::array();
    for (const auto& p : est.probes) {
      probes.push_back(Json{{"epsilon", number(p.epsilon)},
                            {"sup_full", number(p.sup_full)},
                            {"sup_half", number(p.sup_half)},
                            {"growth_ratio", number(p.growth_ratio)},
                            {"bounded", p.bounded}});
    }
    return Json{{"N", est.N},
                {"sigma_c", abscissa_to_json(est.sigma_c)},
                {"sigma_a", abscissa_to_json(est.sigma_a)},
                {"sigma_u", Json{{"low", number(est.sigma_u_low)}, {"high", number(est.sigma_u_high)}}},
                {"probes", std::move(probes)},
                {"note", est.note}};
  });
  series_opt(absc);
  absc->add_option("--N", o.N, "Number of coefficients");
  absc->add_option("--probe", o.probes, "Probe offsets eps")->delimiter(',');
  absc->add_option("--probe-T", o.probe_T, "Probe grid half-length")->capture_default_str();
  absc->add_option("--probe-h", o.probe_h, "Probe grid step")->capture_default_str();

  auto space_opt = [&](CLI::App* sub) {
    sub->add_option("--space", o.space, "full or zero (a_1 = 0)")
        ->check(CLI::IsMember({"full", "zero"}))
        ->capture_default_str();
  };

  auto* resolv = add("resolvent", "Apply (lambda I - D)^{-1}", [&] {
    const Complex lambda = parse_complex(o.lambda, "--lambda");
    return series_to_json(resolvent_apply(lambda, poly(o.series, "series"), parse_space(o.space)));
  });
  resolv->add_option("--lambda", o.lambda, "Spectral parameter re,im")->required();
  series_opt(resolv);
  space_opt(resolv);

  auto* classify = add("classify", "Classify lambda against the spectrum of D", [&] {
    return classification_to_json(classify_point(parse_complex(o.lambda, "--lambda"), parse_space(o.space)));
  });
  classify->add_option("--lambda", o.lambda, "Spectral parameter re,im")->required();
  space_opt(classify);

  auto* bv = add("bv-check", "Bounded-variation estimate for the resolvent symbol", [&] {
    const auto r = bv_check(parse_complex(o.lambda, "--lambda"), o.delta, o.N.value_or(10000));
    return Json{{"mu", number(r.mu)},
                {"delta", number(r.delta)},
                {"N", r.N},
                {"fitted_c", number(r.fitted_c)},
                {"fitted_c_half", number(r.fitted_c_half)},
                {"total_variation", number(r.total_variation())},
                {"majorant_ratio", number(r.majorant_ratio)},
                {"verdict", r.bounded ? "bounded" : "unstable"}};
  });
  bv->add_option("--lambda", o.lambda, "Spectral parameter re,im")->required();
  bv->add_option("--delta", o.delta, "Weight exponent in (0, 1)")->capture_default_str();
  bv->add_option("--N", o.N, "Number of terms (default 10000)");

  auto* recip = add("reciprocal", "Compare rho(D) with the spectrum of J", [&] {
    const auto r = reciprocal_spectrum_check(parse_complex(o.mu, "--mu"));
    return Json{{"mu", complex_to_json(r.mu)},
                {"in_rho_d", r.in_rho_d},
                {"in_rho_j_reciprocal", r.in_rho_j_reciprocal},
                {"consistent", r.consistent}};
  });
  recip->add_option("--mu", o.mu, "Point re,im")->required();

  auto* volt = add("volterra", "Apply V_g(f) = J(g' f)", [&] {
    const auto g = poly(o.g, "g");
    if (o.check) {
      const auto r = volterra_identity_check(g);
      return Json{{"lhs", series_to_json(r.lhs)}, {"rhs", series_to_json(r.rhs)}, {"match", r.match}};
    }
    const auto f = o.series.empty() ? constant(1.0) : poly(o.series, "series");
    return series_to_json(volterra_apply(g, f));
  });
  volt->add_option("--g", o.g, "Symbol g (JSON or @file)")->required();
  series_opt(volt, false);
  volt->add_flag("--check", o.check, "Check V_g(1) = g - a_1 instead");

  auto* dyn = add("dynamics", "Orbit of (1/k) T^k f for T = D or J", [&] {
    const auto m = o.op == "D" ? Multiplier::differentiation() : Multiplier::integration();
    const auto r = ergodicity_diagnostic(m, poly(o.series, "series"), o.eps, o.k_max);
    Json samples = Json::array();
    for (const auto& s : r.samples) samples.push_back(Json{{"k", s.k}, {"value", number(s.value)}});
    return Json{{"operator", o.op},
                {"epsilon", number(o.eps)},
                {"k_max", o.k_max},
                {"samples", std::move(samples)},
                {"verdict", to_string(r.verdict)},
                {"fitted_rate", number(r.fitted_rate)}};
  });
  dyn->add_option("--operator", o.op, "D or J")->check(CLI::IsMember({"D", "J"}))->capture_default_str();
  series_opt(dyn);
  dyn->add_option("--eps", o.eps, "Half-plane offset")->required();
  dyn->add_option("--kmax", o.k_max, "Largest power")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report(e.what());
    return kUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  Json result;
  try {
    result = handlers.at(chosen)();
  } catch (const DescriptorError& e) {
    report(e.what());
    return kUsage;
  } catch (const SpectralError& e) {
    report(e.what());
    return kDomain;
  } catch (const DomainError& e) {
    report(e.what());
    return kDomain;
  } catch (const DiagnosticError& e) {
    report(e.what());
    return kDomain;
  }

  if (o.format == "csv") {
    write_csv(result, out);
  } else {
    out << result.dump() << '\n';
  }
  return kOk;
}

}  // namespace dirichlet::cli
