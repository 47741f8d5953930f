// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dirichlet/cli.hpp"
#include "dirichlet/descriptor.hpp"
#include "dirichlet/operators.hpp"
#include "support.hpp"

using namespace dirichlet;
using namespace dirichlet::cli;
using namespace testing_support;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kThree = R"({"kind":"poly","terms":[{"n":3,"re":1}]})";
const std::string kTwo = R"({"kind":"poly","terms":[{"n":2,"re":1}]})";

}  // namespace

TEST_CASE("golden outputs") {
  auto r = invoke({"diff", "--series", kThree});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"kind\":\"poly\",\"terms\":[{\"n\":3,\"re\":-1.0986122886681098}]}\n");

  r = invoke({"eval", "--series", kTwo, "--s", "1,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"re\":0.5,\"im\":0}\n");

  r = invoke({"classify", "--lambda", "0,0", "--space", "zero"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["verdict"] == "resolvent_point");
}

TEST_CASE("every subcommand runs") {
  const std::string eta = R"({"kind":"rule","name":"eta","truncate":64})";
  const std::vector<std::vector<std::string>> commands{
      {"integrate", "--series", kTwo},
      {"mul", "--series", kTwo, "--other", kThree},
      {"seminorm", "--series", kTwo, "--eps", "0.5"},
      {"abscissa", "--series", R"({"kind":"rule","name":"ones"})", "--N", "1000", "--probe-T", "8"},
      {"resolvent", "--lambda", "1,0", "--series", eta, "--space", "full"},
      {"classify", "--lambda", "-1.6094379124341003,0"},
      {"bv-check", "--lambda", "1,0", "--N", "1000"},
      {"reciprocal", "--mu", "0,2"},
      {"volterra", "--g", kTwo, "--series", kThree},
      {"volterra", "--g", kTwo, "--check"},
      {"dynamics", "--series", kThree, "--eps", "0.1"},
  };
  for (const auto& args : commands) {
    CAPTURE(args[0]);
    const auto r = invoke(args);
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(Json::accept(r.out));
    // Byte-for-byte determinism.
    CHECK(invoke(args).out == r.out);
  }
}

TEST_CASE("subcommand results") {
  auto j = Json::parse(invoke({"mul", "--series", kTwo, "--other", kThree}).out);
  CHECK(j["terms"][0]["n"] == 6);
  CHECK(j["terms"][0]["re"] == 1);

  j = Json::parse(invoke({"classify", "--lambda", "-1.6094379124341003,0"}).out);
  CHECK(j["verdict"] == "eigenvalue");
  CHECK(j["n"] == 5);

  j = Json::parse(invoke({"seminorm", "--series", kTwo, "--eps", "1"}).out);
  CHECK(j["lower"] == 0.5);
  CHECK(j["upper"] == 0.5);
  CHECK(j["exact"] == true);

  j = Json::parse(invoke({"dynamics", "--series", kThree, "--eps", "0.1"}).out);
  CHECK(j["verdict"] == "diverges");
  CHECK(j["samples"].size() == 40);

  j = Json::parse(invoke({"reciprocal", "--mu", "-0.6931471805599453,0"}).out);
  CHECK(j["consistent"] == true);
  CHECK(j["in_rho_d"] == false);

  j = Json::parse(invoke({"volterra", "--g", kTwo, "--check"}).out);
  CHECK(j["match"] == true);
}

TEST_CASE("CSV output") {
  auto r = invoke({"dynamics", "--series", kThree, "--eps", "0.1", "--kmax", "12", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "k,value");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.rfind(std::to_string(rows) + ",", 0) == 0);
  }
  CHECK(rows == 12);

  r = invoke({"--format", "csv", "diff", "--series", kThree});
  CHECK(r.out == "n,re,im\n3,-1.0986122886681098,0\n");

  r = invoke({"classify", "--lambda", "1,0", "--format", "csv"});
  CHECK(r.out.rfind("key,value\nlambda.re,1\n", 0) == 0);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"diff"}).code == 1);
  CHECK(invoke({"eval", "--series", kTwo, "--s", "one,two"}).code == 1);
  CHECK(invoke({"diff", "--series", kThree, "--format", "xml"}).code == 1);

  auto r = invoke({"diff", "--series", R"({"kind":"poly","terms":[{"n":3}]})"});
  CHECK(r.code == 1);
  CHECK(r.err.find("series.terms[0].re") != std::string::npos);

  r = invoke({"diff", "--series", R"({"kind":"poly","terms":[{"n":1.5,"re":1}]})"});
  CHECK(r.code == 1);
  CHECK(r.err.find("series.terms[0].n") != std::string::npos);

  r = invoke({"diff", "--series", R"({"kind":"poly","terms":[{"n":2,"re":1},{"n":2,"re":3}]})"});
  CHECK(r.code == 1);
  CHECK(r.err.find("series.terms[1].n") != std::string::npos);

  r = invoke({"diff", "--series", R"({"kind":"rule","name":"zeta_shift","truncate":5})"});
  CHECK(r.code == 1);
  CHECK(r.err.find("series.k") != std::string::npos);

  r = invoke({"diff", "--series", R"({"kind":"rule","name":"eta"})"});
  CHECK(r.code == 1);
  CHECK(r.err.find("series.truncate") != std::string::npos);

  r = invoke({"diff", "--series", R"({"kind":"poly","terms":[)"});
  CHECK(r.code == 1);
  CHECK(r.err.find("series") != std::string::npos);

  r = invoke({"mul", "--series", kTwo, "--other", R"({"kind":"tree"})"});
  CHECK(r.code == 1);
  CHECK(r.err.find("other.kind") != std::string::npos);

  CHECK(invoke({"diff", "--series", "@/nonexistent/series.json"}).code == 1);
}

TEST_CASE("domain and spectral errors exit with 2") {
  auto r = invoke({"integrate", "--series", R"({"kind":"poly","terms":[{"n":1,"re":1}]})"});
  CHECK(r.code == 2);
  CHECK(r.err.find("a_1") != std::string::npos);
  CHECK(invoke({"resolvent", "--lambda", "-0.6931471805599453,0", "--series", kTwo}).code == 2);
  CHECK(invoke({"bv-check", "--lambda", "1,0", "--delta", "0"}).code == 2);
  CHECK(invoke({"reciprocal", "--mu", "0,0"}).code == 2);
  CHECK(invoke({"abscissa", "--series", R"({"kind":"rule","name":"ones"})", "--N", "50"}).code == 2);
  // No colour escapes unless requested.
  CHECK(r.err.find('\033') == std::string::npos);
  std::ostringstream out, err;
  run({"integrate", "--series", R"({"kind":"poly","terms":[{"n":1,"re":1}]})"}, out, err, true);
  CHECK(err.str().find('\033') != std::string::npos);
}

TEST_CASE("file indirection") {
  const std::string path = "test_cli_series.json";
  {
    std::ofstream f(path);
    f << kThree;
  }
  const auto r = invoke({"diff", "--series", "@" + path});
  CHECK(r.code == 0);
  CHECK(r.out == invoke({"diff", "--series", kThree}).out);
  std::remove(path.c_str());
}

TEST_CASE("emitted series re-parse to the same coefficients") {
  Rng rng(90);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = random_polynomial(rng, {.max_index = 1000, .max_terms = 25});
    const auto text = series_to_json(f).dump();
    const auto back = to_polynomial(parse_series_text(text, "series"), "series");
    CHECK(back == f);
  }
  // Through the command line as well: D then re-parse.
  const auto f = random_polynomial(rng, {.max_index = 100});
  const auto once = invoke({"diff", "--series", series_to_json(f).dump()});
  const auto back = to_polynomial(parse_series_text(once.out, "series"), "series");
  CHECK(back == differentiate(f));
}

TEST_CASE("number formatting") {
  CHECK(number(2.0).dump() == "2");
  CHECK(number(-0.0).dump() == "0");
  CHECK(number(0.1).dump() == "0.1");
  CHECK(number(1e300).dump() == "1e+300");
  CHECK(number(NAN).is_null());
  CHECK(number(INFINITY).is_null());
  CHECK(parse_complex("1.5,-2", "--s") == Complex(1.5, -2.0));
  CHECK(parse_complex("3", "--s") == Complex(3.0, 0.0));
  CHECK_THROWS_AS(parse_complex("1,", "--s"), DescriptorError);
  CHECK_THROWS_AS(parse_complex("nan,0", "--s"), DescriptorError);
}
