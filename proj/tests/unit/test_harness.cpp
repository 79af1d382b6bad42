#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "hankel/errors.hpp"
#include "hankel/harness.hpp"

using namespace hankel;

namespace {

double scalar(const Report& r, const char* name) {
  const ResultValue* v = r.find_result(name);
  REQUIRE(v != nullptr);
  return std::get<double>(*v);
}

const std::vector<double>& array(const Report& r, const char* name) {
  const ResultValue* v = r.find_result(name);
  REQUIRE(v != nullptr);
  return std::get<std::vector<double>>(*v);
}

}  // namespace

TEST_CASE("tolerance profiles") {
  CHECK(parse_profile("strict") == ToleranceProfile::Strict);
  CHECK(profile_name(ToleranceProfile::Fast) == "fast");
  CHECK_THROWS_AS(parse_profile("loose"), ParameterError);
  const Tolerances d = tolerances(ToleranceProfile::Default);
  CHECK(d.residual == 1e-11);
  CHECK(d.gram == 1e-8);
  CHECK(d.total_mass == 1e-9);
  CHECK(d.h_tail == 1e-6);
  CHECK(d.h_limit == 1e-8);
  CHECK(d.continuum == 1e-12);
  CHECK(d.wilson == 1e-10);
  CHECK(tolerances(ToleranceProfile::Strict).residual < d.residual);
  CHECK(tolerances(ToleranceProfile::Fast).h_terms >= 4096);
}

TEST_CASE("discrete grid") {
  const auto grid = discrete_grid();
  CHECK(grid.size() == 50);
  std::set<int> counts;
  int swapped = 0;
  for (const ParamTriple& p : grid) {
    CHECK(p.regime() == Regime::WithDiscrete);
    counts.insert(p.mass_count());
    if (p.b() > p.c()) ++swapped;
  }
  CHECK(*counts.begin() == 1);
  CHECK(*counts.rbegin() == 5);
  CHECK(swapped == 25);
}

TEST_CASE("spectrum report for (0.5,1,2)") {
  const Report r = cmd_spectrum(Target::triple(0.5, 1, 2), ToleranceProfile::Default);
  CHECK(r.all_pass());
  CHECK(scalar(r, "M") == doctest::Approx(0.6180248924337907).epsilon(1e-13));
  CHECK(array(r, "beta")[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  CHECK(array(r, "mass")[0] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(std::get<std::string>(*r.find_result("regime")) == "with-discrete");
}

TEST_CASE("spectrum report for theta") {
  const Report r = cmd_spectrum(Target::hilbert(0.25), ToleranceProfile::Default);
  CHECK(r.all_pass());
  CHECK(array(r, "eigenvalues")[0] == doctest::Approx(std::numbers::pi * std::sqrt(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(cmd_spectrum(Target::triple(3, 1, 1), ToleranceProfile::Default), ParameterError);
}

TEST_CASE("converge: (1,1,1) stays below pi, theta=-0.7 splits off two eigenvalues") {
  const auto c = cmd_converge(Target::triple(1, 1, 1), {16, 32, 64}, 2, ToleranceProfile::Default);
  CHECK(c.report.all_pass());
  CHECK(c.table.rows() == 3);
  for (double t : array(c.report, "top")) CHECK(t < std::numbers::pi);

  const auto h = cmd_converge(Target::hilbert(-0.7), {64, 256}, 1, ToleranceProfile::Default);
  CHECK(h.report.all_pass());
  CHECK(array(h.report, "count_above_pi").back() == 1.0);
  CHECK(array(h.report, "count_below_zero").back() == 1.0);

  CHECK_THROWS_AS(cmd_converge(Target::triple(1, 1, 1), {}, 1, ToleranceProfile::Default), ParameterError);
  CHECK_THROWS_AS(cmd_converge(Target::triple(1, 1, 1), {4}, 5, ToleranceProfile::Default), ParameterError);
}

TEST_CASE("validate: names, determinism and concurrency") {
  const auto names = validate_check_names();
  CHECK(std::find(names.begin(), names.end(), "trace-defect") != names.end());
  ValidateOptions o;
  o.checks = {"bergman", "wilson", "sign-lemma", "beta-ordering", "inequality"};
  o.trials = 200;
  const Report a = cmd_validate(o, ToleranceProfile::Default);
  o.concurrent = false;
  const Report b = cmd_validate(o, ToleranceProfile::Default);
  CHECK(a.all_pass());
  CHECK(to_json(a) == to_json(b));
  // Suites merge in the fixed order, not in the order asked for.
  CHECK(a.checks.front().name.find("beta ordering") != std::string::npos);

  o.checks = {"nope"};
  CHECK_THROWS_AS(cmd_validate(o, ToleranceProfile::Default), ParameterError);
}

TEST_CASE("validate with an explicit target") {
  ValidateOptions o;
  o.target = Target::triple(1, 1, 1);
  o.checks = {"inequality", "commutator", "monotonicity"};
  const Report r = cmd_validate(o, ToleranceProfile::Default);
  CHECK(r.all_pass());
  CHECK(r.params.at("a") == 1.0);
  o.target = Target::hilbert(-0.7);
  o.checks = {"inequality", "continuum", "truncation"};
  CHECK(cmd_validate(o, ToleranceProfile::Default).all_pass());
}

TEST_CASE("entries") {
  const auto h = cmd_entries(MatrixKind::B, Target::triple(1, 1, 1), 3);
  const auto& e = array(h.report, "entries");
  REQUIRE(e.size() == 9);
  CHECK(e[4] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(h.table.rows() == 9);
  const auto t = cmd_entries(MatrixKind::T, Target::triple(1, 1, 1), 2);
  CHECK(array(t.report, "diag") == std::vector<double>{1.0, 5.0});
  CHECK(array(t.report, "offdiag") == std::vector<double>{-1.0});
  CHECK(t.table.str() == "row,col,value\n0,0,1\n0,1,-1\n1,0,-1\n1,1,5\n");
  CHECK(cmd_entries(MatrixKind::A, std::nullopt, 4).table.rows() == 16);
  CHECK_THROWS_AS(cmd_entries(MatrixKind::H, Target::triple(1, 1, 1), 3), ParameterError);
  CHECK_THROWS_AS(parse_matrix_kind("Q"), ParameterError);
}
