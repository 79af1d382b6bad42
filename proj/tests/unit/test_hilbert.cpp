#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hankel/eigensolve.hpp"
#include "hankel/errors.hpp"
#include "hankel/hilbert.hpp"
#include "hankel/operators.hpp"
#include "hankel/spectral.hpp"

using namespace hankel;
using std::numbers::pi;

TEST_CASE("theta validation and entries") {
  CHECK_THROWS_AS(validate_theta(0.0), ParameterError);
  CHECK_THROWS_AS(validate_theta(-3.0), ParameterError);
  CHECK_THROWS_AS(validate_theta(NAN), ParameterError);
  CHECK(validate_theta(-0.7) == -0.7);
  CHECK(h_theta_entry(0.25, 1, 2) == 1.0 / 3.25);
  const auto h = h_theta_matrix(-0.7, 3);
  CHECK(h(0, 0) == 1.0 / -0.7);
  CHECK(h(2, 1) == 1.0 / 2.3);
}

TEST_CASE("H(theta) equals B(theta,theta,1) for theta > 0") {
  for (double theta : {0.25, 1.0, 2.5}) {
    const auto h = h_theta_matrix(theta, 20);
    const auto b = b_matrix(ParamTriple::validate(theta, theta, 1.0), 20);
    for (std::size_t j = 0; j < 20; ++j)
      for (std::size_t k = 0; k < 20; ++k) CHECK(h(j, k) == doctest::Approx(b(j, k)).epsilon(1e-13));
  }
}

TEST_CASE("Jacobi matrix hand values") {
  const auto t = hilbert_jacobi(1.0, 3);
  CHECK(t.diag[0] == 0.75);
  CHECK(t.diag[1] == 4.75);
  CHECK(t.offdiag[0] == -1.0);
  CHECK(t.offdiag[1] == -4.0);
}

TEST_CASE("discrete part") {
  CHECK(hilbert_discrete_count(1.0) == -1);
  CHECK(hilbert_discrete_count(0.5) == -1);
  CHECK(hilbert_discrete_count(0.25) == 0);
  CHECK(hilbert_discrete_count(-0.7) == 1);
  CHECK(hilbert_discrete_count(-2.3) == 2);
  CHECK(hilbert_lambda_sq(-0.7, 1) == doctest::Approx(-0.04).epsilon(1e-14));
  CHECK(hilbert_mass(-0.7, 0) == doctest::Approx(0.66466327678590664).epsilon(1e-13));
  CHECK(hilbert_mass(-0.7, 1) == doctest::Approx(0.26586531071436265).epsilon(1e-13));
  CHECK_THROWS_AS(hilbert_mass(-0.7, 2), std::out_of_range);
  CHECK_THROWS_AS(hilbert_lambda_sq(1.0, 0), std::out_of_range);
}

TEST_CASE("density against reference values") {
  CHECK(hilbert_rho(1.0, 0.8) == doctest::Approx(0.79847114943023378).epsilon(1e-12));
  CHECK(hilbert_rho(0.25, 0.8) == doctest::Approx(0.075484233705424161).epsilon(1e-12));
  CHECK(hilbert_rho(-0.7, 0.8) == doctest::Approx(0.026430085599613538).epsilon(1e-12));
  CHECK_THROWS_AS(hilbert_rho(1.0, 0.0), DomainError);
}

TEST_CASE("spectrum report") {
  const auto one = hilbert_spectrum_report(1.0);
  CHECK(one.N == -1);
  CHECK(one.eigen.empty());
  CHECK(one.ac_hi == pi);

  const auto quarter = hilbert_spectrum_report(0.25);
  REQUIRE(quarter.eigen.size() == 1);
  CHECK(quarter.eigen[0].value == doctest::Approx(4.4428829381583661).epsilon(1e-14));

  const auto neg = hilbert_spectrum_report(-0.7);
  REQUIRE(neg.eigen.size() == 2);
  double lo = neg.eigen[0].value, hi = neg.eigen[1].value;
  if (lo > hi) std::swap(lo, hi);
  CHECK(lo == doctest::Approx(-3.8832220774509332).epsilon(1e-14));
  CHECK(hi == doctest::Approx(3.8832220774509332).epsilon(1e-14));

  // θ = -2.5: three mass points, eigenvalues -π, π, -π aggregate to two entries.
  const auto agg = hilbert_spectrum_report(-2.5);
  CHECK(agg.N == 2);
  REQUIRE(agg.eigen.size() == 2);
  int total = 0;
  for (const auto& e : agg.eigen) {
    CHECK(std::fabs(std::fabs(e.value) - pi) < 1e-12);
    total += e.multiplicity;
  }
  CHECK(total == 3);
}

TEST_CASE("truncations respect the spectral bounds") {
  const auto r = dense_eigen(h_theta_matrix(-0.7, 128), Selection::all());
  CHECK(r.values.front() == doctest::Approx(-3.8832220774509332).epsilon(1e-6));
  CHECK(r.values.back() < 3.8832220774509332);
  CHECK(r.values[1] > -0.01);
  CHECK(r.values[r.values.size() - 2] < pi + 0.01);
}

TEST_CASE("Bergman decomposition") {
  const auto e = bergman_entries(0, 0);
  CHECK(e.A == 1.0);
  CHECK(e.B == 0.5);
  CHECK(e.Z == 0.5);
  const auto p = ParamTriple::validate(1, 1, 2);
  for (std::size_t j = 0; j <= 100; j += 3)
    for (std::size_t k = 0; k <= 100; k += 7) {
      const auto x = bergman_entries(j, k);
      const double ulp = std::nextafter(x.A, 2.0 * x.A) - x.A;
      CHECK(std::fabs(x.A - (x.B + x.Z)) <= ulp);
      CHECK(x.B == doctest::Approx(b_entry(p, j, k)).epsilon(1e-12));
      CHECK(x.A == doctest::Approx(std::sqrt((j + 1.0) * (k + 1.0)) / ((j + k + 1.0) * (j + k + 1.0))).epsilon(1e-15));
    }
  const auto a = bergman_matrix(5), z = bergman_defect_matrix(5);
  CHECK(a(1, 3) == bergman_entries(1, 3).A);
  CHECK(z(4, 2) == bergman_entries(4, 2).Z);
}

TEST_CASE("trace defect") {
  CHECK(bergman_trace_defect(1) == 0.5);
  CHECK(bergman_trace_defect(2) == doctest::Approx(0.5 + 1.0 / 18.0).epsilon(1e-15));
  const std::size_t J = 1000000;
  CHECK(std::fabs(bergman_trace_defect(J) - pi * pi / 16.0) <= 1.0 / (8.0 * J) + 1e-12);
  CHECK_THROWS_AS(bergman_trace_defect(0), DomainError);
}
