#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hankel/errors.hpp"
#include "hankel/quadrature.hpp"

using namespace hankel;
using std::numbers::pi;

TEST_CASE("elementary integrals") {
  QuadratureSpec slow;
  slow.tail_rate = 1.0;
  const auto e = integrate_semiinfinite([](double x) { return std::exp(-x); }, slow);
  CHECK(std::fabs(e.value - 1.0) < 1e-12);
  CHECK(e.error_estimate < 1e-10);

  const auto s = integrate_semiinfinite([](double x) { return pi / std::cosh(pi * x); });
  CHECK(std::fabs(s.value - pi / 2.0) < 1e-12);

  // ∫ x² e^{-πx} = 2/π³, with an explicit envelope.
  const auto m = integrate_semiinfinite([](double x) { return x * x * std::exp(-pi * x); },
                                        [](double x) { return (1.0 + x * x) * std::exp(-pi * x); });
  CHECK(std::fabs(m.value - 2.0 / (pi * pi * pi)) < 1e-12);
  CHECK(m.upper > 0.0);
  CHECK(m.panels >= 1);
}

TEST_CASE("integrable endpoint singularity is never evaluated at zero") {
  // ∫ e^{-πx}/sqrt(x) = 1
  bool touched_zero = false;
  QuadratureSpec spec;
  spec.abs_tol = 1e-9;
  spec.rel_tol = 1e-9;
  const auto r = integrate_semiinfinite(
      [&](double x) {
        if (x == 0.0) touched_zero = true;
        return std::exp(-pi * x) / std::sqrt(x);
      },
      spec);
  CHECK_FALSE(touched_zero);
  CHECK(std::fabs(r.value - 1.0) < 1e-7);
}

TEST_CASE("failures are reported") {
  CHECK_THROWS_AS(integrate_semiinfinite([](double x) { return x > 0.5 ? std::nan("") : std::exp(-x); }),
                  DomainError);
  QuadratureSpec tiny;
  tiny.max_panels = 3;
  CHECK_THROWS_AS(integrate_semiinfinite([](double x) { return std::sin(200.0 * x) * std::exp(-pi * x); }, tiny),
                  ConvergenceError);
  QuadratureSpec bad;
  bad.abs_tol = -1.0;
  CHECK_THROWS_AS(integrate_semiinfinite([](double x) { return std::exp(-x); }, bad), DomainError);
}

TEST_CASE("orthonormality of the normalized polynomials") {
  const ParamTriple corpus[] = {ParamTriple::validate(1, 1, 1), ParamTriple::validate(2, 1.5, 1),
                                ParamTriple::validate(0.5, 1, 2), ParamTriple::validate(0.2, 0.3, 9)};
  auto worst = [](const std::vector<std::vector<double>>& g) {
    double w = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) w = std::max(w, std::fabs(g[i][j] - (i == j ? 1.0 : 0.0)));
    return w;
  };
  for (const ParamTriple& p : corpus) {
    CAPTURE(p.a());
    CHECK(worst(gram_matrix(OrthogonalityMeasure::for_params(p), 8)) <= 1e-8);
    CHECK(std::fabs(total_mass(OrthogonalityMeasure::for_params(p)).value - 1.0) <= 1e-9);
  }
  for (double theta : {1.0, 0.25, -0.7}) {
    CAPTURE(theta);
    CHECK(worst(gram_matrix(OrthogonalityMeasure::for_hilbert(theta), 8)) <= 1e-8);
    CHECK(std::fabs(total_mass(OrthogonalityMeasure::for_hilbert(theta)).value - 1.0) <= 1e-9);
  }
}

TEST_CASE("measure structure") {
  const auto mu = OrthogonalityMeasure::for_params(ParamTriple::validate(0.5, 1, 2), 4);
  CHECK(mu.max_degree() == 4);
  REQUIRE(mu.atoms().size() == 1);
  CHECK(mu.atoms()[0].mass == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(mu.atoms()[0].lambda_sq == -0.0625);
  CHECK(mu.phat(0.7).size() == 5);
  CHECK(mu.density(0.7) == doctest::Approx(0.44224666767690352).epsilon(1e-12));
  CHECK_THROWS_AS(measure_moment(mu, 5, 0), DomainError);
  CHECK_THROWS_AS(OrthogonalityMeasure::for_params(ParamTriple::validate(1, 1, 1), 31), DomainError);
  CHECK(OrthogonalityMeasure::for_hilbert(-0.7).atoms().size() == 2);
  CHECK(OrthogonalityMeasure::for_hilbert(1.0).atoms().empty());
}
