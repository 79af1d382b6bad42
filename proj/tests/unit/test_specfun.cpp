#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hankel/errors.hpp"
#include "hankel/specfun.hpp"

#ifdef HANKEL_HAVE_BOOST_MP
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#endif

using namespace hankel::specfun;
using hankel::DomainError;
using hankel::PoleError;
using std::numbers::pi;

namespace {

// Values computed once with mpmath at 50 digits.
struct Pt {
  double t, value;
};
constexpr Pt kLogGamma[] = {
    {1e-3, 6.9071788853838534},      {0.1, 2.252712651734206},        {0.5, 0.57236494292470008},
    {1.5, -0.12078223763524522},     {2.5, 0.28468287047291918},      {7.3, 7.1478925230222492},
    {10.7, 14.403210596298518},      {33.3, 82.603723581654947},      {171.5, 709.14316303092824},
    {1000.25, 5906.9472682711175},   {9999.5, 82095.112363757638},
};
constexpr Pt kGamma[] = {
    {-0.5, -3.5449077018110322}, {-1.5, 2.3632718012073548}, {-2.3, -1.4471073942559172},
    {0.3, 2.9915689876875908},   {5.5, 52.342777784553519},  {-7.7, 0.00018207416684152617},
};
struct GsqPt {
  double u, x, value;
};
constexpr GsqPt kLogAbsGammaSq[] = {
    {0.3, 2.7, -7.0397567704855222},  {0.75, 0.1, 0.3813059398820639}, {1.25, 10, -26.123390529833546},
    {2.5, 40, -109.06874976077593},   {0.05, 0.5, 0.96421104706593941}, {3, 0, 1.3862943611198906},
};

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

// ln|Γ(u+ix)|² - 2 ln Γ(u) = -Σ_k ln(1 + x²/(u+k)²), with an Euler–Maclaurin tail.
double euler_product_log_ratio(double u, double x) {
  constexpr int K = 1000000;
  double sum = 0.0, comp = 0.0;
  for (int k = K - 1; k >= 0; --k) {
    const double term = std::log1p(x * x / ((u + k) * (u + k)));
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const double z = u + K;
  const double tail = x * x * (1.0 / z + 0.5 / (z * z) + 1.0 / (6.0 * z * z * z));
  return -(sum + tail);
}

}  // namespace

TEST_CASE("log_gamma matches reference values") {
  for (const Pt& p : kLogGamma) {
    CAPTURE(p.t);
    CHECK(std::fabs(log_gamma(p.t) - p.value) <= 1e-13 * std::max(1.0, std::fabs(p.value)));
  }
  CHECK(std::fabs(log_gamma(1.0)) < 1e-15);
  CHECK(std::fabs(log_gamma(2.0)) < 1e-15);
}

#ifdef HANKEL_HAVE_BOOST_MP
TEST_CASE("log_gamma agrees with a 50-digit oracle on a dense grid") {
  using Big = boost::multiprecision::cpp_bin_float_50;
  double worst = 0.0;
  for (double t = 0.013; t < 1e4; t *= 1.37) {
    const double ref = static_cast<double>(boost::math::lgamma(Big(t)));
    worst = std::max(worst, std::fabs(log_gamma(t) - ref) / std::max(1.0, std::fabs(ref)));
  }
  CHECK(worst < 1e-13);
}
#endif

TEST_CASE("log_gamma rejects its domain boundary") {
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
  CHECK_THROWS_AS(log_gamma(std::nan("")), DomainError);
  CHECK_THROWS_AS(log_gamma(INFINITY), DomainError);
}

TEST_CASE("gamma_signed: values, reflection and poles") {
  for (const Pt& p : kGamma) {
    CAPTURE(p.t);
    CHECK(rel(gamma_signed(p.t), p.value) < 1e-13);
  }
  CHECK(rel(gamma_signed(0.5), std::sqrt(pi)) < 1e-14);
  CHECK(gamma_signed(6.0) == doctest::Approx(120.0).epsilon(1e-14));
  CHECK_THROWS_AS(gamma_signed(0.0), PoleError);
  CHECK_THROWS_AS(gamma_signed(-3.0), PoleError);
  CHECK_THROWS_AS(gamma_signed(200.0), hankel::OverflowError);
  CHECK(rel(std::exp(log_abs_gamma(-2.3)), 1.4471073942559172) < 1e-13);
}

TEST_CASE("sin_pi is exact at integers and half integers") {
  CHECK(sin_pi(3.0) == 0.0);
  CHECK(sin_pi(-7.0) == 0.0);
  CHECK(sin_pi(0.5) == 1.0);
  CHECK(sin_pi(1.5) == -1.0);
  CHECK(sin_pi(0.25) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(sin_pi(1e6 + 0.25) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("|Gamma(u+ix)|^2 against reference values and closed forms") {
  for (const GsqPt& p : kLogAbsGammaSq) {
    CAPTURE(p.u);
    CAPTURE(p.x);
    CHECK(std::fabs(log_abs_gamma_sq(p.u, p.x) - p.value) <= 1e-13 * std::max(1.0, std::fabs(p.value)));
  }
  for (double x : {0.0, 0.3, 1.0, 2.0, 7.5}) {
    CAPTURE(x);
    CHECK(rel(abs_gamma_sq(0.5, x), pi / std::cosh(pi * x)) < 1e-13);
    if (x > 0) CHECK(rel(abs_gamma_sq(1.0, x), pi * x / std::sinh(pi * x)) < 1e-13);
  }
  CHECK(rel(abs_gamma_sq(0.5, 1.0), 0.27101495139941834) < 1e-13);
}

TEST_CASE("|Gamma(u+ix)|^2 against an Euler-product oracle") {
  for (double u : {0.2, 0.9, 2.3})
    for (double x : {0.4, 1.7, 3.0}) {
      CAPTURE(u);
      CAPTURE(x);
      const double expect = 2.0 * log_gamma(u) + euler_product_log_ratio(u, x);
      CHECK(std::fabs(log_abs_gamma_sq(u, x) - expect) < 1e-11);
    }
}

TEST_CASE("abs_gamma_sq underflow is reported, extended version handles u <= 0") {
  const GammaSq g = abs_gamma_sq_checked(0.5, 300.0);
  CHECK(g.underflow);
  CHECK(g.value == 0.0);
  CHECK_FALSE(abs_gamma_sq_checked(0.5, 3.0).underflow);
  // |Γ(-1/2+ix)|² = |Γ(1/2+ix)|² / (1/4 + x²)
  CHECK(std::fabs(log_abs_gamma_sq_extended(-0.5, 1.3) - (std::log(pi / std::cosh(pi * 1.3)) - std::log(0.25 + 1.69))) <
        1e-13);
  CHECK_THROWS_AS(log_abs_gamma_sq_extended(-2.0, 0.0), PoleError);
  CHECK_NOTHROW(log_abs_gamma_sq_extended(-2.0, 0.1));
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3.0, 0) == 1.0);
  CHECK(pochhammer(1.0, 5) == 120.0);
  CHECK(pochhammer(-2.5, 3) == doctest::Approx(-2.5 * -1.5 * -0.5));
  CHECK(pochhammer(-2.0, 3) == 0.0);
}

TEST_CASE("terminating 3F2 against reference values") {
  struct C {
    int n;
    double p1, p2, q1, q2, value;
  };
  constexpr C cases[] = {
      {5, 0.3, 1.7, 0.9, 2.2, 0.49335457643460356},
      {20, 0.5, 2.5, 1.5, 3.25, 0.2317202112370581},
      {40, 1.25, 0.75, 1, 2, 0.041210396278249045},
      {60, 0.5, 0.5, 1, 1, 0.2040730960699656},
  };
  for (const C& c : cases) {
    CAPTURE(c.n);
    CHECK(std::fabs(hyp3f2_terminating(c.n, c.p1, c.p2, c.q1, c.q2) - c.value) < 1e-13);
  }
  CHECK(hyp3f2_terminating(0, 0.3, 0.4, 0.5, 0.6) == 1.0);
  CHECK_THROWS_AS(hyp3f2_terminating(4, 1.0, 1.0, -2.0, 1.0), PoleError);
}

TEST_CASE("terminating 3F2 with a conjugate numerator pair") {
  CHECK(std::fabs(hyp3f2_terminating(8, ConjugatePair{0.75, 0.49}, 1, 2) - -0.026425409650605414) < 1e-14);
  CHECK(std::fabs(hyp3f2_terminating(30, ConjugatePair{0.5, 4}, 1, 1) - -0.66527077329524165) < 1e-12);
  CHECK(hyp3f2_terminating(12, ConjugatePair{0.25, -0.0625}, 0.5, 1.5) == 1.0);
  // Pair with s = y² equal to the real form with p1, p2 = re ± i y when y is imaginary.
  CHECK(hyp3f2_terminating(7, ConjugatePair{1.0, -0.09}, 1.1, 2.4) ==
        doctest::Approx(hyp3f2_terminating(7, 1.3, 0.7, 1.1, 2.4)).epsilon(1e-14));
}

TEST_CASE("terminating 4F3 against reference values") {
  CHECK(std::fabs(hyp4f3_terminating(6, 0.3, 1.1, 2.2, 0.7, 1.9, 3.1) - 0.54301674533540778) < 1e-14);
  CHECK(std::fabs(hyp4f3_terminating(10, -0.25, 0.25, 0.75, 0.125, 0.25, 0.625) - 6.0956665979114009) < 1e-12);
  CHECK(hyp4f3_terminating(5, -0.4, ConjugatePair{1.0, -0.16}, 0.7, 1.9, 3.1) ==
        doctest::Approx(hyp4f3_terminating(5, -0.4, 1.4, 0.6, 0.7, 1.9, 3.1)).epsilon(1e-14));
}
