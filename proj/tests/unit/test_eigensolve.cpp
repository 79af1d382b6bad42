#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hankel/eigensolve.hpp"
#include "hankel/hilbert.hpp"
#include "hankel/operators.hpp"

using namespace hankel;
using std::numbers::pi;

namespace {

// det(H_4 - λI) in long double by cofactor-free Gaussian elimination with pivoting.
long double char_poly_h4(long double lambda) {
  long double m[4][4];
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) m[j][k] = 1.0L / (j + k + 1) - (j == k ? lambda : 0.0L);
  long double det = 1.0L;
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
    if (piv != c) {
      for (int k = 0; k < 4; ++k) std::swap(m[c][k], m[piv][k]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < 4; ++r) {
      const long double f = m[r][c] / m[c][c];
      for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

SymTridiagonal second_difference(std::size_t n) {
  return {std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0)};
}

}  // namespace

TEST_CASE("4x4 Hilbert eigenvalues are roots of the characteristic polynomial") {
  const auto r = dense_eigen(h_theta_matrix(1.0, 4), Selection::all());
  REQUIRE(r.values.size() == 4);
  for (double v : r.values) {
    CAPTURE(v);
    // The polynomial changes sign across every computed root; the bracket is
    // four times the bisection tolerance 1e-12·‖H‖∞.
    const long double d = 4e-12L * 25.0L / 12.0L;
    CHECK(char_poly_h4(v - d) * char_poly_h4(v + d) < 0.0L);
  }
  CHECK(r.values[3] == doctest::Approx(1.5002142800592428).epsilon(2e-12));
  CHECK(r.values[0] == doctest::Approx(9.670230402258689e-05).epsilon(1e-7));
}

TEST_CASE("second-difference matrix has cosine eigenvalues") {
  const std::size_t n = 50;
  const auto r = tridiag_eigen(second_difference(n), Selection::all());
  REQUIRE(r.values.size() == n);
  for (std::size_t k = 1; k <= n; ++k)
    CHECK(std::fabs(r.values[k - 1] - (2.0 - 2.0 * std::cos(k * pi / (n + 1)))) < 4e-12);
}

TEST_CASE("Sturm count") {
  const auto t = second_difference(10);
  CHECK(sturm_count(t, -1.0) == 0);
  CHECK(sturm_count(t, 5.0) == 10);
  CHECK(sturm_count(t, 2.0 - 2.0 * std::cos(3.5 * pi / 11)) == 3);
}

TEST_CASE("selections") {
  const auto t = second_difference(20);
  const auto all = tridiag_eigen(t, Selection::all()).values;
  const auto top = tridiag_eigen(t, Selection::top(3)).values;
  const auto bottom = tridiag_eigen(t, Selection::bottom(2)).values;
  REQUIRE(top.size() == 3);
  REQUIRE(bottom.size() == 2);
  CHECK(top[2] == all[19]);
  CHECK(top[0] == all[17]);
  CHECK(bottom[0] == all[0]);
  const auto window = tridiag_eigen(t, Selection::window(1.0, 3.0)).values;
  for (double v : window) CHECK((v >= 1.0 && v < 3.0));
  CHECK(window.size() == sturm_count(t, 3.0) - sturm_count(t, 1.0));
  CHECK(tridiag_eigen(t, Selection::top(100)).values.size() == 20);
}

TEST_CASE("dense eigenpairs of a random symmetric matrix") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = 60;
  const auto m = DenseSymmetric::from_upper(n, [&](std::size_t, std::size_t) { return u(rng); });
  EigenOptions opt;
  opt.vectors = true;
  const auto r = dense_eigen(m, Selection::all(), opt);
  REQUIRE(r.vectors.has_value());
  double trace = 0.0, frob = 0.0, sum = 0.0, sum_sq = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    trace += m(j, j);
    for (std::size_t k = 0; k < n; ++k) frob += m(j, k) * m(j, k);
  }
  for (double v : r.values) {
    sum += v;
    sum_sq += v * v;
  }
  CHECK(std::fabs(sum - trace) < 1e-10);
  CHECK(sum_sq == doctest::Approx(frob).epsilon(1e-11));
  CHECK(r.residual_bound < 1e-10);
  const auto& vec = *r.vectors;
  for (std::size_t i = 0; i < n; i += 7)
    for (std::size_t j = i; j < n; j += 5) {
      double d = 0.0;
      for (std::size_t k = 0; k < n; ++k) d += vec[i][k] * vec[j][k];
      CHECK(std::fabs(d - (i == j ? 1.0 : 0.0)) < 1e-10);
    }
}

TEST_CASE("Householder reduction preserves the spectrum and Q is orthogonal") {
  const auto m = b_matrix(ParamTriple::validate(0.5, 1, 2), 30);
  const auto tri = householder_tridiagonalize(m);
  const auto dense = dense_eigen(m, Selection::all()).values;
  const auto reduced = tridiag_eigen(tri.t, Selection::all()).values;
  for (std::size_t i = 0; i < dense.size(); ++i) CHECK(std::fabs(dense[i] - reduced[i]) < 2e-12 * m.inf_norm());
  std::vector<double> e(30, 0.0);
  e[4] = 1.0;
  tri.apply_q(e);
  double norm = 0.0;
  for (double x : e) norm += x * x;
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("degenerate inputs") {
  CHECK(tridiag_eigen(SymTridiagonal{}, Selection::all()).values.empty());
  const auto one = tridiag_eigen(SymTridiagonal{{3.5}, {}}, Selection::all());
  REQUIRE(one.values.size() == 1);
  CHECK(one.values[0] == doctest::Approx(3.5).epsilon(1e-12));
  // Repeated eigenvalues from a split tridiagonal.
  const auto split = tridiag_eigen(SymTridiagonal{{1, 1, 1}, {0, 0}}, Selection::all());
  for (double v : split.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}
