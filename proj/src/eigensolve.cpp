#include "hankel/eigensolve.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdint>

#include "hankel/errors.hpp"
#include "hankel/kernels.hpp"

namespace hankel {

namespace {

constexpr int kMaxRestarts = 5;
constexpr int kInverseIterations = 3;
constexpr double kClusterTolerance = 1e-3;  // relative to ‖T‖∞, as in LAPACK's stein

struct Bounds {
  double lo;
  double hi;
};

Bounds gershgorin(const SymTridiagonal& t) {
  const std::size_t n = t.size();
  Bounds b{t.diag[0], t.diag[0]};
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::fabs(t.offdiag[i - 1]);
    if (i + 1 < n) r += std::fabs(t.offdiag[i]);
    b.lo = std::min(b.lo, t.diag[i] - r);
    b.hi = std::max(b.hi, t.diag[i] + r);
  }
  const double pad = 2.0 * DBL_EPSILON * std::max(std::fabs(b.lo), std::fabs(b.hi)) + DBL_MIN;
  return {b.lo - pad, b.hi + pad};
}

double pivot_floor(const SymTridiagonal& t) {
  double emax = 1.0;
  for (double e : t.offdiag) emax = std::max(emax, e * e);
  return DBL_MIN * emax;
}

std::size_t sturm_count_impl(const SymTridiagonal& t, double x, double pivmin) {
  std::size_t count = 0;
  double q = t.diag[0] - x;
  if (std::fabs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double e = t.offdiag[i - 1];
    q = (t.diag[i] - x) - e * e / q;
    if (std::fabs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

double bisect(const SymTridiagonal& t, std::size_t index, Bounds b, double tol, double pivmin) {
  double lo = b.lo, hi = b.hi;
  for (int it = 0; it < 4000 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // floating-point resolution reached
    if (sturm_count_impl(t, mid, pivmin) > index) hi = mid;
    else lo = mid;
  }
  if (hi - lo > tol && hi - lo > 4.0 * DBL_EPSILON * std::max(std::fabs(lo), std::fabs(hi)))
    throw ConvergenceError("bisection did not reach tolerance", lo, hi);
  return 0.5 * (lo + hi);
}

// Gaussian elimination with partial pivoting for (T - λI), LAPACK gttrf layout.
struct TridiagonalLu {
  std::vector<double> dl, d, du, du2;
  std::vector<std::uint8_t> swapped;

  TridiagonalLu(const SymTridiagonal& t, double lambda, double tiny) {
    const std::size_t n = t.size();
    d.resize(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = t.diag[i] - lambda;
    dl = t.offdiag;
    du = t.offdiag;
    du2.assign(n > 1 ? n - 1 : 0, 0.0);
    swapped.assign(n > 1 ? n - 1 : 0, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::fabs(d[i]) >= std::fabs(dl[i])) {
        if (d[i] == 0.0) d[i] = tiny;
        const double fact = dl[i] / d[i];
        dl[i] = fact;
        d[i + 1] -= fact * du[i];
      } else {
        const double fact = d[i] / dl[i];
        d[i] = dl[i];
        dl[i] = fact;
        const double temp = du[i];
        du[i] = d[i + 1];
        d[i + 1] = temp - fact * d[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -fact * du[i + 1];
        }
        swapped[i] = 1;
      }
    }
    for (double& v : d)
      if (std::fabs(v) < tiny) v = std::copysign(tiny, v == 0.0 ? 1.0 : v);
  }

  void solve(std::vector<double>& b) const {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!swapped[i]) {
        b[i + 1] -= dl[i] * b[i];
      } else {
        const double temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl[i] * b[i];
      }
    }
    b[n - 1] /= d[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (std::size_t i = n - 2; i-- > 0;) b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
  }
};

double normalize(std::vector<double>& x) {
  const double nrm = std::sqrt(kernels::dot(x, x));
  if (nrm > 0.0)
    for (double& v : x) v /= nrm;
  return nrm;
}

void orthogonalize(std::vector<double>& x, const std::vector<std::vector<double>>& basis, std::size_t first,
                   std::size_t last) {
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t i = first; i < last; ++i) kernels::axpy(-kernels::dot(basis[i], x), basis[i], x);
}

double tridiag_residual(const SymTridiagonal& t, const std::vector<double>& x, double lambda) {
  const std::size_t n = t.size();
  double sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = (t.diag[i] - lambda) * x[i];
    if (i > 0) r += t.offdiag[i - 1] * x[i - 1];
    if (i + 1 < n) r += t.offdiag[i] * x[i + 1];
    sq += r * r;
  }
  return std::sqrt(sq);
}

std::vector<double> start_vector(std::size_t n, std::uint64_t seed) {
  std::vector<double> x(n);
  std::uint64_t s = seed * 0x9E3779B97F4A7C15ull + 1;
  for (double& v : x) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    v = 0.5 + static_cast<double>(s >> 11) * (1.0 / 9007199254740992.0);
  }
  return x;
}

std::vector<std::vector<double>> inverse_iteration(const SymTridiagonal& t, const std::vector<double>& values,
                                                   double norm) {
  const std::size_t n = t.size();
  const double scale = std::max(norm, DBL_MIN);
  const double tiny = DBL_EPSILON * scale;
  const double accept = 1e-9 * scale;
  std::vector<std::vector<double>> vecs;
  vecs.reserve(values.size());
  std::size_t cluster_start = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0 && values[i] - values[i - 1] > kClusterTolerance * scale) cluster_start = i;
    std::vector<double> x;
    bool ok = false;
    for (int restart = 0; restart <= kMaxRestarts && !ok; ++restart) {
      const double shift = values[i] + restart * 10.0 * tiny * (restart % 2 == 0 ? 1.0 : -1.0);
      const TridiagonalLu lu(t, shift, tiny);
      x = start_vector(n, i * 31 + static_cast<std::size_t>(restart));
      for (int it = 0; it < kInverseIterations; ++it) {
        lu.solve(x);
        orthogonalize(x, vecs, cluster_start, i);
        if (normalize(x) == 0.0) break;
      }
      ok = tridiag_residual(t, x, values[i]) <= accept;
    }
    if (!ok) throw ConvergenceError("inverse iteration failed for eigenvalue", values[i], values[i]);
    vecs.push_back(std::move(x));
  }
  return vecs;
}

}  // namespace

std::size_t sturm_count(const SymTridiagonal& t, double x) {
  if (t.size() == 0) return 0;
  return sturm_count_impl(t, x, pivot_floor(t));
}

EigenResult tridiag_eigen(const SymTridiagonal& t, Selection which, EigenOptions options) {
  const std::size_t n = t.size();
  EigenResult out;
  if (n == 0) return out;
  const double norm = t.inf_norm();
  const double tol = std::max(options.relative_tolerance * norm, DBL_MIN);
  const double pivmin = pivot_floor(t);
  const Bounds b = gershgorin(t);

  std::size_t first = 0, last = n;
  switch (which.kind) {
    case Selection::Kind::All: break;
    case Selection::Kind::Top: first = n - std::min(which.count, n); break;
    case Selection::Kind::Bottom: last = std::min(which.count, n); break;
    case Selection::Kind::Window:
      first = sturm_count_impl(t, which.lo, pivmin);
      last = std::max(first, sturm_count_impl(t, which.hi, pivmin));
      break;
  }
  out.values.reserve(last - first);
  for (std::size_t i = first; i < last; ++i) out.values.push_back(bisect(t, i, b, tol, pivmin));
  std::sort(out.values.begin(), out.values.end());
  out.residual_bound = tol;

  if (options.vectors) {
    auto vecs = inverse_iteration(t, out.values, norm);
    double worst = 0.0;
    for (std::size_t i = 0; i < vecs.size(); ++i) worst = std::max(worst, tridiag_residual(t, vecs[i], out.values[i]));
    out.residual_bound = worst;
    out.vectors = std::move(vecs);
  }
  return out;
}

Tridiagonalization householder_tridiagonalize(const DenseSymmetric& m) {
  const std::size_t n = m.size();
  std::vector<double> a(m.data().begin(), m.data().end());
  Tridiagonalization out;
  out.t.diag.resize(n);
  out.t.offdiag.resize(n > 0 ? n - 1 : 0);
  std::vector<double> p, w;

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t len = n - k - 1;
    std::vector<double> v(len);
    for (std::size_t i = 0; i < len; ++i) v[i] = a[(k + 1 + i) * n + k];
    const double xnorm = std::sqrt(kernels::dot(v, v));
    double alpha = 0.0, beta = 0.0;
    if (xnorm > 0.0) {
      alpha = v[0] > 0.0 ? -xnorm : xnorm;
      v[0] -= alpha;
      beta = 2.0 / kernels::dot(v, v);
    }
    out.t.diag[k] = a[k * n + k];
    out.t.offdiag[k] = xnorm > 0.0 ? alpha : v[0];

    if (beta != 0.0) {
      // S ← H S H with H = I - β v vᵀ, via p = β S v, w = p - (β/2)(pᵀv) v, S -= v wᵀ + w vᵀ.
      double* s = a.data() + (k + 1) * n + (k + 1);
      p.assign(len, 0.0);
      kernels::active().gemv(s, n, len, len, v.data(), p.data());
      for (double& x : p) x *= beta;
      const double kappa = 0.5 * beta * kernels::dot(p, v);
      w = p;
      kernels::axpy(-kappa, v, w);
      for (std::size_t i = 0; i < len; ++i)
        kernels::active().axpy2(-v[i], w.data(), -w[i], v.data(), s + i * n, len);
    }
    out.reflectors.push_back(std::move(v));
    out.betas.push_back(beta);
  }
  if (n >= 2) {
    out.t.diag[n - 2] = a[(n - 2) * n + (n - 2)];
    out.t.offdiag[n - 2] = a[(n - 1) * n + (n - 2)];
  }
  if (n >= 1) out.t.diag[n - 1] = a[(n - 1) * n + (n - 1)];
  return out;
}

void Tridiagonalization::apply_q(std::vector<double>& x) const {
  for (std::size_t k = reflectors.size(); k-- > 0;) {
    if (betas[k] == 0.0) continue;
    const std::vector<double>& v = reflectors[k];
    std::span<double> tail(x.data() + k + 1, v.size());
    kernels::axpy(-betas[k] * kernels::dot(v, tail), v, tail);
  }
}

EigenResult dense_eigen(const DenseSymmetric& m, Selection which, EigenOptions options) {
  const std::size_t n = m.size();
  const double scale = m.max_abs();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      if (std::fabs(m(j, k) - m(k, j)) > 1e-12 * scale)
        throw DomainError("dense_eigen: matrix is not symmetric");

  const Tridiagonalization tri = householder_tridiagonalize(m);
  EigenResult out = tridiag_eigen(tri.t, which, options);
  if (out.vectors) {
    double worst = 0.0;
    for (std::size_t i = 0; i < out.vectors->size(); ++i) {
      std::vector<double>& v = (*out.vectors)[i];
      tri.apply_q(v);
      std::vector<double> r = multiply(m, v);
      kernels::axpy(-out.values[i], v, r);
      worst = std::max(worst, std::sqrt(kernels::dot(r, r)));
    }
    out.residual_bound = worst;
  }
  return out;
}

}  // namespace hankel
