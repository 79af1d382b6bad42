#include "hankel/cdh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hankel/errors.hpp"
#include "hankel/hilbert.hpp"
#include "hankel/specfun.hpp"

namespace hankel {

namespace {

void guard_degree(int n, int limit, const char* fn) {
  if (n < 0) throw DomainError(std::string(fn) + ": negative degree");
  if (n > limit)
    throw DomainError(std::string(fn) + ": degree " + std::to_string(n) + " exceeds closed-form limit " +
                      std::to_string(limit));
}

// sqrt(Π_{t<n} (b+t)(c+t) / ((a+t)(t+1))), accumulated factor by factor to stay in range.
double cdh_norm_factor(double a, double b, double c, int n) {
  double r = 1.0;
  for (int t = 0; t < n; ++t) r *= std::sqrt(((b + t) / (a + t)) * ((c + t) / (t + 1.0)));
  return r;
}

// Least-squares solution of X β ≈ y by Householder QR; X is rows×cols, column-major.
std::vector<double> least_squares(std::vector<double> x, std::vector<double> y, std::size_t rows,
                                  std::size_t cols) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return x[j * rows + i]; };
  std::vector<double> scale(cols, 1.0);
  for (std::size_t j = 0; j < cols; ++j) {
    double m = 0.0;
    for (std::size_t i = 0; i < rows; ++i) m = std::max(m, std::fabs(at(i, j)));
    if (m > 0.0) {
      scale[j] = m;
      for (std::size_t i = 0; i < rows; ++i) at(i, j) /= m;
    }
  }
  for (std::size_t k = 0; k < cols; ++k) {
    double nrm = 0.0;
    for (std::size_t i = k; i < rows; ++i) nrm += at(i, k) * at(i, k);
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) throw ConvergenceError("least_squares: rank deficient design", 0.0, 0.0);
    const double alpha = at(k, k) > 0.0 ? -nrm : nrm;
    std::vector<double> v(rows - k);
    for (std::size_t i = k; i < rows; ++i) v[i - k] = at(i, k);
    v[0] -= alpha;
    double vv = 0.0;
    for (double e : v) vv += e * e;
    for (std::size_t j = k; j < cols; ++j) {
      double d = 0.0;
      for (std::size_t i = k; i < rows; ++i) d += v[i - k] * at(i, j);
      d *= 2.0 / vv;
      for (std::size_t i = k; i < rows; ++i) at(i, j) -= d * v[i - k];
    }
    double d = 0.0;
    for (std::size_t i = k; i < rows; ++i) d += v[i - k] * y[i];
    d *= 2.0 / vv;
    for (std::size_t i = k; i < rows; ++i) y[i] -= d * v[i - k];
  }
  std::vector<double> beta(cols);
  for (std::size_t k = cols; k-- > 0;) {
    double r = y[k];
    for (std::size_t j = k + 1; j < cols; ++j) r -= at(k, j) * beta[j];
    beta[k] = r / at(k, k);
  }
  for (std::size_t j = 0; j < cols; ++j) beta[j] /= scale[j];
  return beta;
}

// Fits S_J = L - Σ_{m<orders} J^{-σ-m} (c_m cos(x ln J) + d_m sin(x ln J)/x) over J in [lo, hi].
double extrapolate(const std::vector<double>& partial, double sigma, double x, std::size_t lo, std::size_t hi,
                   int orders) {
  std::vector<std::size_t> js;
  for (double j = static_cast<double>(hi); j >= static_cast<double>(lo); j /= std::pow(2.0, 0.125)) {
    const auto J = static_cast<std::size_t>(std::llround(j));
    if (js.empty() || js.back() != J) js.push_back(J);
  }
  const std::size_t cols = 1 + 2 * static_cast<std::size_t>(orders);
  const std::size_t rows = js.size();
  if (rows < 2 * cols) throw DomainError("h_series_limit: too few terms for the tail fit");
  std::vector<double> design(rows * cols), rhs(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const double J = static_cast<double>(js[i]);
    const double lj = std::log(J);
    const double osc_c = std::cos(x * lj);
    const double osc_s = x == 0.0 ? lj : std::sin(x * lj) / x;
    design[i] = 1.0;
    for (int m = 0; m < orders; ++m) {
      const double env = std::pow(J, -sigma - m);
      design[(1 + 2 * static_cast<std::size_t>(m)) * rows + i] = env * osc_c;
      design[(2 + 2 * static_cast<std::size_t>(m)) * rows + i] = env * osc_s;
    }
    rhs[i] = partial[js[i]];
  }
  return least_squares(std::move(design), std::move(rhs), rows, cols)[0];
}

}  // namespace

std::vector<double> phat_recurrence(const SymTridiagonal& t, double s, int max_degree) {
  if (max_degree < 0) throw DomainError("phat_recurrence: negative degree");
  const auto n = static_cast<std::size_t>(max_degree);
  if (n > 0 && t.size() < n + 1) throw DomainError("phat_recurrence: Jacobi matrix too small for requested degree");
  std::vector<double> out(n + 1);
  out[0] = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double e = t.offdiag.size() > k ? t.offdiag[k] : 0.0;
    if (e == 0.0) throw DomainError("phat_recurrence: vanishing off-diagonal at row " + std::to_string(k));
    double r = (s - t.diag[k]) * out[k];
    if (k > 0) r -= t.offdiag[k - 1] * out[k - 1];
    out[k + 1] = r / e;
  }
  return out;
}

std::vector<double> phat_all(const PolyEvalRequest& req) {
  if (!std::isfinite(req.s)) throw DomainError("phat_all: non-finite argument");
  const auto rows = static_cast<std::size_t>(std::max(req.max_degree, 0)) + 1;
  return phat_recurrence(t_matrix(req.p, rows, true), req.s, req.max_degree);
}

double phat_hypergeometric(const ParamTriple& p, int n, double s) {
  guard_degree(n, kClosedFormMaxDegree, "phat_hypergeometric");
  const double f = specfun::hyp3f2_terminating(n, specfun::ConjugatePair{p.sigma(), s}, p.b(), p.c());
  return cdh_norm_factor(p.a(), p.b(), p.c(), n) * f;
}

std::vector<double> phat_mass_point_sequence(const ParamTriple& p, int k, std::size_t count) {
  if (k < 0 || k >= p.mass_count())
    throw std::out_of_range("phat_mass_point: mass point index " + std::to_string(k) + " out of range");
  const CanonicalTriple q = p.canonical();
  const double a = q.a, b = q.b, c = q.c, ak = a + k;
  // (b+k)_m/(b)_m is a degree-k polynomial in m, so the 3F2 splits into k+1
  // Chu–Vandermonde sums: 3F2 = Σ_j w_j (-n)_j (a+k)_{n-j} / (c)_n.
  std::vector<double> w(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    double binom = 1.0;
    for (int i = 0; i < j; ++i) binom = binom * (k - i) / (i + 1.0);
    w[static_cast<std::size_t>(j)] = binom * specfun::pochhammer(b + j, k - j) / specfun::pochhammer(b, k) *
                                     specfun::pochhammer(c - a - k, j);
  }
  std::vector<double> out;
  out.reserve(count);
  double pref = 1.0;  // norm factor times (a+k)_n/(c)_n
  for (std::size_t n = 0; n < count; ++n) {
    if (n > 0) {
      const double t = static_cast<double>(n - 1);
      pref *= std::sqrt(((b + t) / (a + t)) * ((c + t) / (t + 1.0))) * ((ak + t) / (c + t));
    }
    const double nd = static_cast<double>(n);
    double sum = w[0], falling = 1.0, den = 1.0;
    for (int j = 1; j <= k && j <= static_cast<int>(n); ++j) {
      falling *= -(nd - j + 1.0);
      den *= ak + nd - j;
      sum += w[static_cast<std::size_t>(j)] * falling / den;
    }
    out.push_back(pref * sum);
  }
  return out;
}

double phat_mass_point(const ParamTriple& p, int k, int n) {
  guard_degree(n, kClosedFormMaxDegree, "phat_mass_point");
  return phat_mass_point_sequence(p, k, static_cast<std::size_t>(n) + 1).back();
}

double hilbert_phat_hypergeometric(double theta, int n, double s) {
  validate_theta(theta);
  guard_degree(n, kClosedFormMaxDegree, "hilbert_phat_hypergeometric");
  double pref = 1.0;
  for (int t = 0; t < n; ++t) pref *= (theta + t) / (t + 1.0);
  return pref * specfun::hyp3f2_terminating(n, specfun::ConjugatePair{theta - 0.5, s}, theta, theta);
}

double hilbert_phat_wilson(double theta, int n, double s) {
  validate_theta(theta);
  guard_degree(n, 40, "hilbert_phat_wilson");
  const double alpha = -0.25 + 0.5 * theta;
  const double beta = 0.25, gamma = 0.25 + 0.5 * theta, delta = 0.75;
  const double ab = alpha + beta, ag = alpha + gamma, ad = alpha + delta;
  // 4ⁿ (α+β)_n (α+γ)_n (α+δ)_n / (n! (θ)_{2n})
  double pref = 1.0;
  for (int t = 0; t < n; ++t)
    pref *= 4.0 * (ab + t) * (ag + t) * (ad + t) / ((t + 1.0) * (theta + 2.0 * t) * (theta + 2.0 * t + 1.0));
  const double f = specfun::hyp4f3_terminating(n, n + alpha + beta + gamma + delta - 1.0,
                                               specfun::ConjugatePair{alpha, 0.25 * s}, ab, ag, ad);
  return pref * f;
}

double wilson_crosscheck(double theta, int n, double s) {
  guard_degree(n, 40, "wilson_crosscheck");
  const auto rows = static_cast<std::size_t>(n) + 1;
  const double rec = phat_recurrence(hilbert_jacobi(theta, rows), s, n).back();
  return std::fabs(rec - hilbert_phat_wilson(theta, n, s));
}

std::vector<double> h_series_partials(const ParamTriple& p, double x, std::size_t J) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("h_series: x must be finite and >= 0");
  const std::vector<double> phat = phat_recurrence(t_matrix(p, J + 1, true), x * x, static_cast<int>(J));
  const double lw0 = log_weight(p, 0);
  std::vector<double> out(J + 1);
  double sum = 0.0, comp = 0.0;
  for (std::size_t j = 0; j <= J; ++j) {
    const double b0j = std::exp(log_hankel_symbol(p, static_cast<double>(j)) + (lw0 + log_weight(p, j)));
    // Kahan summation keeps the partial sums clean for the tail fit.
    const double y = b0j * phat[j] - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    out[j] = sum;
  }
  return out;
}

double h_series_partial(const ParamTriple& p, double x, std::size_t J) { return h_series_partials(p, x, J).back(); }

SeriesLimit h_series_limit(const ParamTriple& p, double x, std::size_t max_terms) {
  if (max_terms < 4096) throw DomainError("h_series_limit: max_terms must be at least 4096");
  const std::vector<double> partial = h_series_partials(p, x, max_terms);
  const double sigma = p.sigma();
  const double wide = extrapolate(partial, sigma, x, max_terms / 1024, max_terms, 4);
  const double narrow = extrapolate(partial, sigma, x, max_terms / 256, max_terms, 3);
  return {wide, std::fabs(wide - narrow), max_terms + 1};
}

}  // namespace hankel
