#include "hankel/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>

#include "hankel/cdh.hpp"
#include "hankel/errors.hpp"
#include "hankel/hilbert.hpp"
#include "hankel/spectral.hpp"

namespace hankel {

namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980171450, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for the odd-indexed Kronrod nodes.
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

double checked(const Integrand& f, double x) {
  const double v = f(x);
  if (std::isnan(v)) {
    std::ostringstream os;
    os.precision(17);
    os << "integrand returned NaN at x=" << x;
    throw DomainError(os.str());
  }
  return v;
}

Panel gauss_kronrod(const Integrand& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = checked(f, center);
  double kronrod = fc * kWgk[10];
  double gauss = 0.0;
  for (std::size_t i = 0; i < 10; ++i) {
    const double dx = half * kXgk[i];
    const double pair = checked(f, center - dx) + checked(f, center + dx);
    kronrod += kWgk[i] * pair;
    if (i % 2 == 1) gauss += kWg[i / 2] * pair;
  }
  return {lo, hi, kronrod * half, std::fabs((kronrod - gauss) * half)};
}

double find_upper_limit(const Integrand& envelope, const QuadratureSpec& spec) {
  constexpr double kStep = 0.25;
  constexpr double kLimit = 5000.0;
  constexpr int kDecreasingRun = 4;
  double x = kStep;
  double prev = std::fabs(checked(envelope, x));
  int run = 0;
  while (x < kLimit) {
    x += kStep;
    const double g = std::fabs(checked(envelope, x));
    run = (g <= prev) ? run + 1 : 0;
    prev = g;
    if (run >= kDecreasingRun && g * 2.0 / spec.tail_rate < spec.abs_tol / 10.0) return x;
  }
  throw ConvergenceError("integrate_semiinfinite: envelope never dropped below the tail tolerance", 0.0, kLimit);
}

QuadratureResult integrate_finite(const Integrand& f, double upper, const QuadratureSpec& spec) {
  const auto initial = static_cast<std::size_t>(std::ceil(upper));
  std::vector<Panel> heap;
  heap.reserve(spec.max_panels);
  for (std::size_t i = 0; i < initial; ++i) {
    const double lo = upper * static_cast<double>(i) / initial;
    const double hi = upper * static_cast<double>(i + 1) / initial;
    heap.push_back(gauss_kronrod(f, lo, hi));
  }
  std::make_heap(heap.begin(), heap.end());

  auto totals = [&heap] {
    double v = 0.0, e = 0.0;
    for (const Panel& p : heap) {
      v += p.value;
      e += p.error;
    }
    return std::pair{v, e};
  };
  auto [value, error] = totals();
  while (error > std::max(spec.abs_tol, spec.rel_tol * std::fabs(value))) {
    if (heap.size() >= spec.max_panels)
      throw ConvergenceError("integrate_semiinfinite: panel budget exhausted", 0.0, upper);
    std::pop_heap(heap.begin(), heap.end());
    const Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    heap.push_back(gauss_kronrod(f, worst.lo, mid));
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(gauss_kronrod(f, mid, worst.hi));
    std::push_heap(heap.begin(), heap.end());
    std::tie(value, error) = totals();
  }
  // Deterministic order for the final sum.
  std::sort(heap.begin(), heap.end(), [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  std::tie(value, error) = totals();
  return {value, error, upper, heap.size()};
}

void validate(const QuadratureSpec& spec) {
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) || !(spec.tail_rate > 0.0) || spec.max_panels == 0)
    throw DomainError("QuadratureSpec: tolerances, tail rate and panel budget must be positive");
}

}  // namespace

QuadratureResult integrate_semiinfinite(const Integrand& f, const QuadratureSpec& spec) {
  return integrate_semiinfinite(f, f, spec);
}

QuadratureResult integrate_semiinfinite(const Integrand& f, const Integrand& envelope, const QuadratureSpec& spec) {
  validate(spec);
  const double upper = find_upper_limit(envelope, spec);
  QuadratureResult r = integrate_finite(f, upper, spec);
  r.error_estimate += std::fabs(envelope(upper)) * 2.0 / spec.tail_rate;
  return r;
}

OrthogonalityMeasure OrthogonalityMeasure::for_params(const ParamTriple& p, int max_degree) {
  if (max_degree < 0 || max_degree > 30) throw DomainError("OrthogonalityMeasure: degree must be in 0..30");
  OrthogonalityMeasure mu;
  mu.params_ = p;
  mu.max_degree_ = max_degree;
  mu.jacobi_ = t_matrix(p, static_cast<std::size_t>(max_degree) + 1, true);
  for (const MassPoint& mp : point_spectrum(p)) {
    Atom atom{mp.lambda_sq, mp.mass, phat_mass_point_sequence(p, mp.k, static_cast<std::size_t>(max_degree) + 1)};
    mu.atoms_.push_back(std::move(atom));
  }
  return mu;
}

OrthogonalityMeasure OrthogonalityMeasure::for_hilbert(double theta, int max_degree) {
  if (max_degree < 0 || max_degree > 30) throw DomainError("OrthogonalityMeasure: degree must be in 0..30");
  OrthogonalityMeasure mu;
  mu.theta_ = validate_theta(theta);
  mu.max_degree_ = max_degree;
  mu.jacobi_ = hilbert_jacobi(theta, static_cast<std::size_t>(max_degree) + 1);
  for (int k = 0; k <= hilbert_discrete_count(theta); ++k) {
    Atom atom{hilbert_lambda_sq(theta, k), hilbert_mass(theta, k), {}};
    for (int n = 0; n <= max_degree; ++n) atom.phat.push_back(hilbert_phat_hypergeometric(theta, n, atom.lambda_sq));
    mu.atoms_.push_back(std::move(atom));
  }
  return mu;
}

double OrthogonalityMeasure::density(double x) const {
  return params_ ? density_rho(*params_, x) : hilbert_rho(theta_, x);
}

std::vector<double> OrthogonalityMeasure::phat(double x) const { return phat_recurrence(jacobi_, x * x, max_degree_); }

MomentResult measure_moment(const OrthogonalityMeasure& mu, int m, int n, const QuadratureSpec& spec) {
  if (m < 0 || n < 0 || m > mu.max_degree() || n > mu.max_degree())
    throw DomainError("measure_moment: degree outside the measure's range");
  const auto um = static_cast<std::size_t>(m), un = static_cast<std::size_t>(n);
  const Integrand f = [&](double x) {
    const std::vector<double> ph = mu.phat(x);
    return ph[um] * ph[un] * mu.density(x);
  };
  const Integrand env = [&](double x) {
    const std::vector<double> ph = mu.phat(x);
    return (1.0 + ph[um] * ph[um]) * (1.0 + ph[un] * ph[un]) * mu.density(x);
  };
  const QuadratureResult q = integrate_semiinfinite(f, env, spec);
  double value = q.value;
  for (const auto& atom : mu.atoms()) value += atom.mass * atom.phat[um] * atom.phat[un];
  return {value, q.error_estimate};
}

MomentResult total_mass(const OrthogonalityMeasure& mu, const QuadratureSpec& spec) {
  return measure_moment(mu, 0, 0, spec);
}

std::vector<std::vector<double>> gram_matrix(const OrthogonalityMeasure& mu, int degree, const QuadratureSpec& spec) {
  const auto d = static_cast<std::size_t>(degree) + 1;
  std::vector<std::vector<double>> g(d, std::vector<double>(d));
  for (int m = 0; m <= degree; ++m)
    for (int n = m; n <= degree; ++n) {
      const double v = measure_moment(mu, m, n, spec).value;
      g[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] = v;
      g[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] = v;
    }
  return g;
}

}  // namespace hankel
