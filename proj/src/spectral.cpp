#include "hankel/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hankel/cdh.hpp"
#include "hankel/errors.hpp"
#include "hankel/specfun.hpp"

namespace hankel {

namespace {

using specfun::log_gamma;

// ln sinh(y) for y > 0 without overflow.
double log_sinh(double y) { return y + std::log(-std::expm1(-2.0 * y)) - std::numbers::ln2; }

void require_mass_index(const ParamTriple& p, int k) {
  if (k < 0 || k >= p.mass_count())
    throw std::out_of_range("mass point index " + std::to_string(k) + " out of range (mass points: " +
                            std::to_string(p.mass_count()) + ")");
}

MassPoint mass_point(const CanonicalTriple& q, int k) {
  const double a = q.a, b = q.b, c = q.c;
  const double kk = static_cast<double>(k);
  MassPoint mp;
  mp.k = k;
  const double l = 0.5 * (a + b - c) + kk;
  mp.lambda_sq = -l * l;
  mp.beta = std::exp(log_gamma(b + kk) + log_gamma(c - a - kk) - log_gamma(b + c - a));

  const double log_pref = log_gamma(c - a) + log_gamma(c - b) - log_gamma(c) - log_gamma(c - a - b);
  const double ratio = specfun::pochhammer(a + b - c, k) * specfun::pochhammer(a, k) * specfun::pochhammer(b, k) /
                       (specfun::pochhammer(a - c + 1.0, k) * specfun::pochhammer(b - c + 1.0, k) *
                        specfun::pochhammer(1.0, k));
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  mp.mass = sign * std::exp(log_pref) * (1.0 + 2.0 * kk / (a + b - c)) * ratio;

  const double log_v = log_gamma(c) + log_gamma(c - a - b - kk + 1.0) + log_gamma(kk + 1.0) -
                       log_gamma(c - a - kk) - log_gamma(c - b - kk);
  mp.v_norm_sq = std::exp(log_v) / ((c - a - b - 2.0 * kk) * specfun::pochhammer(a, k) * specfun::pochhammer(b, k));
  return mp;
}

}  // namespace

double h_eval(const ParamTriple& p, double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("h_eval: x must be finite and >= 0");
  const double two_sigma = p.b() + p.c() - p.a();
  return std::exp(specfun::log_abs_gamma_sq(0.5 * two_sigma, x) - log_gamma(two_sigma));
}

double continuum_g(double ell, double xi) {
  if (!(ell > -1.0) || !std::isfinite(ell) || !std::isfinite(xi))
    throw DomainError("continuum_g: requires finite ell > -1");
  return std::exp(specfun::log_abs_gamma_sq(0.5 * (ell + 1.0), xi) - log_gamma(ell + 1.0));
}

double cap_m(const ParamTriple& p) {
  const double two_sigma = p.b() + p.c() - p.a();
  return std::exp(2.0 * log_gamma(0.5 * two_sigma) - log_gamma(two_sigma));
}

std::vector<MassPoint> point_spectrum(const ParamTriple& p) {
  std::vector<MassPoint> out;
  const CanonicalTriple q = p.canonical();
  for (int k = 0; k < p.mass_count(); ++k) out.push_back(mass_point(q, k));
  return out;
}

double density_rho(const ParamTriple& p, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("density_rho: x must be positive and finite");
  const double a = p.a(), b = p.b(), c = p.c();
  const double pi = std::numbers::pi;
  double log_rho = std::log(x) + log_sinh(2.0 * pi * x) - 2.0 * std::log(pi) - log_gamma(a) - log_gamma(b) -
                   log_gamma(c);
  log_rho += specfun::log_abs_gamma_sq_extended(p.sigma(), x);
  log_rho += specfun::log_abs_gamma_sq_extended(0.5 * (a + c - b), x);
  log_rho += specfun::log_abs_gamma_sq_extended(0.5 * (a + b - c), x);
  return std::exp(log_rho);
}

std::vector<double> eigvec_components(const ParamTriple& p, int k, std::size_t count) {
  require_mass_index(p, k);
  return phat_mass_point_sequence(p, k, count);
}

double eigvec_component(const ParamTriple& p, int k, std::size_t n) {
  require_mass_index(p, k);
  return phat_mass_point_sequence(p, k, n + 1).back();
}

double operator_norm(const ParamTriple& p) {
  if (p.mass_count() == 0) return cap_m(p);
  return mass_point(p.canonical(), 0).beta;
}

SpectralModel spectral_model(const ParamTriple& p) {
  SpectralModel m{p, cap_m(p), point_spectrum(p), 0.0};
  m.norm = m.mass_points.empty() ? m.band_edge : m.mass_points.front().beta;
  return m;
}

}  // namespace hankel
