#include "hankel/hilbert.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hankel/errors.hpp"
#include "hankel/specfun.hpp"

namespace hankel {

namespace {

void require_mass_index(double theta, int k) {
  const int n = hilbert_discrete_count(theta);
  if (k < 0 || k > n)
    throw std::out_of_range("hilbert mass point index " + std::to_string(k) + " outside 0.." + std::to_string(n));
}

}  // namespace

double validate_theta(double theta) {
  if (!std::isfinite(theta)) throw ParameterError("theta must be finite");
  if (theta <= 0.0 && std::floor(theta) == theta)
    throw ParameterError("theta must not be a non-positive integer (theta=" + std::to_string(theta) + ")");
  return theta;
}

double h_theta_entry(double theta, std::size_t j, std::size_t k) {
  const double den = static_cast<double>(j + k) + theta;
  if (den == 0.0) throw PoleError("h_theta_entry: j+k+theta vanishes");
  return 1.0 / den;
}

DenseSymmetric h_theta_matrix(double theta, std::size_t n) {
  validate_theta(theta);
  return DenseSymmetric::from_upper(n, [theta](std::size_t j, std::size_t k) { return h_theta_entry(theta, j, k); });
}

SymTridiagonal hilbert_jacobi(double theta, std::size_t n) {
  validate_theta(theta);
  SymTridiagonal t;
  t.diag.resize(n);
  t.offdiag.resize(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) {
    const double j = static_cast<double>(i);
    t.diag[i] = 2.0 * j * (j + theta) - 0.25 + theta;
    if (i + 1 < n) t.offdiag[i] = -(j + 1.0) * (j + theta);
  }
  return t;
}

int hilbert_discrete_count(double theta) {
  validate_theta(theta);
  if (theta >= 0.5) return -1;
  return static_cast<int>(std::ceil(-0.5 - theta));
}

double hilbert_rho(double theta, double x) {
  validate_theta(theta);
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("hilbert_rho: x must be positive and finite");
  const double log_rho = std::log(2.0 * x * std::tanh(std::numbers::pi * x)) - 2.0 * specfun::log_abs_gamma(theta) +
                         specfun::log_abs_gamma_sq_extended(theta - 0.5, x);
  return std::exp(log_rho);
}

double hilbert_lambda_sq(double theta, int k) {
  require_mass_index(theta, k);
  const double l = theta - 0.5 + k;
  return -l * l;
}

double hilbert_mass(double theta, int k) {
  require_mass_index(theta, k);
  const double g = 2.0 - 2.0 * theta - k;
  const double lin = 1.0 - 2.0 * theta - 2.0 * k;
  const double log_mag = 2.0 * specfun::log_abs_gamma(1.0 - theta) + std::log(std::fabs(lin)) -
                         specfun::log_gamma(k + 1.0) - specfun::log_abs_gamma(g);
  const double sign_g = specfun::gamma_signed(g) > 0.0 ? 1.0 : -1.0;
  return (lin > 0.0 ? 1.0 : -1.0) * sign_g * std::exp(log_mag);
}

HilbertSpectrum hilbert_spectrum_report(double theta) {
  HilbertSpectrum out;
  out.theta = validate_theta(theta);
  out.N = hilbert_discrete_count(theta);
  out.ac_hi = std::numbers::pi;
  if (out.N < 0) return out;
  const double base = std::numbers::pi / specfun::sin_pi(theta);
  for (int k = 0; k <= out.N; ++k) {
    const double v = (k % 2 == 0) ? base : -base;
    bool merged = false;
    for (auto& e : out.eigen) {
      if (e.value == v) {
        ++e.multiplicity;
        merged = true;
      }
    }
    if (!merged) out.eigen.push_back({v, 1});
  }
  return out;
}

BergmanEntry bergman_entries(std::size_t j, std::size_t k) {
  const double r = std::sqrt(static_cast<double>(j + 1) * static_cast<double>(k + 1));
  const double s = static_cast<double>(j + k + 1);
  return {r / (s * s), r / (s * (s + 1.0)), r / (s * s * (s + 1.0))};
}

DenseSymmetric bergman_matrix(std::size_t n) {
  return DenseSymmetric::from_upper(n, [](std::size_t j, std::size_t k) { return bergman_entries(j, k).A; });
}

DenseSymmetric bergman_defect_matrix(std::size_t n) {
  return DenseSymmetric::from_upper(n, [](std::size_t j, std::size_t k) { return bergman_entries(j, k).Z; });
}

double bergman_trace_defect(std::size_t J) {
  if (J < 1) throw DomainError("bergman_trace_defect: J must be at least 1");
  // Smallest terms first, Kahan-compensated.
  double sum = 0.0, comp = 0.0;
  for (std::size_t j = J; j-- > 0;) {
    const double q = 2.0 * static_cast<double>(j) + 1.0;
    const double y = 0.5 / (q * q) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace hankel
