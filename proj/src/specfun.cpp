#include "hankel/specfun.hpp"

#include <array>
#include <cfloat>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "hankel/detail/double_double.hpp"
#include "hankel/errors.hpp"

namespace hankel::specfun {

namespace {

using detail::DoubleDouble;

constexpr double kEulerGamma = 0.5772156649015328606065121;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

// ζ(k) for k = 2..53. Feeds the Taylor series of ln Γ(1+z).
constexpr std::array<double, 52> kZeta = {
    1.6449340668482264365, 1.2020569031595942854, 1.0823232337111381915,
    1.0369277551433699263, 1.0173430619844491397, 1.0083492773819228268,
    1.0040773561979443394, 1.0020083928260822144, 1.0009945751278180853,
    1.0004941886041194646, 1.0002460865533080483, 1.0001227133475784891,
    1.0000612481350587048, 1.0000305882363070205, 1.0000152822594086519,
    1.0000076371976378998, 1.0000038172932649998, 1.0000019082127165539,
    1.0000009539620338728, 1.0000004769329867878, 1.0000002384505027277,
    1.0000001192199259653, 1.0000000596081890513, 1.0000000298035035147,
    1.0000000149015548284, 1.0000000074507117898, 1.0000000037253340248,
    1.0000000018626597235, 1.0000000009313274324, 1.0000000004656629065,
    1.0000000002328311834, 1.0000000001164155017, 1.0000000000582077209,
    1.0000000000291038504, 1.0000000000145519219, 1.0000000000072759598,
    1.0000000000036379795, 1.0000000000018189897, 1.0000000000009094948,
    1.0000000000004547474, 1.0000000000002273737, 1.0000000000001136868,
    1.0000000000000568434, 1.0000000000000284217, 1.0000000000000142109,
    1.0000000000000071054, 1.0000000000000035527, 1.0000000000000017764,
    1.0000000000000008882, 1.0000000000000004441, 1.000000000000000222,
    1.000000000000000111,
};

// B_{2k} / (2k (2k-1)), k = 1..8.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,       -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,     -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0,
};

constexpr double kStirlingThreshold = 15.0;

// ln Γ(1+z) for |z| <= 1/2:  -γz + Σ_{k>=2} (-1)^k ζ(k) z^k / k.
double log_gamma_1p_series(double z) {
  double acc = 0.0;
  for (int k = static_cast<int>(kZeta.size()) + 1; k >= 2; --k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    acc = acc * z + sign * kZeta[static_cast<std::size_t>(k - 2)] / k;
  }
  // acc now holds Σ c_k z^{k-2}; finish the Horner chain down to z^1.
  return z * (-kEulerGamma + z * acc);
}

double stirling_log_gamma(double t) {
  const double inv = 1.0 / t;
  const double inv2 = inv * inv;
  double series = 0.0;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) series = series * inv2 + *it;
  return (t - 0.5) * std::log(t) - t + kHalfLog2Pi + series * inv;
}

std::complex<double> stirling_log_gamma(std::complex<double> z) {
  const std::complex<double> inv = 1.0 / z;
  const std::complex<double> inv2 = inv * inv;
  std::complex<double> series = 0.0;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) series = series * inv2 + *it;
  return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + series * inv;
}

[[noreturn]] void throw_domain(const char* fn, double t) {
  throw DomainError(std::string(fn) + ": argument out of domain: " + std::to_string(t));
}

bool is_nonpositive_integer(double t) { return t <= 0.0 && std::floor(t) == t; }

// term_{m+1} = term_m * (m-n) * numerator(m) / ((q_1+m)...(q_k+m) (m+1))
template <class Numerator, std::size_t K>
double terminating_sum(int n, Numerator numerator, const std::array<double, K>& denominators) {
  if (n < 0) throw DomainError("terminating hypergeometric sum: negative degree");
  DoubleDouble term(1.0);
  DoubleDouble sum(1.0);
  for (int m = 0; m < n; ++m) {
    DoubleDouble den(static_cast<double>(m + 1));
    for (double q : denominators) {
      const DoubleDouble qm = detail::two_sum(q, static_cast<double>(m));
      if (detail::is_zero(qm)) {
        throw PoleError("terminating hypergeometric sum: denominator Pochhammer vanishes at m=" +
                        std::to_string(m));
      }
      den = den * qm;
    }
    term = term * (DoubleDouble(static_cast<double>(m - n)) * numerator(m)) / den;
    sum = sum + term;
  }
  return sum.to_double();
}

DoubleDouble real_factor(double p, int m) { return detail::two_sum(p, static_cast<double>(m)); }

DoubleDouble pair_factor(ConjugatePair p, int m) {
  const DoubleDouble x = detail::two_sum(p.re, static_cast<double>(m));
  return x * x + DoubleDouble(p.s);
}

}  // namespace

double log_gamma(double t) {
  if (!std::isfinite(t) || t <= 0.0) throw_domain("log_gamma", t);
  if (t < 0.5) return log_gamma_1p_series(t) - std::log(t);
  if (t <= 1.5) return log_gamma_1p_series(t - 1.0);
  if (t <= 2.5) {
    const double z = t - 2.0;
    return std::log1p(z) + log_gamma_1p_series(z);
  }
  if (t < kStirlingThreshold) {
    // Γ(t) = (t-1)(t-2)...(r) Γ(r) with r in (1.5, 2.5].
    double prod = 1.0;
    double r = t;
    while (r > 2.5) {
      r -= 1.0;
      prod *= r;
    }
    const double z = r - 2.0;
    return std::log(prod) + std::log1p(z) + log_gamma_1p_series(z);
  }
  return stirling_log_gamma(t);
}

double sin_pi(double t) {
  if (!std::isfinite(t)) throw_domain("sin_pi", t);
  double r = t - 2.0 * std::round(0.5 * t);  // r in [-1, 1]
  if (r > 0.5) r = 1.0 - r;
  else if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

double log_abs_gamma(double t) {
  if (!std::isfinite(t)) throw_domain("log_abs_gamma", t);
  if (t > 0.0) return log_gamma(t);
  if (is_nonpositive_integer(t)) throw PoleError("log_abs_gamma: pole at " + std::to_string(t));
  return std::log(std::numbers::pi) - std::log(std::fabs(sin_pi(t))) - log_gamma(1.0 - t);
}

double gamma_signed(double t) {
  if (!std::isfinite(t)) throw_domain("gamma_signed", t);
  if (is_nonpositive_integer(t)) throw PoleError("gamma_signed: pole at " + std::to_string(t));
  const double log_abs = log_abs_gamma(t);
  if (log_abs > std::log(DBL_MAX)) throw OverflowError("gamma_signed: |Γ(t)| overflows at t=" + std::to_string(t));
  const double sign = (t > 0.0 || sin_pi(t) > 0.0) ? 1.0 : -1.0;
  return sign * std::exp(log_abs);
}

double log_abs_gamma_sq(double u, double x) {
  if (!std::isfinite(u) || !std::isfinite(x) || u <= 0.0) throw_domain("log_abs_gamma_sq", u);
  if (x == 0.0) return 2.0 * log_gamma(u);
  // Shift the real part past the Stirling threshold; each step removes ln|z+k|².
  double shift_sum = 0.0;
  double re = u;
  while (re < kStirlingThreshold) {
    shift_sum += std::log(re * re + x * x);
    re += 1.0;
  }
  return 2.0 * stirling_log_gamma(std::complex<double>(re, x)).real() - shift_sum;
}

GammaSq abs_gamma_sq_checked(double u, double x) {
  const double v = std::exp(log_abs_gamma_sq(u, x));
  return {v, v < DBL_MIN};
}

double abs_gamma_sq(double u, double x) {
  const GammaSq r = abs_gamma_sq_checked(u, x);
  return r.underflow ? 0.0 : r.value;
}

double log_abs_gamma_sq_extended(double u, double x) {
  if (!std::isfinite(u) || !std::isfinite(x)) throw_domain("log_abs_gamma_sq_extended", u);
  if (u > 0.0) return log_abs_gamma_sq(u, x);
  double shifted = u;
  double down = 0.0;
  while (shifted <= 0.0) {
    const double r2 = shifted * shifted + x * x;
    if (r2 == 0.0) throw PoleError("log_abs_gamma_sq_extended: pole at u=" + std::to_string(u));
    down += std::log(r2);
    shifted += 1.0;
  }
  return log_abs_gamma_sq(shifted, x) - down;
}

double pochhammer(double t, int n) {
  if (n < 0) throw DomainError("pochhammer: negative n");
  double prod = 1.0;
  for (int k = 0; k < n; ++k) prod *= t + k;
  return prod;
}

double hyp3f2_terminating(int n, double p1, double p2, double q1, double q2) {
  return terminating_sum(
      n, [=](int m) { return real_factor(p1, m) * real_factor(p2, m); }, std::array{q1, q2});
}

double hyp3f2_terminating(int n, ConjugatePair p, double q1, double q2) {
  return terminating_sum(n, [=](int m) { return pair_factor(p, m); }, std::array{q1, q2});
}

double hyp4f3_terminating(int n, double p1, double p2, double p3, double q1, double q2, double q3) {
  return terminating_sum(
      n, [=](int m) { return real_factor(p1, m) * real_factor(p2, m) * real_factor(p3, m); },
      std::array{q1, q2, q3});
}

double hyp4f3_terminating(int n, double p1, ConjugatePair p, double q1, double q2, double q3) {
  return terminating_sum(
      n, [=](int m) { return real_factor(p1, m) * pair_factor(p, m); }, std::array{q1, q2, q3});
}

}  // namespace hankel::specfun
