#pragma once

// Real special-function kernel: log-gamma, signed gamma, |Γ(u+ix)|², Pochhammer
// symbols and terminating 3F2 / 4F3 sums. Everything here is a pure function.

namespace hankel::specfun {

/// ln Γ(t) for t > 0. Relative error below 1e-13 on (0, 1e4).
/// Throws DomainError for t <= 0 or non-finite t.
double log_gamma(double t);

/// ln |Γ(t)| for any real t that is not a non-positive integer.
double log_abs_gamma(double t);

/// Γ(t) with sign; negative arguments go through the reflection formula.
/// Throws PoleError on non-positive integers, OverflowError past the double range.
double gamma_signed(double t);

/// sin(πt) with exact argument reduction (exact zeros at integers).
double sin_pi(double t);

/// ln |Γ(u+ix)|² for u > 0 (2·Re ln Γ via a shifted Stirling series).
double log_abs_gamma_sq(double u, double x);

/// |Γ(u+ix)|² for u > 0. Returns 0 when the value underflows.
double abs_gamma_sq(double u, double x);

struct GammaSq {
  double value;
  bool underflow;
};

/// Same as abs_gamma_sq, but reports underflow explicitly.
GammaSq abs_gamma_sq_checked(double u, double x);

/// ln |Γ(u+ix)|² for any real u, using |Γ(u+ix)|² = |Γ(u+1+ix)|² / (u²+x²)
/// downward from a positive shift. Throws PoleError when u+ix is a pole.
double log_abs_gamma_sq_extended(double u, double x);

/// Rising factorial t(t+1)...(t+n-1), as a direct product.
double pochhammer(double t, int n);

/// A numerator pair (re+iy), (re-iy) with y² = s. Its Pochhammer product is
/// real: ∏_{t<m} ((re+t)² + s). s may be negative (imaginary y).
struct ConjugatePair {
  double re;
  double s;
};

/// 3F2(-n, p1, p2; q1, q2; 1) by term recurrence in double-double arithmetic.
/// Throws PoleError if a denominator factor (q)_m vanishes within the range.
double hyp3f2_terminating(int n, double p1, double p2, double q1, double q2);
double hyp3f2_terminating(int n, ConjugatePair p, double q1, double q2);

/// 4F3(-n, p1, p2, p3; q1, q2, q3; 1), same evaluation strategy.
double hyp4f3_terminating(int n, double p1, double p2, double p3, double q1, double q2, double q3);
double hyp4f3_terminating(int n, double p1, ConjugatePair p, double q1, double q2, double q3);

}  // namespace hankel::specfun
