#pragma once

// The weighted Hankel family B(a,b,c), its commuting Jacobi matrix T(a,b,c),
// the discrete dilatation D with its off-diagonal block C, and residual checks
// for the algebraic identities tying them together. Truncations are always
// the principal n×n corner; residuals skip the last row and column, where a
// product with a tridiagonal or bidiagonal factor is cut off.

#include <cstddef>
#include <vector>

#include "hankel/matrix.hpp"

namespace hankel {

enum class Regime { ContinuousOnly, WithDiscrete };

/// (a, b, c) with the ordering min(b,c) <= max(b,c) used by the discrete-part formulas.
struct CanonicalTriple {
  double a;
  double b;
  double c;
};

/// A validated parameter triple: a, b, c > 0 and a < b + c. Parameters keep the
/// caller's order; canonical() sorts b and c.
class ParamTriple {
 public:
  /// Throws ParameterError on non-finite or non-positive parameters, or a >= b + c.
  static ParamTriple validate(double a, double b, double c);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  Regime regime() const { return regime_; }
  /// Number of mass points of the orthogonality measure (N + 1), 0 without a discrete part.
  int mass_count() const { return mass_count_; }
  CanonicalTriple canonical() const;
  /// (b + c - a) / 2: the first continuous dual Hahn parameter, and the real part in h(x).
  double sigma() const { return 0.5 * (b_ + c_ - a_); }

 private:
  ParamTriple(double a, double b, double c);

  double a_;
  double b_;
  double c_;
  Regime regime_;
  int mass_count_;
};

/// ln of the weight w(j) = sqrt(Γ(j+b)Γ(j+c) / (Γ(j+a) j!)).
double log_weight(const ParamTriple& p, std::size_t j);
/// ln of the Hankel symbol h(z) = Γ(z+a) / Γ(z+b+c).
double log_hankel_symbol(const ParamTriple& p, double z);

/// B_{j,k}, evaluated as exp(ln h(j+k) + (ln w(j) + ln w(k))); exactly symmetric.
double b_entry(const ParamTriple& p, std::size_t j, std::size_t k);
DenseSymmetric b_matrix(const ParamTriple& p, std::size_t n);

/// T(a,b,c) truncated to n×n; shifted subtracts (a+b-c)²/4 from the diagonal.
SymTridiagonal t_matrix(const ParamTriple& p, std::size_t n, bool shifted);

struct DilatationData {
  std::vector<double> d;  // d(0), ..., d(2n-1)
  Bidiagonal c;           // C_{j,j} = d(2j), C_{j+1,j} = -d(2j+1)
};

DilatationData d_and_c(const ParamTriple& p, std::size_t n);

/// Max absolute interior residual together with the scale it should be judged against.
struct Residual {
  double max_abs = 0.0;
  double scale = 1.0;
  double relative() const { return scale > 0.0 ? max_abs / scale : max_abs; }
};

/// max_{j,k<=n-2} |(M T - T M)_{j,k}|; scale = ‖M‖∞ ‖T‖∞.
Residual commutator_residual(const DenseSymmetric& m, const SymTridiagonal& t);

/// The above for B_n and the unshifted T_n.
Residual commutator_residual(const ParamTriple& p, std::size_t n);

/// max_{j,k<=n-2} |(B(a,b,c) C - C B(a+1,b+1,c))_{j,k}|; scale = largest |term| entering an entry.
Residual intertwining_residual(const ParamTriple& p, std::size_t n);

/// Larger of the relative residuals of B = W H W and H V = Ṽ H̃ on the interior.
Residual whw_factorization_residual(const ParamTriple& p, std::size_t n);

/// Interior residual of A D - D A with A = B(a,b,c) ⊕ B(a+1,b+1,c) interleaved on
/// even/odd indices, size 2n.
Residual dilatation_residual(const ParamTriple& p, std::size_t n);

}  // namespace hankel
