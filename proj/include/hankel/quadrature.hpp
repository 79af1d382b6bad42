#pragma once

// Adaptive Gauss–Kronrod integration over (0, ∞) for integrands with an
// exponentially decaying envelope, and the orthogonality measures of the
// normalized polynomials (density on (0, ∞) plus finitely many atoms).

#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <vector>

#include "hankel/operators.hpp"

namespace hankel {

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  /// r in the envelope C·e^{-r x}.
  double tail_rate = std::numbers::pi;
  std::size_t max_panels = 4000;
};

struct QuadratureResult {
  double value;
  double error_estimate;  // Kronrod–Gauss differences plus the tail bound
  double upper;           // truncation point X
  std::size_t panels;
};

using Integrand = std::function<double(double)>;

/// ∫_0^∞ f. The truncation point is the first grid point past which the
/// sampled |f| keeps decreasing and the envelope tail |f(X)|·2/r drops below
/// abs_tol/10. Panels are open, so f is never evaluated at 0.
/// Throws DomainError on a NaN integrand value (with its location) and
/// ConvergenceError when max_panels is exhausted.
QuadratureResult integrate_semiinfinite(const Integrand& f, const QuadratureSpec& spec = {});

/// Same, with the truncation point chosen from an explicit envelope(x) >= |f(x)|.
QuadratureResult integrate_semiinfinite(const Integrand& f, const Integrand& envelope,
                                        const QuadratureSpec& spec = {});

/// Density plus atoms for the normalized polynomials of B(a,b,c) or of H(θ).
class OrthogonalityMeasure {
 public:
  struct Atom {
    double lambda_sq;
    double mass;
    std::vector<double> phat;  // P̂_0..P̂_max at the atom, closed form
  };

  static OrthogonalityMeasure for_params(const ParamTriple& p, int max_degree = 30);
  static OrthogonalityMeasure for_hilbert(double theta, int max_degree = 30);

  double density(double x) const;
  /// P̂_0(x²)..P̂_max(x²) by the three-term recurrence.
  std::vector<double> phat(double x) const;
  const std::vector<Atom>& atoms() const { return atoms_; }
  int max_degree() const { return max_degree_; }

 private:
  OrthogonalityMeasure() = default;

  std::optional<ParamTriple> params_;
  double theta_ = 0.0;
  int max_degree_ = 0;
  SymTridiagonal jacobi_;
  std::vector<Atom> atoms_;
};

struct MomentResult {
  double value;
  double error_estimate;
};

/// ∫ P̂_m P̂_n ρ dx + Σ_k μ_k P̂_m(λ_k²) P̂_n(λ_k²); m, n <= max_degree() (at most 30).
MomentResult measure_moment(const OrthogonalityMeasure& mu, int m, int n, const QuadratureSpec& spec = {});

/// Total mass ∫ρ + Σ μ_k.
MomentResult total_mass(const OrthogonalityMeasure& mu, const QuadratureSpec& spec = {});

/// [measure_moment(m, n)] for m, n <= degree.
std::vector<std::vector<double>> gram_matrix(const OrthogonalityMeasure& mu, int degree,
                                             const QuadratureSpec& spec = {});

}  // namespace hankel
