#pragma once

// Closed-form spectral data of B(a,b,c): the multiplier h, the band edge M,
// mass points with their eigenvalues, masses and eigenvector norms, the
// absolutely continuous density ρ, and the continuum comparison function g.
// Formulas for the discrete part use the canonical order b <= c.

#include <cstddef>
#include <vector>

#include "hankel/operators.hpp"

namespace hankel {

struct MassPoint {
  int k;
  double lambda_sq;  // -((a+b-c)/2 + k)² < 0
  double beta;       // eigenvalue of B attached to the point
  double mass;       // μ({λ_k})
  double v_norm_sq;  // ‖v_k‖² with v_k = (P̂_n(λ_k²))_n
};

struct SpectralModel {
  ParamTriple p;
  double band_edge;  // M(a,b,c); the continuous spectrum is [0, M]
  std::vector<MassPoint> mass_points;
  double norm;
};

/// |Γ(σ+ix)|² / Γ(b+c-a), σ = (b+c-a)/2. Throws DomainError for x < 0.
double h_eval(const ParamTriple& p, double x);

/// |Γ((ℓ+1)/2 + iξ)|² / Γ(ℓ+1). Throws DomainError for ℓ <= -1.
double continuum_g(double ell, double xi);

/// Γ(σ)² / Γ(2σ).
double cap_m(const ParamTriple& p);

std::vector<MassPoint> point_spectrum(const ParamTriple& p);

/// x sinh(2πx)/(π² Γ(a)Γ(b)Γ(c)) · |Γ(σ+ix) Γ((a+c-b)/2+ix) Γ((a+b-c)/2+ix)|², x > 0.
double density_rho(const ParamTriple& p, double x);

/// ⟨e_n, v_k⟩ = P̂_n(λ_k²), any n.
/// Throws std::out_of_range when k is not a mass point index.
double eigvec_component(const ParamTriple& p, int k, std::size_t n);

/// The first count components of v_k.
std::vector<double> eigvec_components(const ParamTriple& p, int k, std::size_t count);

double operator_norm(const ParamTriple& p);

SpectralModel spectral_model(const ParamTriple& p);

}  // namespace hankel
