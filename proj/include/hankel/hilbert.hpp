#pragma once

// The generalized Hilbert matrix H(θ)_{j,k} = 1/(j+k+θ) for any real θ that is
// not a non-positive integer, its Jacobi matrix and orthogonality measure, and
// the Bergman–Hilbert matrix A = B(1,1,2) + Z.

#include <cstddef>
#include <vector>

#include "hankel/matrix.hpp"

namespace hankel {

/// Throws ParameterError for non-finite θ or θ ∈ {0, -1, -2, ...}.
double validate_theta(double theta);

double h_theta_entry(double theta, std::size_t j, std::size_t k);
DenseSymmetric h_theta_matrix(double theta, std::size_t n);

/// diag = 2j(j+θ) - 1/4 + θ, offdiag = -(j+1)(j+θ) (signed, no square root).
SymTridiagonal hilbert_jacobi(double theta, std::size_t n);

/// N(θ) = ceil(-1/2 - θ) for θ < 1/2, otherwise -1 (no discrete part).
int hilbert_discrete_count(double theta);

/// 2x tanh(πx)/Γ(θ)² · |Γ(θ-1/2+ix)|², x > 0.
double hilbert_rho(double theta, double x);
/// λ_k² = -(θ - 1/2 + k)².
double hilbert_lambda_sq(double theta, int k);
/// Γ(1-θ)² (1-2θ-2k) / (k! Γ(2-2θ-k)).
double hilbert_mass(double theta, int k);

struct EigenMultiplicity {
  double value;
  int multiplicity;
};

struct HilbertSpectrum {
  double theta;
  int N;
  std::vector<EigenMultiplicity> eigen;  // aggregated from (-1)^k π/sin(πθ), k = 0..N
  double ac_lo = 0.0;
  double ac_hi;  // π
};

HilbertSpectrum hilbert_spectrum_report(double theta);

struct BergmanEntry {
  double A;
  double B;
  double Z;
};

/// A = sqrt((j+1)(k+1))/(j+k+1)², B = B(1,1,2), Z = A - B.
BergmanEntry bergman_entries(std::size_t j, std::size_t k);
DenseSymmetric bergman_matrix(std::size_t n);
DenseSymmetric bergman_defect_matrix(std::size_t n);

/// Σ_{j<J} Z_{j,j} = Σ_{j<J} 1/(2(2j+1)²), compensated summation.
double bergman_trace_defect(std::size_t J);

}  // namespace hankel
