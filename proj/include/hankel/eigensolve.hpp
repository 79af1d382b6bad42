#pragma once

// Symmetric eigensolvers used as the independent numerical oracle:
// Sturm-sequence bisection for eigenvalues, inverse iteration for vectors,
// Householder reduction for dense input.

#include <cstddef>
#include <optional>
#include <vector>

#include "hankel/matrix.hpp"

namespace hankel {

/// Which part of the spectrum to compute.
struct Selection {
  enum class Kind { All, Top, Bottom, Window };
  Kind kind = Kind::All;
  std::size_t count = 0;  // Top / Bottom
  double lo = 0.0;        // Window: eigenvalues in [lo, hi)
  double hi = 0.0;

  static Selection all() { return {}; }
  static Selection top(std::size_t k) { return {Kind::Top, k, 0.0, 0.0}; }
  static Selection bottom(std::size_t k) { return {Kind::Bottom, k, 0.0, 0.0}; }
  static Selection window(double lo, double hi) { return {Kind::Window, 0, lo, hi}; }
};

struct EigenResult {
  std::vector<double> values;  // ascending
  std::optional<std::vector<std::vector<double>>> vectors;  // vectors[i] pairs with values[i]
  /// Largest ‖M v - λ v‖ over returned pairs; the bisection tolerance when no vectors were requested.
  double residual_bound = 0.0;
};

struct EigenOptions {
  bool vectors = false;
  /// Absolute bisection tolerance, as a multiple of ‖M‖∞.
  double relative_tolerance = 1e-12;
};

/// Number of eigenvalues of t strictly below x (Sturm count).
std::size_t sturm_count(const SymTridiagonal& t, double x);

EigenResult tridiag_eigen(const SymTridiagonal& t, Selection which, EigenOptions options = {});

/// Rejects matrices whose asymmetry exceeds 1e-12 relative (only reachable for
/// hand-built storage; DenseSymmetric is symmetric by construction).
EigenResult dense_eigen(const DenseSymmetric& m, Selection which, EigenOptions options = {});

/// Householder reduction Qᵀ M Q = T. Reflectors are kept for back-transformation.
struct Tridiagonalization {
  SymTridiagonal t;
  std::vector<std::vector<double>> reflectors;  // reflectors[k] acts on indices k+1..n-1
  std::vector<double> betas;

  /// x ← Q x
  void apply_q(std::vector<double>& x) const;
};

Tridiagonalization householder_tridiagonalize(const DenseSymmetric& m);

}  // namespace hankel
