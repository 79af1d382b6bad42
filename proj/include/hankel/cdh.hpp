#pragma once

// Normalized continuous dual Hahn polynomials P̂_n(s), s = x², attached to the
// shifted Jacobi matrix T(a,b,c). The three-term recurrence is the primary
// evaluator; the terminating 3F2 form and the Wilson 4F3 form are cross-checks.

#include <cstddef>
#include <vector>

#include "hankel/matrix.hpp"
#include "hankel/operators.hpp"

namespace hankel {

struct PolyEvalRequest {
  ParamTriple p;
  int max_degree;
  double s;  // x²; negative at the mass points
};

/// [P̂_0(s), ..., P̂_N(s)] from
/// offdiag[n] P̂_{n+1} = (s - diag[n]) P̂_n - offdiag[n-1] P̂_{n-1}, P̂_0 = 1.
/// t must have at least max_degree + 1 rows.
std::vector<double> phat_recurrence(const SymTridiagonal& t, double s, int max_degree);

std::vector<double> phat_all(const PolyEvalRequest& req);

/// Largest degree accepted by the closed-form evaluators.
inline constexpr int kClosedFormMaxDegree = 60;

/// sqrt((b)_n (c)_n / ((a)_n n!)) · 3F2(-n, σ+ix, σ-ix; b, c; 1), σ = (b+c-a)/2.
/// Throws DomainError for n > kClosedFormMaxDegree.
double phat_hypergeometric(const ParamTriple& p, int n, double s);

/// P̂_n at the k-th mass point, written with the real parameters
/// 3F2(-n, b+k, c-a-k; b, c; 1) (b <= c canonical). Same degree guard.
double phat_mass_point(const ParamTriple& p, int k, int n);

/// P̂_0, ..., P̂_{count-1} at the k-th mass point. No degree limit: the 3F2 is
/// evaluated through k+1 Chu–Vandermonde sums, free of the alternating cancellation.
/// Throws std::out_of_range when k is not a mass point index.
std::vector<double> phat_mass_point_sequence(const ParamTriple& p, int k, std::size_t count);

/// (θ)_n / n! · 3F2(-n, θ-1/2+ix, θ-1/2-ix; θ, θ; 1). Same degree guard.
double hilbert_phat_hypergeometric(double theta, int n, double s);

/// 4ⁿ/(n! (θ)_{2n}) · W_n(s/4; -1/4+θ/2, 1/4, 1/4+θ/2, 3/4), W_n through 4F3.
double hilbert_phat_wilson(double theta, int n, double s);

/// |P̂_n(s) from the T(θ) recurrence − the Wilson form|. Requires n <= 40.
double wilson_crosscheck(double theta, int n, double s);

/// Σ_{j<=J} B_{0,j} P̂_j(x²).
double h_series_partial(const ParamTriple& p, double x, std::size_t J);

/// All partial sums S_0, ..., S_J of the series above.
std::vector<double> h_series_partials(const ParamTriple& p, double x, std::size_t J);

struct SeriesLimit {
  double value;
  /// Disagreement between two independent extrapolations of the tail.
  double tail_estimate;
  std::size_t terms;
};

/// Limit of the h-series. The partial sums approach it like
/// J^{-σ} (c cos(x ln J) + d sin(x ln J)) with corrections in powers of 1/J,
/// so the limit is extracted by a least-squares fit of that expansion to
/// partial sums at geometrically spaced J <= max_terms.
SeriesLimit h_series_limit(const ParamTriple& p, double x, std::size_t max_terms = 1u << 17);

}  // namespace hankel
