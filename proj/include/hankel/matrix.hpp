#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hankel {

/// Symmetric tridiagonal matrix: diag has n entries, offdiag n-1.
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> offdiag;

  std::size_t size() const { return diag.size(); }
  double inf_norm() const;
};

/// Lower bidiagonal matrix: main has n entries, sub (the first subdiagonal) n-1.
struct Bidiagonal {
  std::vector<double> main;
  std::vector<double> sub;

  std::size_t size() const { return main.size(); }
};

/// Dense symmetric n×n matrix in full row-major storage. Mirror entries are
/// written from one computed value, so (j,k) and (k,j) are bitwise equal.
class DenseSymmetric {
 public:
  DenseSymmetric() = default;
  explicit DenseSymmetric(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  /// Fills entry (j,k) and (k,j) from f(j,k) evaluated for j <= k.
  template <class F>
  static DenseSymmetric from_upper(std::size_t n, F&& f) {
    DenseSymmetric m(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) m.set(j, k, f(j, k));
    return m;
  }

  std::size_t size() const { return n_; }
  double operator()(std::size_t j, std::size_t k) const { return data_[j * n_ + k]; }
  void set(std::size_t j, std::size_t k, double v) {
    data_[j * n_ + k] = v;
    data_[k * n_ + j] = v;
  }
  std::span<const double> row(std::size_t j) const { return {data_.data() + j * n_, n_}; }
  std::span<const double> data() const { return data_; }

  double inf_norm() const;
  double max_abs() const;
  /// Principal leading m×m block.
  DenseSymmetric leading(std::size_t m) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// y = A x (SIMD-dispatched).
std::vector<double> multiply(const DenseSymmetric& a, std::span<const double> x);

/// xᵀ A x (SIMD-dispatched).
double quadratic_form(const DenseSymmetric& a, std::span<const double> x);

}  // namespace hankel
