#include "hankel/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "hankel/kernels.hpp"

namespace hankel {

double SymTridiagonal::inf_norm() const {
  const std::size_t n = size();
  double best = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double row = std::fabs(diag[j]);
    if (j > 0) row += std::fabs(offdiag[j - 1]);
    if (j + 1 < n) row += std::fabs(offdiag[j]);
    best = std::max(best, row);
  }
  return best;
}

double DenseSymmetric::inf_norm() const {
  double best = 0.0;
  for (std::size_t j = 0; j < n_; ++j) {
    double row = 0.0;
    for (double v : this->row(j)) row += std::fabs(v);
    best = std::max(best, row);
  }
  return best;
}

double DenseSymmetric::max_abs() const {
  double best = 0.0;
  for (double v : data_) best = std::max(best, std::fabs(v));
  return best;
}

DenseSymmetric DenseSymmetric::leading(std::size_t m) const {
  assert(m <= n_);
  DenseSymmetric out(m);
  for (std::size_t j = 0; j < m; ++j)
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(j * n_), m,
                out.data_.begin() + static_cast<std::ptrdiff_t>(j * m));
  return out;
}

std::vector<double> multiply(const DenseSymmetric& a, std::span<const double> x) {
  assert(x.size() == a.size());
  std::vector<double> y(a.size());
  kernels::gemv(a.data(), a.size(), a.size(), a.size(), x, y);
  return y;
}

double quadratic_form(const DenseSymmetric& a, std::span<const double> x) {
  const std::vector<double> y = multiply(a, x);
  return kernels::dot(x, y);
}

}  // namespace hankel
