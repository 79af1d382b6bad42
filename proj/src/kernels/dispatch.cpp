#include <cstdlib>
#include <stdexcept>
#include <string>

#include "hankel/kernels.hpp"

namespace hankel::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& choose() {
  if (const char* env = std::getenv("HANKEL_SIMD"); env != nullptr && std::string(env) == "scalar")
    return scalar_table();
  if (const KernelTable* t = avx2_table()) return *t;
  return scalar_table();
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::Scalar, &scalar::dot, &scalar::axpy, &scalar::axpy2, &scalar::gemv};
  return table;
}

const KernelTable* avx2_table() {
  static const KernelTable table{Isa::Avx2, &avx2::dot, &avx2::axpy, &avx2::axpy2, &avx2::gemv};
  static const bool usable = avx2::compiled() && cpu_has_avx2();
  return usable ? &table : nullptr;
}

const KernelTable& active() {
  static const KernelTable& table = choose();
  return table;
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

double dot(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size(), "dot: length mismatch");
  return active().dot(x.data(), y.data(), x.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  require(x.size() == y.size(), "axpy: length mismatch");
  active().axpy(alpha, x.data(), y.data(), x.size());
}

void axpy2(double alpha, std::span<const double> x, double beta, std::span<const double> z, std::span<double> y) {
  require(x.size() == y.size() && z.size() == y.size(), "axpy2: length mismatch");
  active().axpy2(alpha, x.data(), beta, z.data(), y.data(), y.size());
}

void gemv(std::span<const double> a, std::size_t lda, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> y) {
  require(x.size() >= cols && y.size() >= rows, "gemv: vector too short");
  require(rows == 0 || a.size() >= (rows - 1) * lda + cols, "gemv: matrix storage too short");
  active().gemv(a.data(), lda, rows, cols, x.data(), y.data());
}

}  // namespace hankel::kernels
