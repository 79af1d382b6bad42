#pragma once

// Dense double-precision inner loops. Every kernel has a scalar reference
// implementation and, on x86-64, an AVX2/FMA variant. The public entry points
// dispatch at runtime; the per-ISA tables stay visible for equivalence tests.

#include <cstddef>
#include <span>
#include <string_view>

namespace hankel::kernels {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  double (*dot)(const double* x, const double* y, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // y += alpha * x + beta * z
  void (*axpy2)(double alpha, const double* x, double beta, const double* z, double* y, std::size_t n);
  // y = A x, A row-major with leading dimension lda
  void (*gemv)(const double* a, std::size_t lda, std::size_t rows, std::size_t cols, const double* x,
               double* y);
};

const KernelTable& scalar_table();

/// nullptr when the AVX2 variant is not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_table();

/// Table used by the dispatching entry points. Chosen once: AVX2 when
/// available, unless HANKEL_SIMD=scalar is set in the environment.
const KernelTable& active();

std::string_view isa_name(Isa isa);

double dot(std::span<const double> x, std::span<const double> y);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void axpy2(double alpha, std::span<const double> x, double beta, std::span<const double> z, std::span<double> y);
void gemv(std::span<const double> a, std::size_t lda, std::size_t rows, std::size_t cols,
          std::span<const double> x, std::span<double> y);

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void axpy2(double alpha, const double* x, double beta, const double* z, double* y, std::size_t n);
void gemv(const double* a, std::size_t lda, std::size_t rows, std::size_t cols, const double* x, double* y);
}  // namespace scalar

namespace avx2 {
bool compiled();
double dot(const double* x, const double* y, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void axpy2(double alpha, const double* x, double beta, const double* z, double* y, std::size_t n);
void gemv(const double* a, std::size_t lda, std::size_t rows, std::size_t cols, const double* x, double* y);
}  // namespace avx2

}  // namespace hankel::kernels
