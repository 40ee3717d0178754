#pragma once

#include <cstddef>

// Data-parallel inner loops used by the norm, certificate, optimizer and
// simplex code. Every primitive has a scalar reference implementation and,
// on x86-64 builds, an AVX2+FMA variant selected at runtime. The two are
// equivalence-tested against each other; `axpy` and `scale` are elementwise
// with one rounding per element, so those two must match bit for bit.

namespace demb::kern {

struct Kernels {
  // sum_i |x_i|
  double (*sum_abs)(const double* x, std::size_t n);
  // sum_i x_i^2
  double (*sum_squares)(const double* x, std::size_t n);
  // sum_i |x_i|^p with |x_i|^p = exp(p*ln|x_i|), zero terms skipped
  double (*sum_abs_pow)(const double* x, std::size_t n, double p);
  // same three over the pair difference x - y
  double (*dist_abs)(const double* x, const double* y, std::size_t n);
  double (*dist_squares)(const double* x, const double* y, std::size_t n);
  double (*dist_abs_pow)(const double* x, const double* y, std::size_t n, double p);
  // y_i += a*x_i, single rounding per element (fma)
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // x_i *= a
  void (*scale)(double a, double* x, std::size_t n);
  const char* name;
};

const Kernels& scalar_kernels();
#if defined(DEMB_HAVE_AVX2_BUILD)
const Kernels& avx2_kernels();
#endif

// True when the binary carries the AVX2 variants and the CPU can run them.
bool simd_supported();

// Runtime override; used by the equivalence tests and the CLI --no-simd flag.
void set_simd_enabled(bool enabled);
bool simd_enabled();

// Table in effect (AVX2 when supported and enabled, scalar otherwise).
const Kernels& active();

inline double sum_abs(const double* x, std::size_t n) { return active().sum_abs(x, n); }
inline double sum_squares(const double* x, std::size_t n) { return active().sum_squares(x, n); }
inline double sum_abs_pow(const double* x, std::size_t n, double p) {
  return active().sum_abs_pow(x, n, p);
}
inline double dist_abs(const double* x, const double* y, std::size_t n) {
  return active().dist_abs(x, y, n);
}
inline double dist_squares(const double* x, const double* y, std::size_t n) {
  return active().dist_squares(x, y, n);
}
inline double dist_abs_pow(const double* x, const double* y, std::size_t n, double p) {
  return active().dist_abs_pow(x, y, n, p);
}
inline void axpy(double a, const double* x, double* y, std::size_t n) {
  active().axpy(a, x, y, n);
}
inline void scale(double a, double* x, std::size_t n) { active().scale(a, x, n); }

}  // namespace demb::kern
