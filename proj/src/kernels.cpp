#include "demb/kernels.hpp"

#include <atomic>
#include <cmath>

namespace demb::kern {

namespace {

double sum_abs_scalar(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::fabs(x[i]);
  return acc;
}

double sum_squares_scalar(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double sum_abs_pow_scalar(const double* x, std::size_t n, double p) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = std::fabs(x[i]);
    if (t != 0.0) acc += std::exp(p * std::log(t));
  }
  return acc;
}

double dist_abs_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::fabs(x[i] - y[i]);
  return acc;
}

double dist_squares_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - y[i];
    acc += d * d;
  }
  return acc;
}

double dist_abs_pow_scalar(const double* x, const double* y, std::size_t n, double p) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = std::fabs(x[i] - y[i]);
    if (t != 0.0) acc += std::exp(p * std::log(t));
  }
  return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void scale_scalar(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

constexpr Kernels kScalar = {
    &sum_abs_scalar,  &sum_squares_scalar,  &sum_abs_pow_scalar,
    &dist_abs_scalar, &dist_squares_scalar, &dist_abs_pow_scalar,
    &axpy_scalar,     &scale_scalar,        "scalar",
};

std::atomic<const Kernels*> g_active{nullptr};

const Kernels* default_table() {
#if defined(DEMB_HAVE_AVX2_BUILD)
  if (simd_supported()) return &avx2_kernels();
#endif
  return &kScalar;
}

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

bool simd_supported() {
#if defined(DEMB_HAVE_AVX2_BUILD)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Kernels& active() {
  const Kernels* t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    t = default_table();
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

void set_simd_enabled(bool enabled) {
#if defined(DEMB_HAVE_AVX2_BUILD)
  if (enabled && simd_supported()) {
    g_active.store(&avx2_kernels(), std::memory_order_release);
    return;
  }
#else
  (void)enabled;
#endif
  g_active.store(&kScalar, std::memory_order_release);
}

bool simd_enabled() { return &active() != &kScalar; }

}  // namespace demb::kern
