// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma and is only reached through the runtime dispatch in
// kernels.cpp after a cpuid check.

#include "demb/kernels.hpp"

#if defined(DEMB_HAVE_AVX2_BUILD)

#include <immintrin.h>

#include <cmath>
#include <cstdint>
#include <limits>

namespace demb::kern {

namespace {

inline __m256d abs_pd(__m256d v) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFLL));
  return _mm256_and_pd(v, mask);
}

inline double hsum_pd(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d hi64 = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, hi64));
}

// double(u) for integer lanes with 0 <= u < 2^52.
inline __m256d u64_to_pd(__m256i u) {
  const __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL);  // 2^52
  return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(u, magic)),
                       _mm256_set1_pd(4503599627370496.0));
}

// ln2 split so that n*kLn2Hi is exact for |n| < 2^31 (fdlibm constants).
constexpr double kLn2Hi = 6.93147180369123816490e-01;
constexpr double kLn2Lo = 1.90821492927058770002e-10;

// Natural log, lanes must be positive and finite. Subnormals are lifted by
// 2^54 before the exponent/mantissa split.
inline __m256d log_pd(__m256d x) {
  const __m256d min_normal = _mm256_set1_pd(2.2250738585072014e-308);
  const __m256d two54 = _mm256_set1_pd(18014398509481984.0);
  __m256d is_sub = _mm256_cmp_pd(x, min_normal, _CMP_LT_OQ);
  x = _mm256_blendv_pd(x, _mm256_mul_pd(x, two54), is_sub);
  __m256d bias =
      _mm256_blendv_pd(_mm256_set1_pd(1023.0), _mm256_set1_pd(1077.0), is_sub);

  __m256i bits = _mm256_castpd_si256(x);
  __m256d e = _mm256_sub_pd(u64_to_pd(_mm256_srli_epi64(bits, 52)), bias);
  __m256i mant =
      _mm256_or_si256(_mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
                      _mm256_set1_epi64x(0x3FF0000000000000LL));
  __m256d m = _mm256_castsi256_pd(mant);  // [1, 2)

  // fold into [sqrt(2)/2, sqrt(2)) so the atanh series argument stays small
  const __m256d sqrt2 = _mm256_set1_pd(1.4142135623730951);
  __m256d fold = _mm256_cmp_pd(m, sqrt2, _CMP_GE_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), fold);
  e = _mm256_blendv_pd(e, _mm256_add_pd(e, _mm256_set1_pd(1.0)), fold);

  const __m256d one = _mm256_set1_pd(1.0);
  __m256d s = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
  __m256d u = _mm256_mul_pd(s, s);

  // log(m) = 2s * sum_{j>=0} u^j/(2j+1); |s| <= 0.1716 so eleven terms
  // leave a truncation error below 1e-18 relative.
  __m256d poly = _mm256_set1_pd(1.0 / 21.0);
  poly = _mm256_fmadd_pd(poly, u, _mm256_set1_pd(1.0 / 19.0));
  poly = _mm256_fmadd_pd(poly, u, _mm256_set1_pd(1.0 / 17.0));
  poly = _mm256_fmadd_pd(poly, u, _mm256_set1_pd(1.0 / 15.0));
  poly = _mm256_fmadd_pd(poly, u, _mm256_set1_pd(1.0 / 13.0));
  poly = _mm256_fmadd_pd(poly, u, _mm256_set1_pd(1.0 / 11.0));
  poly = _mm256_fmadd_pd(poly, u, _mm256_set1_pd(1.0 / 9.0));
  poly = _mm256_fmadd_pd(poly, u, _mm256_set1_pd(1.0 / 7.0));
  poly = _mm256_fmadd_pd(poly, u, _mm256_set1_pd(1.0 / 5.0));
  poly = _mm256_fmadd_pd(poly, u, _mm256_set1_pd(1.0 / 3.0));
  poly = _mm256_fmadd_pd(poly, u, one);
  __m256d log_m = _mm256_mul_pd(_mm256_add_pd(s, s), poly);

  __m256d r = _mm256_fmadd_pd(e, _mm256_set1_pd(kLn2Lo), log_m);
  return _mm256_fmadd_pd(e, _mm256_set1_pd(kLn2Hi), r);
}

// exp with saturation to 0 / +inf outside the normal-result range; the core
// clamp keeps the 2^n exponent add inside normal doubles.
inline __m256d exp_pd(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634074);
  __m256d under = _mm256_cmp_pd(x, _mm256_set1_pd(-708.0), _CMP_LT_OQ);
  __m256d over = _mm256_cmp_pd(x, _mm256_set1_pd(709.0), _CMP_GT_OQ);
  __m256d xc = _mm256_min_pd(_mm256_max_pd(x, _mm256_set1_pd(-708.0)),
                             _mm256_set1_pd(709.0));

  __m256d n = _mm256_round_pd(_mm256_mul_pd(xc, log2e),
                              _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kLn2Hi), xc);
  r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kLn2Lo), r);

  // Taylor to r^13/13!; |r| <= ln2/2 keeps the truncation below 5e-18.
  __m256d poly = _mm256_set1_pd(1.0 / 6227020800.0);
  poly = _mm256_fmadd_pd(poly, r, _mm256_set1_pd(1.0 / 479001600.0));
  poly = _mm256_fmadd_pd(poly, r, _mm256_set1_pd(1.0 / 39916800.0));
  poly = _mm256_fmadd_pd(poly, r, _mm256_set1_pd(1.0 / 3628800.0));
  poly = _mm256_fmadd_pd(poly, r, _mm256_set1_pd(1.0 / 362880.0));
  poly = _mm256_fmadd_pd(poly, r, _mm256_set1_pd(1.0 / 40320.0));
  poly = _mm256_fmadd_pd(poly, r, _mm256_set1_pd(1.0 / 5040.0));
  poly = _mm256_fmadd_pd(poly, r, _mm256_set1_pd(1.0 / 720.0));
  poly = _mm256_fmadd_pd(poly, r, _mm256_set1_pd(1.0 / 120.0));
  poly = _mm256_fmadd_pd(poly, r, _mm256_set1_pd(1.0 / 24.0));
  poly = _mm256_fmadd_pd(poly, r, _mm256_set1_pd(1.0 / 6.0));
  poly = _mm256_fmadd_pd(poly, r, _mm256_set1_pd(0.5));
  poly = _mm256_fmadd_pd(poly, r, _mm256_set1_pd(1.0));
  poly = _mm256_fmadd_pd(poly, r, _mm256_set1_pd(1.0));

  __m128i n32 = _mm256_cvtpd_epi32(n);
  __m256i n64 = _mm256_cvtepi32_epi64(n32);
  __m256i bits = _mm256_castpd_si256(poly);
  bits = _mm256_add_epi64(bits, _mm256_slli_epi64(n64, 52));
  __m256d res = _mm256_castsi256_pd(bits);

  res = _mm256_blendv_pd(res, _mm256_setzero_pd(), under);
  res = _mm256_blendv_pd(res, _mm256_set1_pd(std::numeric_limits<double>::infinity()),
                         over);
  return res;
}

// |t|^p = exp(p*log t) with zero lanes contributing zero.
inline __m256d pow_abs_pd(__m256d t, __m256d p) {
  __m256d is_zero = _mm256_cmp_pd(t, _mm256_setzero_pd(), _CMP_EQ_OQ);
  __m256d safe = _mm256_blendv_pd(t, _mm256_set1_pd(1.0), is_zero);
  __m256d y = exp_pd(_mm256_mul_pd(p, log_pd(safe)));
  return _mm256_andnot_pd(is_zero, y);
}

double sum_abs_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, abs_pd(_mm256_loadu_pd(x + i)));
  double s = hsum_pd(acc);
  for (; i < n; ++i) s += std::fabs(x[i]);
  return s;
}

double sum_squares_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum_pd(acc);
  for (; i < n; ++i) s = std::fma(x[i], x[i], s);
  return s;
}

double sum_abs_pow_avx2(const double* x, std::size_t n, double p) {
  const __m256d vp = _mm256_set1_pd(p);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_pd(acc, pow_abs_pd(abs_pd(_mm256_loadu_pd(x + i)), vp));
  double s = hsum_pd(acc);
  for (; i < n; ++i) {
    const double t = std::fabs(x[i]);
    if (t != 0.0) s += std::exp(p * std::log(t));
  }
  return s;
}

double dist_abs_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    acc = _mm256_add_pd(acc, abs_pd(v));
  }
  double s = hsum_pd(acc);
  for (; i < n; ++i) s += std::fabs(x[i] - y[i]);
  return s;
}

double dist_squares_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum_pd(acc);
  for (; i < n; ++i) {
    const double d = x[i] - y[i];
    s = std::fma(d, d, s);
  }
  return s;
}

double dist_abs_pow_avx2(const double* x, const double* y, std::size_t n, double p) {
  const __m256d vp = _mm256_set1_pd(p);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    acc = _mm256_add_pd(acc, pow_abs_pd(abs_pd(v), vp));
  }
  double s = hsum_pd(acc);
  for (; i < n; ++i) {
    const double t = std::fabs(x[i] - y[i]);
    if (t != 0.0) s += std::exp(p * std::log(t));
  }
  return s;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void scale_avx2(double a, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

constexpr Kernels kAvx2 = {
    &sum_abs_avx2,  &sum_squares_avx2,  &sum_abs_pow_avx2,
    &dist_abs_avx2, &dist_squares_avx2, &dist_abs_pow_avx2,
    &axpy_avx2,     &scale_avx2,        "avx2",
};

}  // namespace

const Kernels& avx2_kernels() { return kAvx2; }

}  // namespace demb::kern

#endif  // DEMB_HAVE_AVX2_BUILD
