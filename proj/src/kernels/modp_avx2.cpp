#include "pvialg/kernels/modp.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define PVIALG_HAVE_AVX2_KERNELS 1
#endif

namespace pvialg::kernels {

#ifdef PVIALG_HAVE_AVX2_KERNELS

namespace {

// r = (a * b) mod p for exact integer-valued doubles with a*b < 2^52.
__attribute__((target("avx2"))) inline __m256d mulmod(__m256d a, __m256d b, __m256d p, __m256d pinv) {
  __m256d prod = _mm256_mul_pd(a, b);
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(prod, pinv));
  __m256d r = _mm256_sub_pd(prod, _mm256_mul_pd(q, p));
  // The reciprocal may be off by one ulp either way: fold r into [0, p).
  __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), p));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
  return r;
}

inline double mulmod1(double a, double b, const Modulus& m) {
  double prod = a * b;
  double q = __builtin_floor(prod * m.pinv);
  double r = prod - q * m.pd;
  if (r < 0) r += m.pd;
  if (r >= m.pd) r -= m.pd;
  return r;
}

__attribute__((target("avx2"))) void submul_avx2(double* dst, const double* src, double s, const Modulus& m,
                                                 std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  const __m256d vp = _mm256_set1_pd(m.pd);
  const __m256d vpinv = _mm256_set1_pd(m.pinv);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d r = mulmod(vs, _mm256_loadu_pd(src + k), vp, vpinv);
    __m256d t = _mm256_sub_pd(_mm256_loadu_pd(dst + k), r);
    t = _mm256_add_pd(t, _mm256_and_pd(_mm256_cmp_pd(t, zero, _CMP_LT_OQ), vp));
    _mm256_storeu_pd(dst + k, t);
  }
  for (; k < n; ++k) {
    double t = dst[k] - mulmod1(s, src[k], m);
    dst[k] = t < 0 ? t + m.pd : t;
  }
}

__attribute__((target("avx2"))) void addmul_avx2(double* dst, const double* src, double s, const Modulus& m,
                                                 std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  const __m256d vp = _mm256_set1_pd(m.pd);
  const __m256d vpinv = _mm256_set1_pd(m.pinv);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d r = mulmod(vs, _mm256_loadu_pd(src + k), vp, vpinv);
    __m256d t = _mm256_add_pd(_mm256_loadu_pd(dst + k), r);
    t = _mm256_sub_pd(t, _mm256_and_pd(_mm256_cmp_pd(t, vp, _CMP_GE_OQ), vp));
    _mm256_storeu_pd(dst + k, t);
  }
  for (; k < n; ++k) {
    double t = dst[k] + mulmod1(s, src[k], m);
    dst[k] = t >= m.pd ? t - m.pd : t;
  }
}

__attribute__((target("avx2"))) void scale_avx2(double* dst, double s, const Modulus& m, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  const __m256d vp = _mm256_set1_pd(m.pd);
  const __m256d vpinv = _mm256_set1_pd(m.pinv);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) _mm256_storeu_pd(dst + k, mulmod(vs, _mm256_loadu_pd(dst + k), vp, vpinv));
  for (; k < n; ++k) dst[k] = mulmod1(s, dst[k], m);
}

constexpr ModpKernels kAvx2{"avx2", submul_avx2, addmul_avx2, scale_avx2};

}  // namespace

const ModpKernels* avx2_kernels() { return &kAvx2; }

bool cpu_supports_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}

#else

const ModpKernels* avx2_kernels() { return nullptr; }
bool cpu_supports_avx2() { return false; }

#endif

}  // namespace pvialg::kernels
