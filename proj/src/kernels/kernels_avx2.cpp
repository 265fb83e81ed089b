// Compiled with -mavx2 -mfma; only reached after a CPUID check.
#include <immintrin.h>

#include "kernels_internal.hpp"

namespace psc::kernels::detail {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline std::int64_t hsum_epi32(__m256i v) {
  alignas(32) std::int32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  std::int64_t s = 0;
  for (int i = 0; i < 8; ++i) s += lanes[i];
  return s;
}

}  // namespace

// Interleaved layout [re0 im0 re1 im1]. With p = a*b and q = a*swap(b):
//   re = sum(p)            = sum(ar*br + ai*bi)
//   im = sum(q odd - even) = sum(ai*br - ar*bi)
cplx dot_conj_avx2(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);

  __m256d p0 = _mm256_setzero_pd(), p1 = _mm256_setzero_pd();
  __m256d q0 = _mm256_setzero_pd(), q1 = _mm256_setzero_pd();

  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * j);
    const __m256d a1 = _mm256_loadu_pd(pa + 2 * j + 4);
    const __m256d b0 = _mm256_loadu_pd(pb + 2 * j);
    const __m256d b1 = _mm256_loadu_pd(pb + 2 * j + 4);
    p0 = _mm256_fmadd_pd(a0, b0, p0);
    p1 = _mm256_fmadd_pd(a1, b1, p1);
    q0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), q0);
    q1 = _mm256_fmadd_pd(a1, _mm256_permute_pd(b1, 0b0101), q1);
  }
  for (; j + 2 <= n; j += 2) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * j);
    const __m256d b0 = _mm256_loadu_pd(pb + 2 * j);
    p0 = _mm256_fmadd_pd(a0, b0, p0);
    q0 = _mm256_fmadd_pd(a0, _mm256_permute_pd(b0, 0b0101), q0);
  }

  const __m256d p = _mm256_add_pd(p0, p1);
  const __m256d q = _mm256_add_pd(q0, q1);
  // Negate the even lanes of q (ar*bi terms).
  const __m256d sign = _mm256_setr_pd(-1.0, 1.0, -1.0, 1.0);
  double re = hsum(p);
  double im = hsum(_mm256_mul_pd(q, sign));

  const cplx tail = dot_conj_scalar(a + j, b + j, n - j);
  re += tail.real();
  im += tail.imag();
  return {re, im};
}

// Sign-extend 16 bytes to int16 and use madd (16 products -> 8 int32 lanes).
// Each lane gains at most 2*127*127 per step; flush to int64 before overflow.
std::int64_t dot_i8_avx2(const std::int8_t* a, const std::int8_t* b, std::size_t n) {
  constexpr std::size_t kFlushEvery = 1u << 15;

  std::int64_t total = 0;
  std::size_t j = 0;
  while (j + 16 <= n) {
    __m256i acc = _mm256_setzero_si256();
    const std::size_t stop = (n - j) / 16 > kFlushEvery ? j + 16 * kFlushEvery : n - (n - j) % 16;
    for (; j < stop; j += 16) {
      const __m256i va = _mm256_cvtepi8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + j)));
      const __m256i vb = _mm256_cvtepi8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(b + j)));
      acc = _mm256_add_epi32(acc, _mm256_madd_epi16(va, vb));
    }
    total += hsum_epi32(acc);
  }
  return total + dot_i8_scalar(a + j, b + j, n - j);
}

}  // namespace psc::kernels::detail
