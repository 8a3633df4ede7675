#include "nrack/kernels/axpy.hpp"

#if defined(NRACK_BUILD_AVX2)
#include <immintrin.h>
#endif

namespace nrack::kernels {

#if defined(NRACK_BUILD_AVX2)

// t = dst + f*src < 2^53 is exact in a double; q = floor(t/p) may be off by one, fixed below.
void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t len) {
  const __m256d vf = _mm256_set1_pd(static_cast<double>(f));
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d zero = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= len; k += 4) {
    __m256d d = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + k)));
    __m256d s = _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src + k)));
    __m256d t = _mm256_fmadd_pd(vf, s, d);
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, vinv));
    __m256d r = _mm256_fnmadd_pd(q, vp, t);
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + k), _mm256_cvtpd_epi32(r));
  }
  axpy_mod_scalar(dst + k, src + k, f, p, len - k);
}

#else

void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t f, std::uint32_t p, std::size_t len) {
  axpy_mod_scalar(dst, src, f, p, len);
}

#endif

}  // namespace nrack::kernels
