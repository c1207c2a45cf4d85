// Compiled with -mavx2; only reached through the dispatcher after a CPUID
// check.
#include <immintrin.h>

#include <algorithm>

#include "prym/simd/kernels.hpp"

namespace prym::simd::detail {
namespace {

// x in [-p, 3p) -> [0, p)
inline __m256d fold(__m256d x, __m256d p) {
  const __m256d zero = _mm256_setzero_pd();
  x = _mm256_add_pd(x, _mm256_and_pd(_mm256_cmp_pd(x, zero, _CMP_LT_OQ), p));
  x = _mm256_sub_pd(x, _mm256_and_pd(_mm256_cmp_pd(x, p, _CMP_GE_OQ), p));
  x = _mm256_sub_pd(x, _mm256_and_pd(_mm256_cmp_pd(x, p, _CMP_GE_OQ), p));
  return x;
}

// s * x mod p for x, s < p < 2^26. The product is exact in a double; the
// quotient estimate may be off by one, which fold() absorbs.
inline __m256d mulmod(__m256d x, __m256d s, __m256d p, __m256d pinv) {
  const __m256d prod = _mm256_mul_pd(x, s);
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(prod, pinv));
  return _mm256_sub_pd(prod, _mm256_mul_pd(q, p));
}

void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t s, std::size_t n,
               const Modulus& mod) {
  const __m256d p = _mm256_set1_pd(static_cast<double>(mod.value()));
  const __m256d pinv = _mm256_set1_pd(mod.inverse());
  const __m256d sd = _mm256_set1_pd(static_cast<double>(s));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i x = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i));
    const __m128i y = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i));
    __m256d r = mulmod(_mm256_cvtepi32_pd(x), sd, p, pinv);
    r = fold(_mm256_add_pd(r, _mm256_cvtepi32_pd(y)), p);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_cvttpd_epi32(r));
  }
  const std::uint64_t pv = mod.value();
  for (; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(s) * src[i]) % pv);
  }
}

std::uint32_t dot_avx2(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, const Modulus& mod) {
  // Products are < 2^52, so a 64-bit lane absorbs 2^11 of them before it
  // must be reduced.
  constexpr std::size_t kBlock = 4 * 2048;
  const std::uint64_t p = mod.value();
  std::uint64_t total = 0;
  std::size_t i = 0;
  while (i + 4 <= n) {
    __m256i acc = _mm256_setzero_si256();
    const std::size_t stop = std::min(n - (n - i) % 4, i + kBlock);
    for (; i < stop; i += 4) {
      const __m256i x = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(a + i)));
      const __m256i y = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(b + i)));
      acc = _mm256_add_epi64(acc, _mm256_mul_epu32(x, y));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    for (std::uint64_t lane : lanes) total = (total + lane % p) % p;
  }
  for (; i < n; ++i) total = (total + static_cast<std::uint64_t>(a[i]) * b[i]) % p;
  return static_cast<std::uint32_t>(total);
}

void scale_avx2(std::uint32_t* dst, std::uint32_t s, std::size_t n, const Modulus& mod) {
  const __m256d p = _mm256_set1_pd(static_cast<double>(mod.value()));
  const __m256d pinv = _mm256_set1_pd(mod.inverse());
  const __m256d sd = _mm256_set1_pd(static_cast<double>(s));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i x = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i));
    const __m256d r = fold(mulmod(_mm256_cvtepi32_pd(x), sd, p, pinv), p);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_cvttpd_epi32(r));
  }
  const std::uint64_t pv = mod.value();
  for (; i < n; ++i) dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(s) * dst[i] % pv);
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{axpy_avx2, dot_avx2, scale_avx2};
  return table;
}

}  // namespace prym::simd::detail
