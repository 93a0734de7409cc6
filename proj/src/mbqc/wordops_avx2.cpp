// AVX2 variants of the packed-word kernels.  Compiled with -mavx2 in its own
// translation unit; only reached through the runtime dispatch in wordops.cpp.
#include "mbqc/wordops.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <bit>

namespace mbqc::gf2::avx2 {

void xor_words(word* dst, const word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

void or_words(word* dst, const word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(a, b));
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

std::size_t popcount_words(const word* p, std::size_t n) {
  // 64-bit popcount instructions beat table tricks at these row lengths; the
  // AVX2 win here is keeping four lanes of loads in flight.
  std::size_t c = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    c += static_cast<std::size_t>(std::popcount(p[i]));
    c += static_cast<std::size_t>(std::popcount(p[i + 1]));
    c += static_cast<std::size_t>(std::popcount(p[i + 2]));
    c += static_cast<std::size_t>(std::popcount(p[i + 3]));
  }
  for (; i < n; ++i) c += static_cast<std::size_t>(std::popcount(p[i]));
  return c;
}

bool parity_and(const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_xor_si256(acc, _mm256_and_si256(x, y));
  }
  word lanes[4];
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes), acc);
  word rest = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
  for (; i < n; ++i) rest ^= a[i] & b[i];
  return (std::popcount(rest) & 1) != 0;
}

}  // namespace mbqc::gf2::avx2

#endif  // __AVX2__
