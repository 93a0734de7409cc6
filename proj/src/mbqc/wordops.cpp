#include "mbqc/wordops.hpp"

#include <bit>

namespace mbqc::gf2 {

namespace scalar {

void xor_words(word* dst, const word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void or_words(word* dst, const word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

std::size_t popcount_words(const word* p, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(p[i]));
  return c;
}

bool parity_and(const word* a, const word* b, std::size_t n) {
  word acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc ^= a[i] & b[i];
  return (std::popcount(acc) & 1) != 0;
}

}  // namespace scalar

bool any_word(const word* p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (p[i]) return true;
  return false;
}

bool equal_words(const word* a, const word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

#ifdef MBQC_HAVE_AVX2_TU
namespace avx2 {
void xor_words(word* dst, const word* src, std::size_t n);
void or_words(word* dst, const word* src, std::size_t n);
std::size_t popcount_words(const word* p, std::size_t n);
bool parity_and(const word* a, const word* b, std::size_t n);
}  // namespace avx2

static bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }
#endif

static XorFn init_xor() {
#ifdef MBQC_HAVE_AVX2_TU
  if (cpu_has_avx2()) return avx2::xor_words;
#endif
  return scalar::xor_words;
}

static OrFn init_or() {
#ifdef MBQC_HAVE_AVX2_TU
  if (cpu_has_avx2()) return avx2::or_words;
#endif
  return scalar::or_words;
}

static PopcountFn init_popcount() {
#ifdef MBQC_HAVE_AVX2_TU
  if (cpu_has_avx2()) return avx2::popcount_words;
#endif
  return scalar::popcount_words;
}

static ParityAndFn init_parity_and() {
#ifdef MBQC_HAVE_AVX2_TU
  if (cpu_has_avx2()) return avx2::parity_and;
#endif
  return scalar::parity_and;
}

const XorFn xor_words = init_xor();
const OrFn or_words = init_or();
const PopcountFn popcount_words = init_popcount();
const ParityAndFn parity_and = init_parity_and();

const char* kernel_backend() {
#ifdef MBQC_HAVE_AVX2_TU
  if (cpu_has_avx2()) return "avx2";
#endif
  return "scalar";
}

}  // namespace mbqc::gf2
