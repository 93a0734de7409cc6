// Packed 64-bit word kernels for GF(2) row operations.
//
// The hot loops of the whole library are bulk XOR/OR over packed bit rows and
// popcount-parity dot products.  Scalar reference implementations live in
// namespace `scalar`; the exported function pointers are chosen once at
// startup (AVX2 when the CPU supports it, scalar otherwise) and must agree
// with the reference bit for bit.
#pragma once

#include <cstddef>
#include <cstdint>

namespace mbqc::gf2 {

using word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for_bits(std::size_t nbits) {
  return (nbits + kWordBits - 1) / kWordBits;
}

namespace scalar {
void xor_words(word* dst, const word* src, std::size_t n);
void or_words(word* dst, const word* src, std::size_t n);
std::size_t popcount_words(const word* p, std::size_t n);
// Parity of popcount(a AND b), i.e. the GF(2) inner product of two rows.
bool parity_and(const word* a, const word* b, std::size_t n);
}  // namespace scalar

bool any_word(const word* p, std::size_t n);
bool equal_words(const word* a, const word* b, std::size_t n);

using XorFn = void (*)(word*, const word*, std::size_t);
using OrFn = void (*)(word*, const word*, std::size_t);
using PopcountFn = std::size_t (*)(const word*, std::size_t);
using ParityAndFn = bool (*)(const word*, const word*, std::size_t);

extern const XorFn xor_words;
extern const OrFn or_words;
extern const PopcountFn popcount_words;
extern const ParityAndFn parity_and;

// "avx2" or "scalar", for logging and the equivalence tests.
const char* kernel_backend();

}  // namespace mbqc::gf2
