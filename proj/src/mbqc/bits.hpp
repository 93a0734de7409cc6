// Packed bit vectors and bit matrices over GF(2).
//
// Bits is a fixed-length bit vector; BitMat stores rows contiguously at a
// fixed word stride so row operations hit the wordops kernels.  Bits beyond
// the logical length are kept zero.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "mbqc/wordops.hpp"

namespace mbqc::gf2 {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_(words_for_bits(n), 0) {}

  static Bits from01(const std::vector<int>& bits);
  // Bits of length n with ones at the given positions.
  static Bits with_ones(std::size_t n, std::initializer_list<int> ones);
  static Bits unit(std::size_t n, std::size_t i);

  std::size_t size() const { return n_; }
  std::size_t words() const { return w_.size(); }
  word* data() { return w_.data(); }
  const word* data() const { return w_.data(); }

  bool get(std::size_t i) const { return (w_[i / kWordBits] >> (i % kWordBits)) & 1; }
  void set(std::size_t i, bool v) {
    word m = word{1} << (i % kWordBits);
    if (v)
      w_[i / kWordBits] |= m;
    else
      w_[i / kWordBits] &= ~m;
  }
  void flip(std::size_t i) { w_[i / kWordBits] ^= word{1} << (i % kWordBits); }

  Bits& operator^=(const Bits& o) {
    xor_words(w_.data(), o.w_.data(), w_.size());
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    or_words(w_.data(), o.w_.data(), w_.size());
    return *this;
  }
  friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }

  // GF(2) inner product.
  bool dot(const Bits& o) const { return parity_and(w_.data(), o.w_.data(), w_.size()); }

  std::size_t count() const { return popcount_words(w_.data(), w_.size()); }
  bool any() const { return any_word(w_.data(), w_.size()); }
  bool none() const { return !any(); }

  bool operator==(const Bits& o) const {
    return n_ == o.n_ && equal_words(w_.data(), o.w_.data(), w_.size());
  }

  std::vector<int> ones() const;
  std::vector<int> to01() const;
  std::string str() const;

 private:
  std::size_t n_ = 0;
  std::vector<word> w_;
};

class BitMat {
 public:
  BitMat() = default;
  BitMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for_bits(cols)), w_(rows * stride_, 0) {}

  static BitMat identity(std::size_t n);
  static BitMat from_rows(const std::vector<std::vector<int>>& rows01);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  word* row_ptr(std::size_t r) { return w_.data() + r * stride_; }
  const word* row_ptr(std::size_t r) const { return w_.data() + r * stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (row_ptr(r)[c / kWordBits] >> (c % kWordBits)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    word m = word{1} << (c % kWordBits);
    if (v)
      row_ptr(r)[c / kWordBits] |= m;
    else
      row_ptr(r)[c / kWordBits] &= ~m;
  }
  void flip(std::size_t r, std::size_t c) { row_ptr(r)[c / kWordBits] ^= word{1} << (c % kWordBits); }

  void row_xor(std::size_t dst, std::size_t src) {
    xor_words(row_ptr(dst), row_ptr(src), stride_);
  }
  void row_xor_from(std::size_t dst, const BitMat& other, std::size_t src) {
    xor_words(row_ptr(dst), other.row_ptr(src), stride_);
  }
  void row_or_from(std::size_t dst, const BitMat& other, std::size_t src) {
    or_words(row_ptr(dst), other.row_ptr(src), stride_);
  }
  void swap_rows(std::size_t a, std::size_t b);

  Bits row(std::size_t r) const;
  void set_row(std::size_t r, const Bits& b);
  Bits col(std::size_t c) const;
  bool row_any(std::size_t r) const { return any_word(row_ptr(r), stride_); }
  bool col_any(std::size_t c) const;

  BitMat transposed() const;
  BitMat mul(const BitMat& o) const;
  Bits mul_vec(const Bits& x) const;        // this * x
  Bits mul_left(const Bits& x) const;       // x^T * this
  BitMat operator^(const BitMat& o) const;
  BitMat& operator^=(const BitMat& o);

  // Boolean (OR-AND) matrix product, for reachability.
  BitMat bool_mul(const BitMat& o) const;
  BitMat& bool_or(const BitMat& o);

  bool operator==(const BitMat& o) const;
  bool is_zero() const;

  // Column-subset copy, keeping the given column order.
  BitMat select_cols(const std::vector<int>& cols) const;
  BitMat select_rows(const std::vector<int>& rows) const;
  // Horizontal concatenation [this | o].
  BitMat concat_cols(const BitMat& o) const;

  std::vector<std::vector<int>> to_rows01() const;
  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
  std::vector<word> w_;
};

// Sorted complement of a sorted index set within [0, n).
std::vector<int> complement(const std::vector<int>& set, std::size_t n);

}  // namespace mbqc::gf2
