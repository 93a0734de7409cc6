#include "mbqc/bits.hpp"

#include <bit>
#include <cassert>
#include <utility>

namespace mbqc::gf2 {

Bits Bits::from01(const std::vector<int>& bits) {
  Bits b(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) b.set(i, true);
  return b;
}

Bits Bits::with_ones(std::size_t n, std::initializer_list<int> ones) {
  Bits b(n);
  for (int i : ones) b.set(static_cast<std::size_t>(i), true);
  return b;
}

Bits Bits::unit(std::size_t n, std::size_t i) {
  Bits b(n);
  b.set(i, true);
  return b;
}

std::vector<int> Bits::ones() const {
  std::vector<int> out;
  for (std::size_t wi = 0; wi < w_.size(); ++wi) {
    word x = w_[wi];
    while (x) {
      int b = std::countr_zero(x);
      out.push_back(static_cast<int>(wi * kWordBits + static_cast<std::size_t>(b)));
      x &= x - 1;
    }
  }
  return out;
}

std::vector<int> Bits::to01() const {
  std::vector<int> out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) out[i] = get(i) ? 1 : 0;
  return out;
}

std::string Bits::str() const {
  std::string s;
  s.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) s.push_back(get(i) ? '1' : '0');
  return s;
}

BitMat BitMat::identity(std::size_t n) {
  BitMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMat BitMat::from_rows(const std::vector<std::vector<int>>& rows01) {
  std::size_t r = rows01.size();
  std::size_t c = r ? rows01[0].size() : 0;
  BitMat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    assert(rows01[i].size() == c);
    for (std::size_t j = 0; j < c; ++j)
      if (rows01[i][j]) m.set(i, j, true);
  }
  return m;
}

void BitMat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  word* pa = row_ptr(a);
  word* pb = row_ptr(b);
  for (std::size_t i = 0; i < stride_; ++i) std::swap(pa[i], pb[i]);
}

Bits BitMat::row(std::size_t r) const {
  Bits b(cols_);
  const word* p = row_ptr(r);
  for (std::size_t i = 0; i < stride_; ++i) b.data()[i] = p[i];
  return b;
}

void BitMat::set_row(std::size_t r, const Bits& b) {
  assert(b.size() == cols_);
  word* p = row_ptr(r);
  for (std::size_t i = 0; i < stride_; ++i) p[i] = b.data()[i];
}

Bits BitMat::col(std::size_t c) const {
  Bits b(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) b.set(r, true);
  return b;
}

bool BitMat::col_any(std::size_t c) const {
  for (std::size_t r = 0; r < rows_; ++r)
    if (get(r, c)) return true;
  return false;
}

BitMat BitMat::transposed() const {
  BitMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const word* p = row_ptr(r);
    for (std::size_t wi = 0; wi < stride_; ++wi) {
      word x = p[wi];
      while (x) {
        int b = std::countr_zero(x);
        t.set(wi * kWordBits + static_cast<std::size_t>(b), r, true);
        x &= x - 1;
      }
    }
  }
  return t;
}

BitMat BitMat::mul(const BitMat& o) const {
  assert(cols_ == o.rows_);
  BitMat out(rows_, o.cols_);
  // Row-sweep product: accumulate the rows of o selected by each row of this.
  for (std::size_t r = 0; r < rows_; ++r) {
    const word* p = row_ptr(r);
    for (std::size_t wi = 0; wi < stride_; ++wi) {
      word x = p[wi];
      while (x) {
        int b = std::countr_zero(x);
        out.row_xor_from(r, o, wi * kWordBits + static_cast<std::size_t>(b));
        x &= x - 1;
      }
    }
  }
  return out;
}

Bits BitMat::mul_vec(const Bits& x) const {
  assert(x.size() == cols_);
  Bits out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (parity_and(row_ptr(r), x.data(), stride_)) out.set(r, true);
  return out;
}

Bits BitMat::mul_left(const Bits& x) const {
  assert(x.size() == rows_);
  Bits out(cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (x.get(r)) xor_words(out.data(), row_ptr(r), stride_);
  return out;
}

BitMat BitMat::operator^(const BitMat& o) const {
  BitMat out = *this;
  out ^= o;
  return out;
}

BitMat& BitMat::operator^=(const BitMat& o) {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  xor_words(w_.data(), o.w_.data(), w_.size());
  return *this;
}

BitMat BitMat::bool_mul(const BitMat& o) const {
  assert(cols_ == o.rows_);
  BitMat out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const word* p = row_ptr(r);
    for (std::size_t wi = 0; wi < stride_; ++wi) {
      word x = p[wi];
      while (x) {
        int b = std::countr_zero(x);
        out.row_or_from(r, o, wi * kWordBits + static_cast<std::size_t>(b));
        x &= x - 1;
      }
    }
  }
  return out;
}

BitMat& BitMat::bool_or(const BitMat& o) {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  or_words(w_.data(), o.w_.data(), w_.size());
  return *this;
}

bool BitMat::operator==(const BitMat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && equal_words(w_.data(), o.w_.data(), w_.size());
}

bool BitMat::is_zero() const { return !any_word(w_.data(), w_.size()); }

BitMat BitMat::select_cols(const std::vector<int>& cols) const {
  BitMat out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (get(r, static_cast<std::size_t>(cols[j]))) out.set(r, j, true);
  return out;
}

BitMat BitMat::select_rows(const std::vector<int>& rows) const {
  BitMat out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t wi = 0; wi < stride_; ++wi)
      out.row_ptr(i)[wi] = row_ptr(static_cast<std::size_t>(rows[i]))[wi];
  return out;
}

BitMat BitMat::concat_cols(const BitMat& o) const {
  assert(rows_ == o.rows_);
  BitMat out(rows_, cols_ + o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) out.set(r, c, true);
    for (std::size_t c = 0; c < o.cols_; ++c)
      if (o.get(r, c)) out.set(r, cols_ + c, true);
  }
  return out;
}

std::vector<std::vector<int>> BitMat::to_rows01() const {
  std::vector<std::vector<int>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r].resize(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = get(r, c) ? 1 : 0;
  }
  return out;
}

std::string BitMat::str() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

std::vector<int> complement(const std::vector<int>& set, std::size_t n) {
  std::vector<bool> in(n, false);
  for (int i : set) in[static_cast<std::size_t>(i)] = true;
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i)
    if (!in[i]) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace mbqc::gf2
