// Dense GF(2) linear algebra: reduced row echelon form with recorded row
// transformation, rank, inverse, linear solves, row-space tests, and
// lexicographic enumeration of column bases of a full-row-rank matrix.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mbqc/bits.hpp"

namespace mbqc::gf2 {

struct rank_deficient_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct singular_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Rref {
  BitMat r;                 // reduced matrix, r = u * input
  BitMat u;                 // invertible row transformation
  std::vector<int> pivots;  // pivot column of each of the first pivots.size() rows
};

Rref rref(const BitMat& m);
std::size_t rank(const BitMat& m);

// Inverse of a square matrix; throws singular_error.
BitMat invert(const BitMat& m);
std::optional<BitMat> try_invert(const BitMat& m);

// One solution of a x = b with free variables set to zero, or nullopt.
std::optional<Bits> solve(const BitMat& a, const Bits& b);
// One solution of x^T a = b^T, or nullopt.
std::optional<Bits> solve_left(const BitMat& a, const Bits& b);

// Basis of the null space of a (vectors x with a x = 0).
std::vector<Bits> null_space(const BitMat& a);

bool in_row_space(const BitMat& m, const Bits& v);
bool same_row_space(const BitMat& a, const BitMat& b);

// All size-rank(m) column subsets of a full-row-rank m that are bases of its
// column space, in lexicographic order, stopping after `limit` results.
// Throws rank_deficient_error when the rows of m are dependent.
std::vector<std::vector<int>> enumerate_column_bases(
    const BitMat& m, std::size_t limit = static_cast<std::size_t>(-1));

// Lexicographically first maximal independent subset of the columns of m.
std::vector<int> greedy_column_basis(const BitMat& m);

}  // namespace mbqc::gf2
