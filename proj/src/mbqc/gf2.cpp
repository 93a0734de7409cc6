#include "mbqc/gf2.hpp"

#include <cassert>

namespace mbqc::gf2 {

Rref rref(const BitMat& m) {
  Rref out{m, BitMat::identity(m.rows()), {}};
  std::size_t nr = m.rows(), nc = m.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t piv = row;
    while (piv < nr && !out.r.get(piv, col)) ++piv;
    if (piv == nr) continue;
    out.r.swap_rows(row, piv);
    out.u.swap_rows(row, piv);
    for (std::size_t i = 0; i < nr; ++i) {
      if (i != row && out.r.get(i, col)) {
        out.r.row_xor(i, row);
        out.u.row_xor(i, row);
      }
    }
    out.pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return out;
}

std::size_t rank(const BitMat& m) { return rref(m).pivots.size(); }

std::optional<BitMat> try_invert(const BitMat& m) {
  assert(m.rows() == m.cols());
  Rref rr = rref(m);
  if (rr.pivots.size() != m.rows()) return std::nullopt;
  return rr.u;
}

BitMat invert(const BitMat& m) {
  auto inv = try_invert(m);
  if (!inv) throw singular_error("matrix is singular");
  return *inv;
}

std::optional<Bits> solve(const BitMat& a, const Bits& b) {
  assert(b.size() == a.rows());
  Rref rr = rref(a);
  Bits ub = rr.u.mul_vec(b);
  std::size_t npiv = rr.pivots.size();
  for (std::size_t i = npiv; i < a.rows(); ++i)
    if (ub.get(i)) return std::nullopt;
  Bits x(a.cols());
  for (std::size_t i = 0; i < npiv; ++i)
    if (ub.get(i)) x.set(static_cast<std::size_t>(rr.pivots[i]), true);
  return x;
}

std::optional<Bits> solve_left(const BitMat& a, const Bits& b) {
  return solve(a.transposed(), b);
}

std::vector<Bits> null_space(const BitMat& a) {
  Rref rr = rref(a);
  std::vector<int> free_cols = complement(rr.pivots, a.cols());
  std::vector<Bits> basis;
  basis.reserve(free_cols.size());
  for (int fc : free_cols) {
    Bits v(a.cols());
    v.set(static_cast<std::size_t>(fc), true);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      if (rr.r.get(i, static_cast<std::size_t>(fc)))
        v.set(static_cast<std::size_t>(rr.pivots[i]), true);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_row_space(const BitMat& m, const Bits& v) {
  assert(v.size() == m.cols());
  Rref rr = rref(m);
  Bits red = v;
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    if (red.get(static_cast<std::size_t>(rr.pivots[i]))) red ^= rr.r.row(i);
  return red.none();
}

bool same_row_space(const BitMat& a, const BitMat& b) {
  if (a.cols() != b.cols()) return false;
  Rref ra = rref(a);
  Rref rb = rref(b);
  if (ra.pivots != rb.pivots) return false;
  for (std::size_t i = 0; i < ra.pivots.size(); ++i)
    if (!(ra.r.row(i) == rb.r.row(i))) return false;
  return true;
}

namespace {

// DFS state for basis enumeration: candidate columns are reduced against the
// greedily collected independent set, one reduction row per chosen column.
struct BasisDfs {
  const BitMat* cols;  // transposed input: row j = column j of the original
  std::size_t need;
  std::size_t ncols;
  std::size_t limit;
  std::vector<Bits> reduced;   // reduced form of the chosen columns
  std::vector<int> red_pivot;  // leading bit of each reduced column
  std::vector<int> chosen;
  std::vector<std::vector<int>> out;

  bool run(std::size_t start) {
    if (chosen.size() == need) {
      out.push_back(chosen);
      return out.size() < limit;
    }
    for (std::size_t c = start; c + (need - chosen.size()) <= ncols; ++c) {
      Bits v = cols->row(c);
      for (std::size_t i = 0; i < reduced.size(); ++i)
        if (v.get(static_cast<std::size_t>(red_pivot[i]))) v ^= reduced[i];
      if (v.none()) continue;
      int piv = v.ones().front();
      reduced.push_back(v);
      red_pivot.push_back(piv);
      chosen.push_back(static_cast<int>(c));
      bool keep_going = run(c + 1);
      chosen.pop_back();
      red_pivot.pop_back();
      reduced.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

std::vector<std::vector<int>> enumerate_column_bases(const BitMat& m, std::size_t limit) {
  std::size_t r = rank(m);
  if (r != m.rows())
    throw rank_deficient_error("column basis enumeration requires independent rows");
  BitMat cols = m.transposed();
  BasisDfs dfs{&cols, r, m.cols(), limit, {}, {}, {}, {}};
  if (limit > 0) dfs.run(0);
  return std::move(dfs.out);
}

std::vector<int> greedy_column_basis(const BitMat& m) {
  BitMat cols = m.transposed();
  std::vector<Bits> reduced;
  std::vector<int> red_pivot;
  std::vector<int> chosen;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Bits v = cols.row(c);
    for (std::size_t i = 0; i < reduced.size(); ++i)
      if (v.get(static_cast<std::size_t>(red_pivot[i]))) v ^= reduced[i];
    if (v.none()) continue;
    red_pivot.push_back(v.ones().front());
    reduced.push_back(std::move(v));
    chosen.push_back(static_cast<int>(c));
  }
  return chosen;
}

}  // namespace mbqc::gf2
