#include "mbqc/transforms.hpp"

#include <algorithm>
#include <cassert>

#include "mbqc/gf2.hpp"
#include "mbqc/temporal.hpp"

namespace mbqc::transforms {

Bits restrict_bits(const Bits& x, const std::vector<int>& idx) {
  Bits out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (x.get(static_cast<std::size_t>(idx[i]))) out.set(i, true);
  return out;
}

namespace {

// Rank-one update col * row^T.
BitMat outer(const Bits& col, const Bits& row) {
  BitMat m(col.size(), row.size());
  for (int r : col.ones())
    for (int c : row.ones()) m.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), true);
  return m;
}

}  // namespace

GaugeAction gauge_action(const stabilizer::Tableau& t, const processing::Relations& rel,
                         const std::vector<int>& rows) {
  stabilizer::RowProduct p = stabilizer::row_product(t, rows);
  return {p.v, p.w, restrict_bits(p.w, rel.pair.i_gauge)};
}

InvarianceReport check_invariance_delta(const processing::Relations& rel, const GaugeAction& a) {
  Bits q = rel.t.mul_vec(a.ds) ^ rel.h.mul_vec(a.dg);
  if (!(q == a.dq)) return {false, -1, InvarianceReport::QRelation};
  Bits o = rel.z.mul_vec(a.ds) ^ rel.r.mul_vec(a.dg);
  if (o.any()) return {false, -1, InvarianceReport::ORelation};
  return {};
}

InvarianceReport check_invariance(const stabilizer::Tableau& t,
                                  const processing::Relations& rel) {
  for (int row = 0; row < t.n(); ++row) {
    InvarianceReport r = check_invariance_delta(rel, gauge_action(t, rel, {row}));
    if (!r.ok) return {false, row, r.which};
  }
  return {};
}

processing::Relations relations_from_invariance(const stabilizer::Tableau& t,
                                                const processing::ExtremalPair& pair) {
  std::size_t n = static_cast<std::size_t>(t.n());
  std::size_t k = pair.k();
  std::vector<int> ig_c = gf2::complement(pair.i_gauge, n);
  std::vector<int> oc_c = gf2::complement(pair.o_comp, n);

  // Generator basis change: reduce with the i_gauge primary columns first so
  // the leading k rows carry unit primary parts there and the rest none.
  BitMat permuted = t.phi.select_cols(pair.i_gauge)
                        .concat_cols(t.phi.select_cols(ig_c))
                        .concat_cols(t.s);
  gf2::Rref rr = gf2::rref(permuted);
  for (std::size_t j = 0; j < k; ++j)
    if (j >= rr.pivots.size() || rr.pivots[j] != static_cast<int>(j))
      throw singular_s2_error("primary block on the gauge set is rank deficient");

  // Transformed generators in original column order.
  BitMat phi_new = rr.u.mul(t.phi);
  BitMat s_new = rr.u.mul(t.s);

  std::vector<int> g_rows(k), h_rows(n - k);
  for (std::size_t j = 0; j < k; ++j) g_rows[j] = static_cast<int>(j);
  for (std::size_t j = k; j < n; ++j) h_rows[j - k] = static_cast<int>(j);

  BitMat phi1 = phi_new.select_rows(g_rows).select_cols(ig_c).transposed();
  BitMat phi2 = phi_new.select_rows(h_rows).select_cols(ig_c).transposed();
  BitMat s1 = s_new.select_rows(g_rows).select_cols(oc_c).transposed();
  BitMat s2 = s_new.select_rows(h_rows).select_cols(oc_c).transposed();

  auto s2_inv = gf2::try_invert(s2);
  if (!s2_inv) throw singular_s2_error("outcome block of the reduced generators is singular");

  BitMat tt = phi2.mul(*s2_inv);
  BitMat hh = phi1 ^ tt.mul(s1);

  BitMat s4 = s_new.select_rows(h_rows).select_cols(pair.o_comp).transposed();
  BitMat zz = s4.mul(*s2_inv);

  processing::Relations rel;
  rel.pair = pair;
  rel.t = BitMat(n, n);
  rel.h = BitMat(n, k);
  rel.z = BitMat(k, n);
  rel.r = BitMat(k, k);
  for (std::size_t b = 0; b < ig_c.size(); ++b)
    for (std::size_t c = 0; c < oc_c.size(); ++c)
      if (tt.get(b, c))
        rel.t.set(static_cast<std::size_t>(ig_c[b]), static_cast<std::size_t>(oc_c[c]), true);
  for (std::size_t b = 0; b < ig_c.size(); ++b)
    for (std::size_t j = 0; j < k; ++j)
      if (hh.get(b, j)) rel.h.set(static_cast<std::size_t>(ig_c[b]), j, true);
  for (std::size_t j = 0; j < k; ++j)
    rel.h.set(static_cast<std::size_t>(pair.i_gauge[j]), j, true);
  for (std::size_t o = 0; o < k; ++o)
    for (std::size_t c = 0; c < oc_c.size(); ++c)
      if (zz.get(o, c)) rel.z.set(o, static_cast<std::size_t>(oc_c[c]), true);
  for (std::size_t o = 0; o < k; ++o)
    rel.z.set(o, static_cast<std::size_t>(pair.o_comp[o]), true);
  // Output relation on each leading generator fixes the matching R column.
  for (std::size_t j = 0; j < k; ++j) {
    Bits v = s_new.row(j);
    Bits col = rel.z.mul_vec(v);
    for (std::size_t o = 0; o < k; ++o)
      if (col.get(o)) rel.r.set(o, j, true);
  }
  return rel;
}

FlipPlane flip_plane(const processing::Relations& rel, int a) {
  std::size_t sa = static_cast<std::size_t>(a);
  if (rel.t.get(sa, sa)) throw self_loop_error("flip site has a direct self-influence");
  Bits te = rel.t.col(sa);
  Bits et = rel.t.row(sa);
  Bits eh = rel.h.row(sa);
  Bits ze = rel.z.col(sa);

  processing::Relations out = rel;
  out.t ^= outer(te, et);
  out.h ^= outer(te, eh);
  out.z ^= outer(ze, et);
  out.r ^= outer(ze, eh);
  return {std::move(out), a};
}

BitMat extended_influence(const processing::Relations& rel) {
  std::size_t n = rel.n();
  std::size_t k = rel.pair.k();
  std::size_t total = k + n + k;
  BitMat ext(total, total);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t j = 0; j < k; ++j)
      if (rel.h.get(q, j)) ext.set(k + q, j, true);
    for (std::size_t c = 0; c < n; ++c)
      if (rel.t.get(q, c)) ext.set(k + q, k + c, true);
  }
  for (std::size_t o = 0; o < k; ++o) {
    for (std::size_t j = 0; j < k; ++j)
      if (rel.r.get(o, j)) ext.set(k + n + o, j, true);
    for (std::size_t c = 0; c < n; ++c)
      if (rel.z.get(o, c)) ext.set(k + n + o, k + c, true);
  }
  return ext;
}

BitMat flip_square(const BitMat& m, int index) {
  std::size_t i = static_cast<std::size_t>(index);
  BitMat out = m;
  out ^= outer(m.col(i), m.row(i));
  return out;
}

ModifiedFlip modified_flip(const BitMat& t, int i) {
  for (std::size_t q = 0; q < t.rows(); ++q)
    if (t.get(q, q)) throw nonzero_diagonal_error("influence matrix has a nonzero diagonal");
  std::size_t si = static_cast<std::size_t>(i);
  BitMat update = outer(t.col(si), t.row(si));
  BitMat out = t ^ update;
  for (std::size_t q = 0; q < t.rows(); ++q)
    if (update.get(q, q)) out.flip(q, q);

  ModifiedFlip mf;
  mf.t = std::move(out);
  Bits both = t.col(si);
  for (int q : both.ones())
    if (t.get(si, static_cast<std::size_t>(q))) mf.role_changed.push_back(q);
  return mf;
}

bool same_relation(const BitMat& a, const BitMat& b) {
  return temporal::closure(a) == temporal::closure(b);
}

CtcRemoval remove_ctc1(const stabilizer::Tableau& t, const processing::Relations& rel, int i) {
  std::size_t si = static_cast<std::size_t>(i);
  if (!rel.t.get(si, si)) throw no_self_loop_error("site has no direct self-influence");
  if (std::binary_search(rel.pair.i_gauge.begin(), rel.pair.i_gauge.end(), i) ||
      std::binary_search(rel.pair.o_comp.begin(), rel.pair.o_comp.end(), i))
    throw pair_conflict_error("site already belongs to the pair");

  CtcRemoval out;
  out.site = i;
  out.flipped = stabilizer::flip_frame(t, i);

  processing::ExtremalPair grown = rel.pair;
  grown.i_gauge.insert(std::upper_bound(grown.i_gauge.begin(), grown.i_gauge.end(), i), i);
  grown.o_comp.insert(std::upper_bound(grown.o_comp.begin(), grown.o_comp.end(), i), i);
  out.rel = processing::extract_relations(processing::normal_form(out.flipped, grown));

  auto pos = [&](const std::vector<int>& v) {
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), i) - v.begin());
  };
  out.flag_output = pos(grown.o_comp);
  out.site_gauge = pos(grown.i_gauge);
  out.horizon_isolated = !out.rel.t.row_any(si) && !out.rel.t.col_any(si);
  return out;
}

}  // namespace mbqc::transforms
