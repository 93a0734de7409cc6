#include "mbqc/processing.hpp"

#include <algorithm>
#include <cassert>

#include "mbqc/gf2.hpp"

namespace mbqc::processing {

namespace {

void check_pair_shape(const ExtremalPair& pair, std::size_t n) {
  auto check_set = [&](const std::vector<int>& set) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] < 0 || set[i] >= static_cast<int>(n))
        throw not_extremal_error("pair index out of range");
      if (i > 0 && set[i] <= set[i - 1])
        throw not_extremal_error("pair sets must be sorted and duplicate-free");
    }
  };
  check_set(pair.i_gauge);
  check_set(pair.o_comp);
  if (pair.i_gauge.size() != pair.o_comp.size())
    throw not_extremal_error("gauge and output sets must have equal size");
}

}  // namespace

NormalForm normal_form(const stabilizer::Tableau& t, const ExtremalPair& pair) {
  std::size_t n = static_cast<std::size_t>(t.n());
  check_pair_shape(pair, n);
  std::size_t k = pair.k();
  std::vector<int> ig_c = gf2::complement(pair.i_gauge, n);
  std::vector<int> oc_c = gf2::complement(pair.o_comp, n);

  // Basis columns: primary columns of i_gauge, then third-axis columns of
  // the o_comp complement.  Invertibility of this n x n block is exactly the
  // matroid-basis condition for the pair.
  BitMat basis_cols = t.phi.select_cols(pair.i_gauge).concat_cols(t.s.select_cols(oc_c));
  auto w = gf2::try_invert(basis_cols);
  if (!w) throw invalid_pair_error("pair does not select a column basis");

  // Rows of w * [phi | s]: row j < k has a unit primary part on i_gauge (a
  // gauge row for i_gauge[j]); row k + j has a unit third-axis part on the
  // o_comp complement (a correction row for oc_c[j]).
  BitMat phi_new = w->mul(t.phi);
  BitMat s_new = w->mul(t.s);

  NormalForm nf;
  nf.pair = pair;
  nf.tt = BitMat(ig_c.size(), oc_c.size());
  nf.hh = BitMat(ig_c.size(), k);
  nf.zz = BitMat(k, oc_c.size());
  nf.rr = BitMat(k, k);
  nf.phi = BitMat(n, n);
  nf.s = BitMat(n, n);

  // Correction rows first, then gauge rows.
  for (std::size_t j = 0; j < oc_c.size(); ++j) {
    std::size_t src = k + j;
    nf.phi.set_row(j, phi_new.row(src));
    nf.s.set_row(j, s_new.row(src));
    for (std::size_t b = 0; b < ig_c.size(); ++b)
      if (phi_new.get(src, static_cast<std::size_t>(ig_c[b]))) nf.tt.set(b, j, true);
    for (std::size_t o = 0; o < k; ++o)
      if (s_new.get(src, static_cast<std::size_t>(pair.o_comp[o]))) nf.zz.set(o, j, true);
  }
  for (std::size_t j = 0; j < k; ++j) {
    nf.phi.set_row(oc_c.size() + j, phi_new.row(j));
    nf.s.set_row(oc_c.size() + j, s_new.row(j));
    for (std::size_t b = 0; b < ig_c.size(); ++b)
      if (phi_new.get(j, static_cast<std::size_t>(ig_c[b]))) nf.hh.set(b, j, true);
    for (std::size_t o = 0; o < k; ++o)
      if (s_new.get(j, static_cast<std::size_t>(pair.o_comp[o]))) nf.rr.set(o, j, true);
  }

  // Stricter overlap reading: a gauge row for i should carry a plain
  // primary-axis factor at i even when i is also in o_comp.
  for (std::size_t j = 0; j < k; ++j) {
    int i = pair.i_gauge[j];
    if (std::binary_search(pair.o_comp.begin(), pair.o_comp.end(), i) &&
        s_new.get(j, static_cast<std::size_t>(i)))
      nf.def9_strict = false;
  }
  return nf;
}

Relations extract_relations(const NormalForm& nf) {
  std::size_t n = nf.phi.rows();
  std::size_t k = nf.pair.k();
  std::vector<int> ig_c = gf2::complement(nf.pair.i_gauge, n);
  std::vector<int> oc_c = gf2::complement(nf.pair.o_comp, n);

  Relations rel;
  rel.pair = nf.pair;
  rel.t = BitMat(n, n);
  rel.h = BitMat(n, k);
  rel.z = BitMat(k, n);
  rel.r = nf.rr;

  for (std::size_t b = 0; b < ig_c.size(); ++b)
    for (std::size_t j = 0; j < oc_c.size(); ++j)
      if (nf.tt.get(b, j))
        rel.t.set(static_cast<std::size_t>(ig_c[b]), static_cast<std::size_t>(oc_c[j]), true);
  for (std::size_t b = 0; b < ig_c.size(); ++b)
    for (std::size_t j = 0; j < k; ++j)
      if (nf.hh.get(b, j)) rel.h.set(static_cast<std::size_t>(ig_c[b]), j, true);
  for (std::size_t j = 0; j < k; ++j) rel.h.set(static_cast<std::size_t>(nf.pair.i_gauge[j]), j, true);
  for (std::size_t o = 0; o < k; ++o)
    for (std::size_t j = 0; j < oc_c.size(); ++j)
      if (nf.zz.get(o, j)) rel.z.set(o, static_cast<std::size_t>(oc_c[j]), true);
  for (std::size_t o = 0; o < k; ++o) rel.z.set(o, static_cast<std::size_t>(nf.pair.o_comp[o]), true);
  return rel;
}

std::vector<std::pair<ExtremalPair, Relations>> enumerate_pairs(const stabilizer::Tableau& t,
                                                                std::size_t limit) {
  std::size_t n = static_cast<std::size_t>(t.n());
  auto bases = gf2::enumerate_column_bases(t.concat(), limit);
  std::vector<std::pair<ExtremalPair, Relations>> out;
  out.reserve(bases.size());
  for (const auto& basis : bases) {
    ExtremalPair pair;
    std::vector<bool> s_in_basis(n, false);
    for (int c : basis) {
      if (c < static_cast<int>(n))
        pair.i_gauge.push_back(c);
      else
        s_in_basis[static_cast<std::size_t>(c) - n] = true;
    }
    for (std::size_t a = 0; a < n; ++a)
      if (!s_in_basis[a]) pair.o_comp.push_back(static_cast<int>(a));
    out.emplace_back(pair, extract_relations(normal_form(t, pair)));
  }
  return out;
}

ExtremalPair find_extremal_pair(const stabilizer::Tableau& t, const BitMat& influence) {
  std::size_t n = static_cast<std::size_t>(t.n());
  assert(influence.rows() == n && influence.cols() == n);
  std::vector<int> inputs, outputs;
  for (std::size_t q = 0; q < n; ++q) {
    if (!influence.row_any(q)) inputs.push_back(static_cast<int>(q));
    if (!influence.col_any(q)) outputs.push_back(static_cast<int>(q));
  }
  std::vector<int> in_c = gf2::complement(inputs, n);
  std::vector<int> out_c = gf2::complement(outputs, n);

  // Reduce the generators against the column order [s on non-outputs | phi
  // on inputs | phi on non-inputs | s on outputs].  After full reduction,
  // rows pivoting in the first block realize correction structure; among the
  // rest, a pivot inside "phi on non-inputs" exposes gauge freedom outside
  // the inputs, pivots in "phi on inputs" span the gauge candidates and
  // pivots in "s on outputs" span the output redundancy.
  BitMat permuted = t.s.select_cols(out_c)
                        .concat_cols(t.phi.select_cols(inputs))
                        .concat_cols(t.phi.select_cols(in_c))
                        .concat_cols(t.s.select_cols(outputs));
  gf2::Rref rr = gf2::rref(permuted);

  std::size_t b0 = out_c.size();               // end of the s-non-output block
  std::size_t b1 = b0 + inputs.size();         // end of the phi-input block
  std::size_t b2 = b1 + in_c.size();           // end of the phi-non-input block

  std::vector<int> gauge_rows, redundancy_rows;
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    std::size_t p = static_cast<std::size_t>(rr.pivots[i]);
    if (p < b0) continue;
    if (p < b1) {
      gauge_rows.push_back(static_cast<int>(i));
    } else if (p < b2) {
      throw gaugeable_outside_input_error("gauge freedom reaches outside the influence inputs");
    } else {
      redundancy_rows.push_back(static_cast<int>(i));
    }
  }

  // Output redundancy: lexicographically first maximal independent columns
  // over the outputs, removed from the output set.
  BitMat red = rr.r.select_rows(redundancy_rows)
                   .select_cols([&] {
                     std::vector<int> cols(outputs.size());
                     for (std::size_t j = 0; j < outputs.size(); ++j)
                       cols[j] = static_cast<int>(b2 + j);
                     return cols;
                   }());
  std::vector<int> delta = gf2::greedy_column_basis(red);
  std::vector<bool> removed(outputs.size(), false);
  for (int j : delta) removed[static_cast<std::size_t>(j)] = true;

  BitMat gauge = rr.r.select_rows(gauge_rows).select_cols([&] {
    std::vector<int> cols(inputs.size());
    for (std::size_t j = 0; j < inputs.size(); ++j) cols[j] = static_cast<int>(b0 + j);
    return cols;
  }());
  std::vector<int> gauge_cols = gf2::greedy_column_basis(gauge);

  ExtremalPair pair;
  for (int j : gauge_cols) pair.i_gauge.push_back(inputs[static_cast<std::size_t>(j)]);
  for (std::size_t j = 0; j < outputs.size(); ++j)
    if (!removed[j]) pair.o_comp.push_back(outputs[j]);

  Relations check;
  try {
    check = extract_relations(normal_form(t, pair));
  } catch (const invalid_pair_error&) {
    throw inconsistent_error("influence matrix is not reproduced by this tableau");
  } catch (const not_extremal_error&) {
    throw inconsistent_error("influence matrix is not reproduced by this tableau");
  }
  if (!(check.t == influence))
    throw inconsistent_error("influence matrix is not reproduced by this tableau");
  return pair;
}

stabilizer::Tableau reconstruct_tableau(const Relations& rel) {
  std::size_t n = rel.n();
  std::size_t k = rel.pair.k();
  check_pair_shape(rel.pair, n);
  assert(rel.h.cols() == k && rel.z.rows() == k && rel.r.rows() == k && rel.r.cols() == k);
  std::vector<int> ig_c = gf2::complement(rel.pair.i_gauge, n);
  std::vector<int> oc_c = gf2::complement(rel.pair.o_comp, n);

  if (gf2::rank(rel.h) != gf2::rank(rel.z))
    throw rank_mismatch_error("gauge and output relations have different ranks");

  // Left-normalize Z so its o_comp block is an identity; the same transform
  // applies to R.
  auto mz_inv = gf2::try_invert(rel.z.select_cols(rel.pair.o_comp));
  if (!mz_inv) throw not_optimal_output_error("output-column block of Z is not invertible");
  BitMat z_n = mz_inv->mul(rel.z);
  BitMat r_mid = mz_inv->mul(rel.r);

  // Right-normalize H so its i_gauge block is an identity; R follows.
  auto lam = gf2::try_invert(rel.h.select_rows(rel.pair.i_gauge));
  if (!lam) throw rank_mismatch_error("gauge-row block of H is not invertible");
  BitMat h_n = rel.h.mul(*lam);
  BitMat r_n = r_mid.mul(*lam);

  BitMat tt = rel.t.select_rows(ig_c).select_cols(oc_c);
  BitMat hh = h_n.select_rows(ig_c);
  BitMat zz = z_n.select_cols(oc_c);

  stabilizer::Tableau out{BitMat(n, n), BitMat(n, n),
                          std::vector<stabilizer::Frame>(n, stabilizer::Frame::XY)};
  // Correction row for each non-output qubit, gauge row for each gauge qubit.
  for (std::size_t j = 0; j < oc_c.size(); ++j) {
    for (std::size_t b = 0; b < ig_c.size(); ++b)
      if (tt.get(b, j)) out.phi.set(j, static_cast<std::size_t>(ig_c[b]), true);
    out.s.set(j, static_cast<std::size_t>(oc_c[j]), true);
    for (std::size_t o = 0; o < k; ++o)
      if (zz.get(o, j)) out.s.set(j, static_cast<std::size_t>(rel.pair.o_comp[o]), true);
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t row = oc_c.size() + j;
    out.phi.set(row, static_cast<std::size_t>(rel.pair.i_gauge[j]), true);
    for (std::size_t b = 0; b < ig_c.size(); ++b)
      if (hh.get(b, j)) out.phi.set(row, static_cast<std::size_t>(ig_c[b]), true);
    for (std::size_t o = 0; o < k; ++o)
      if (r_n.get(o, j)) out.s.set(row, static_cast<std::size_t>(rel.pair.o_comp[o]), true);
  }

  auto report = stabilizer::validate(out);
  if (report.kind == stabilizer::ValidationReport::NonCommuting)
    throw non_commuting_error("reconstructed rows do not commute");
  if (report.kind == stabilizer::ValidationReport::DependentGenerators)
    throw rank_mismatch_error("reconstructed rows are dependent");
  return out;
}

AuditReport pair_invariance_audit(const stabilizer::Tableau& t,
                                  const std::vector<ExtremalPair>& pairs) {
  std::vector<stabilizer::Tableau> rebuilt;
  rebuilt.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    Relations rel = extract_relations(normal_form(t, pairs[i]));
    stabilizer::Tableau back = reconstruct_tableau(rel);
    if (!stabilizer::same_group(t, back)) return {false, static_cast<int>(i), -1};
    rebuilt.push_back(std::move(back));
  }
  for (std::size_t i = 0; i < rebuilt.size(); ++i)
    for (std::size_t j = i + 1; j < rebuilt.size(); ++j)
      if (!stabilizer::same_group(rebuilt[i], rebuilt[j]))
        return {false, static_cast<int>(i), static_cast<int>(j)};
  return {};
}

}  // namespace mbqc::processing
