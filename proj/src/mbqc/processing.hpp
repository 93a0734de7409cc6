// Gauge/correction structure of a stabilizer tableau.
//
// An extremal pair (i_gauge, o_comp) of equal-size qubit sets selects a
// normal form of the generator set: one correction row per qubit outside
// o_comp (third-axis part is a unit vector there, primary part vanishes on
// i_gauge) and one gauge row per qubit of i_gauge (primary part is a unit
// vector there, third-axis part vanishes outside o_comp).  The blocks of
// those rows embed into the full relation matrices
//   q = T s + H g,   o = Z s + R g
// mapping outcomes s and gauge choices g to basis adaptations q and output
// bits o.  Valid pairs are exactly the column-matroid bases of [phi | s].
#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mbqc/bits.hpp"
#include "mbqc/stabilizer.hpp"

namespace mbqc::processing {

using gf2::BitMat;
using gf2::Bits;

struct not_extremal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct invalid_pair_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct gaugeable_outside_input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct inconsistent_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct rank_mismatch_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct not_optimal_output_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct non_commuting_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExtremalPair {
  std::vector<int> i_gauge;  // 0-based, sorted
  std::vector<int> o_comp;   // 0-based, sorted
  std::size_t k() const { return i_gauge.size(); }
  bool operator==(const ExtremalPair&) const = default;
};

struct NormalForm {
  ExtremalPair pair;
  // Blocks, with rows/columns following the ascending complements and sets:
  //   tt: (n-k) x (n-k)   correction-row primary parts outside i_gauge
  //   hh: (n-k) x k       gauge-row primary parts outside i_gauge
  //   zz: k x (n-k)       correction-row third-axis parts on o_comp
  //   rr: k x k           gauge-row third-axis parts on o_comp
  BitMat tt, hh, zz, rr;
  // The transformed generators: correction rows first (ascending over the
  // complement of o_comp), then gauge rows (ascending over i_gauge).
  BitMat phi, s;
  // True when every gauge row at a qubit shared by both sets carries a plain
  // primary-axis factor there (the stricter reading for overlapping pairs).
  bool def9_strict = true;
};

struct Relations {
  ExtremalPair pair;
  BitMat t;  // n x n
  BitMat h;  // n x k
  BitMat z;  // k x n
  BitMat r;  // k x k
  std::size_t n() const { return t.rows(); }
};

// Throws not_extremal_error on malformed pairs and invalid_pair_error when
// the pair's column set is not a basis.
NormalForm normal_form(const stabilizer::Tableau& t, const ExtremalPair& pair);

// Embeds the normal-form blocks into full-size relation matrices: T has zero
// rows on i_gauge and zero columns on o_comp, H carries an identity on the
// i_gauge rows, Z an identity on the o_comp columns.
Relations extract_relations(const NormalForm& nf);

// All valid pairs of a tableau via column-basis enumeration of [phi | s], in
// lexicographic basis order, with their relations.
std::vector<std::pair<ExtremalPair, Relations>> enumerate_pairs(
    const stabilizer::Tableau& t, std::size_t limit = static_cast<std::size_t>(-1));

// Recovers the unique extremal pair whose relations reproduce the given
// influence matrix.  Throws gaugeable_outside_input_error when the tableau
// admits gauge freedom outside the influence inputs, inconsistent_error when
// no pair of this tableau reproduces T.
ExtremalPair find_extremal_pair(const stabilizer::Tableau& t, const BitMat& influence);

// Rebuilds a tableau generating the group described by full-size relations.
// Throws rank_mismatch_error (rank(H) != rank(Z) or the H gauge block is not
// invertible), not_optimal_output_error (the Z output-column block is not
// invertible), non_commuting_error (assembled rows fail validation).
stabilizer::Tableau reconstruct_tableau(const Relations& rel);

struct AuditReport {
  bool ok = true;
  // First failure, when not ok: pair indices into the audited list (second
  // index -1 for a single-pair round-trip failure).
  int pair_a = -1, pair_b = -1;
};

// Round-trips every pair's relations through reconstruct_tableau and checks
// all reconstructions generate the original group.
AuditReport pair_invariance_audit(const stabilizer::Tableau& t,
                                  const std::vector<ExtremalPair>& pairs);

}  // namespace mbqc::processing
