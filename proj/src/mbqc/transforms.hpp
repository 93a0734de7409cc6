// Transformations of relations and tableaux: gauge actions of generator
// products, invariance checking of the relation matrices, an independent
// derivation of the relations from the invariance conditions, in-plane flip
// moves and their extended-matrix form, and removal of a length-one cycle by
// a plane flip that grows the pair.
#pragma once

#include <stdexcept>
#include <vector>

#include "mbqc/bits.hpp"
#include "mbqc/processing.hpp"
#include "mbqc/stabilizer.hpp"

namespace mbqc::transforms {

using gf2::BitMat;
using gf2::Bits;

struct singular_s2_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct self_loop_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct nonzero_diagonal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct no_self_loop_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct pair_conflict_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Entries of x at the given sorted positions, reindexed to 0..idx.size()-1.
Bits restrict_bits(const Bits& x, const std::vector<int>& idx);

struct GaugeAction {
  Bits ds;  // outcome relabeling (third-axis parts)
  Bits dq;  // basis relabeling (primary parts)
  Bits dg;  // gauge relabeling (primary parts on i_gauge)
};

// Action of inserting the product of the given generator rows.
GaugeAction gauge_action(const stabilizer::Tableau& t, const processing::Relations& rel,
                         const std::vector<int>& rows);

struct InvarianceReport {
  enum Which { None, QRelation, ORelation };
  bool ok = true;
  int row = -1;
  Which which = None;
};

// Verifies both relation matrices are invariant under every generator's
// gauge action.
InvarianceReport check_invariance(const stabilizer::Tableau& t,
                                  const processing::Relations& rel);
// Same conditions for one explicit action (callers may force dg to zero to
// probe the role of the gauge term).
InvarianceReport check_invariance_delta(const processing::Relations& rel, const GaugeAction& a);

// Derives the relations directly from the invariance conditions: change the
// generator basis so the first k generators carry unit primary parts on
// i_gauge and the rest none, then solve the block equations.  Independent of
// the normal-form construction.  Throws singular_s2_error when the required
// blocks are not invertible.
processing::Relations relations_from_invariance(const stabilizer::Tableau& t,
                                                const processing::ExtremalPair& pair);

struct FlipPlane {
  processing::Relations rel;
  int site = -1;  // qubit whose in-plane roles swap
};

// In-plane flip at a site with no direct self-influence.  Throws
// self_loop_error when t[a][a] = 1.
FlipPlane flip_plane(const processing::Relations& rel, int a);

// Influence matrix over the extended index set [gauge inputs | qubits |
// outputs]: rows of the qubit block are [H | T | 0], rows of the output
// block are [R | Z | 0], gauge-input rows vanish.
BitMat extended_influence(const processing::Relations& rel);

// The flip move applied directly to an extended (or any square) influence
// matrix: m + m e e^T m at the given index.
BitMat flip_square(const BitMat& m, int index);

struct ModifiedFlip {
  BitMat t;
  std::vector<int> role_changed;  // sites in both cones of i: fc(i) & bc(i)
};

// Flip variant that cancels the diagonal of the update term; preserves a
// zero diagonal.  Throws nonzero_diagonal_error unless diag(t) = 0.
ModifiedFlip modified_flip(const BitMat& t, int i);

// Equality of influence relations up to transitivity (closure equality).
bool same_relation(const BitMat& a, const BitMat& b);

struct CtcRemoval {
  stabilizer::Tableau flipped;     // tableau after the plane swap at the site
  processing::Relations rel;       // relations for the grown pair
  int site = -1;
  int flag_output = -1;            // index of the site within the new o_comp
  int site_gauge = -1;             // index of the site within the new i_gauge
  bool horizon_isolated = false;   // both cones of the site empty afterwards
};

// Removes a direct self-influence at qubit i by swapping its in-plane roles
// and growing the pair by i on both sides.  Throws no_self_loop_error when
// t[i][i] = 0 and pair_conflict_error when i already belongs to the pair.
CtcRemoval remove_ctc1(const stabilizer::Tableau& t, const processing::Relations& rel, int i);

}  // namespace mbqc::transforms
