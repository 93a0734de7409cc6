// Binary stabilizer tableaux over per-qubit measurement frames.
//
// A frame names which Pauli axis plays the in-plane primary role and which
// plays the in-plane secondary role at a qubit; the third axis is fixed by
// the right-handed product rule.  Generators are stored as packed bit rows:
// phi holds the primary-axis exponents (w parts), s holds the third-axis
// exponents (v parts); a (v,w) = (1,1) entry is the secondary axis.  Phases
// are not tracked; the simulation layer pins every generator to +1.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mbqc/bits.hpp"
#include "mbqc/gf2.hpp"

namespace mbqc::stabilizer {

using gf2::BitMat;
using gf2::Bits;

enum class Frame : std::uint8_t { XY, YX, YZ, ZY, ZX, XZ };

Frame frame_from_string(const std::string& s);
std::string frame_to_string(Frame f);
// Primary / secondary axis letters ('X', 'Y', 'Z').
char frame_primary(Frame f);
char frame_secondary(Frame f);
// Frame with the two in-plane roles exchanged.
Frame frame_swapped(Frame f);
// True when the frame's in-plane axes are X and Y in either order.
bool frame_is_equatorial(Frame f);

struct GraphSpec {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based, undirected, no self loops
};

BitMat adjacency(const GraphSpec& g);

struct Tableau {
  BitMat phi;                 // n x n, row per generator: primary-axis exponents
  BitMat s;                   // n x n, row per generator: third-axis exponents
  std::vector<Frame> frames;  // per qubit

  int n() const { return static_cast<int>(frames.size()); }
  // [phi | s] as one n x 2n matrix.
  BitMat concat() const { return phi.concat_cols(s); }
};

struct frame_incompatible_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tableau of the graph state: generator a acts as the primary-or-other role
// of X at a and of Z at each neighbor, re-encoded per that qubit's frame.
Tableau graph_state_tableau(const GraphSpec& g, const std::vector<Frame>& frames);

struct ValidationReport {
  enum Kind { Ok, NonCommuting, DependentGenerators };
  Kind kind = Ok;
  int row_i = -1, row_j = -1;  // offending generator pair for NonCommuting
  bool ok() const { return kind == Ok; }
};

// Checks pairwise symplectic orthogonality and full rank of [phi | s].
ValidationReport validate(const Tableau& t);

struct RowProduct {
  Bits w;  // primary-axis exponents of the product
  Bits v;  // third-axis exponents of the product
};

// Product of a subset of generators, phases dropped.
RowProduct row_product(const Tableau& t, const std::vector<int>& rows);

// Plane-swap bookkeeping at one qubit: the frame's roles are exchanged and
// every generator's entry at that qubit is re-encoded (s column += phi
// column).  The generated group is unchanged.
Tableau flip_frame(const Tableau& t, int qubit);

// Row-space equality of the [phi | s] encodings.
bool same_group(const Tableau& a, const Tableau& b);

}  // namespace mbqc::stabilizer
