// Dense state-vector oracle for measurement programs.
//
// States are built so that every tableau row, read role-faithfully (primary
// axis, secondary axis, third axis with its exact sign), stabilizes the
// state with eigenvalue +1.  Measurements walk the qubits in a given order,
// adapt each basis from earlier outcomes through the relation matrices, and
// enumerate all outcome branches with exact Born probabilities.  Sites
// marked flip-adjusted are measured in their original plane at the
// per-branch angle (q ? pi - angle : angle), which realizes the plane-swap
// labeling convention.
#pragma once

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mbqc/bits.hpp"
#include "mbqc/processing.hpp"
#include "mbqc/stabilizer.hpp"

namespace mbqc::oracle {

using Amp = std::complex<double>;
using gf2::Bits;

struct size_cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct inconsistent_phase_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct order_violation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct zero_success_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Simulation size cap: MBQC_MAX_QUBITS when set, else 10.
int max_qubits();

struct Program {
  stabilizer::Tableau t;
  std::optional<stabilizer::GraphSpec> graph;  // enables the circuit-based build
  processing::Relations rel;
  std::vector<double> angles;       // per qubit, radians; empty means all zero
  std::vector<int> order;           // measurement order; empty means round order
  std::vector<bool> flip_adjusted;  // per qubit; empty means none
};

// The state +1-stabilized by every tableau row.  Graph-backed tableaux go
// through the entangling circuit plus per-qubit frame Cliffords; any other
// tableau through the joint eigenspace projector.
std::vector<Amp> build_state(const stabilizer::Tableau& t,
                             const std::optional<stabilizer::GraphSpec>& graph);

struct Branch {
  Bits s;       // raw outcomes
  Bits q;       // basis adaptations used
  Bits o;       // output bits (Z s + R g)
  double prob;  // joint Born probability
};

struct RunResult {
  std::vector<Branch> branches;
  std::map<std::vector<int>, double> dist;  // output bit pattern -> probability
};

// Measurement order from the influence rounds (input-to-output); falls back
// to qubit order when the relation has cycles.
std::vector<int> measurement_order(const processing::Relations& rel);

// Exact branch enumeration with bases adapted from measured outcomes only.
// Throws order_violation_error when a basis needs an unmeasured outcome.
RunResult run_exact(const Program& prog, const Bits& g);

struct PostselectResult {
  RunResult run;            // kept branches, renormalized distribution
  double success_prob = 0;  // kept mass averaged over uniform guesses
  int guesses = 0;          // number of guessed basis bits
};

// Guessed-basis execution: bases whose cone reaches unmeasured qubits are
// guessed, branches failing the recomputation check are discarded.
PostselectResult run_postselected(const Program& prog, const Bits& g);

struct DeterminismReport {
  bool deterministic = true;
  double max_tv = 0;  // largest total-variation gap across outcome groups
};

// Conditional output distributions must agree across all non-output outcome
// groups; tolerance 1e-10 on total variation.
DeterminismReport verify_determinism(const Program& prog, const Bits& g);

struct RandomnessReport {
  bool invariant = true;
  double p0 = 0;  // probability that the probed bit is 0 (at zero gauge)
};

// Probes the bit z.s + r.g: checks invariance under every generator's gauge
// action and measures the exact distribution.
RandomnessReport randomness_check(const Program& prog, const Bits& z, const Bits& r);

}  // namespace mbqc::oracle
