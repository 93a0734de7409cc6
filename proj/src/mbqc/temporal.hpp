// Temporal structure of an influence matrix.
//
// T[b][a] = 1 means the outcome at qubit a feeds the basis choice at qubit b,
// so column a is the forward cone of a and row b is the backward cone of b.
// Inputs have empty backward cones, outputs empty forward cones.  Transitive
// closure decides whether the influence relation is a partial order or
// contains cycles.
#pragma once

#include <vector>

#include "mbqc/bits.hpp"
#include "mbqc/stabilizer.hpp"

namespace mbqc::temporal {

using gf2::BitMat;
using gf2::Bits;

Bits forward_cone(const BitMat& t, int a);   // column a
Bits backward_cone(const BitMat& t, int b);  // row b

struct IoSets {
  std::vector<int> inputs;   // empty backward cone
  std::vector<int> outputs;  // empty forward cone
};

IoSets io_sets(const BitMat& t);

// Transitive closure of the influence relation (no reflexive part added).
BitMat closure(const BitMat& t);

// Qubits a with closure[a][a] = 1.
std::vector<int> self_loops(const BitMat& closed);

struct Order {
  enum Kind { PartialOrder, Ctc };
  Kind kind = PartialOrder;
  // PartialOrder: measurement rounds by longest dependency chain.
  std::vector<std::vector<int>> rounds;
  // Ctc: a shortest dependency cycle, listed in influence order.
  std::vector<int> cycle;
};

Order classify(const BitMat& t);

struct FlowResult {
  enum Kind { Ok, NoInverse, OnlyCyclicSolutions };
  Kind kind = Ok;
  BitMat t;        // Ok: an influence matrix whose closure is acyclic
  // OnlyCyclicSolutions: true when the whole solution space was searched,
  // false when the search budget was exhausted first.
  bool witnessed = false;
};

// Graph flow search: solve the odd-neighborhood conditions for correction
// sets supported outside the inputs, then look for a solution choice whose
// influence closure is acyclic.  Exhaustive within a candidate budget.
FlowResult flow_check(const stabilizer::GraphSpec& g, const std::vector<int>& inputs,
                      const std::vector<int>& outputs);

}  // namespace mbqc::temporal
