// Discrete wave picture of correction propagation on graph states measured
// in equatorial planes.  The mod-2 graph Laplacian is adjacency plus the
// parity of the degree on the diagonal; each vertex carries a mass given by
// degree parity plus its plane-orientation bit.  A forward cone solves a
// discrete wave equation: mass-weighted source plus Laplacian response must
// reproduce a unit impulse on the non-output vertices.
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "mbqc/bits.hpp"
#include "mbqc/stabilizer.hpp"

namespace mbqc::wave {

using gf2::BitMat;
using gf2::Bits;

struct unsupported_frame_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct missing_cone_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Adjacency plus diag(degree mod 2).
BitMat mod2_laplacian(const stabilizer::GraphSpec& g);

// Orientation bit per vertex: 0 for the XY frame, 1 for YX.  Throws
// unsupported_frame_error for frames leaving the equatorial plane.
std::vector<int> orientation_bits(const std::vector<stabilizer::Frame>& frames);

// Vertex masses: degree parity plus orientation bit, mod 2.
std::vector<int> masses(const stabilizer::GraphSpec& g,
                        const std::vector<stabilizer::Frame>& frames);

struct ConeOperator {
  Bits w;  // primary-axis support: the cone itself
  Bits v;  // third-axis support: adjacency response of the cone
};

// Generator-product operator of a cone set f: primary support f, third-axis
// support adjacency * f.
ConeOperator forward_cone_operator(const stabilizer::GraphSpec& g, const Bits& f);

struct WaveReport {
  bool ok = true;
  // Violations (cone vertex a, residual vertex v).
  std::vector<std::pair<int, int>> residuals;
};

// Checks the wave equation for every non-output cone: masses*f_a + L*f_a
// must equal the unit impulse at a on the complement of o_comp.
WaveReport check_wave(const stabilizer::GraphSpec& g,
                      const std::vector<stabilizer::Frame>& frames,
                      const std::vector<int>& o_comp, const std::map<int, Bits>& cones);

}  // namespace mbqc::wave
