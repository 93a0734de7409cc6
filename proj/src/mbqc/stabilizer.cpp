#include "mbqc/stabilizer.hpp"

#include <array>
#include <cassert>

namespace mbqc::stabilizer {

namespace {

struct FrameInfo {
  const char* name;
  char primary, secondary;
  Frame swapped;
};

// Order matches the Frame enumerators.
constexpr std::array<FrameInfo, 6> kFrames{{
    {"XY", 'X', 'Y', Frame::YX},
    {"YX", 'Y', 'X', Frame::XY},
    {"YZ", 'Y', 'Z', Frame::ZY},
    {"ZY", 'Z', 'Y', Frame::YZ},
    {"ZX", 'Z', 'X', Frame::XZ},
    {"XZ", 'X', 'Z', Frame::ZX},
}};

// Role encoding (v, w) of a physical axis within a frame, with the sign the
// encoding drops.  The third axis is i * secondary * primary, so e.g. in the
// YX frame the third axis is -Z and a physical Z factor is carried as the
// third-axis role with a dropped minus sign.
struct Role {
  int v, w;
  int sign;  // +1 or -1
};

Role role_of(char axis, Frame f) {
  char p = frame_primary(f);
  char sec = frame_secondary(f);
  if (axis == p) return {0, 1, +1};
  if (axis == sec) return {1, 1, +1};
  // Third axis: i * sec * p.  With sec * p = i * s * c for the remaining
  // axis c (s from the cyclic rule XY->Z, YZ->X, ZX->Y), the third axis
  // equals i * i * s * c = -s * c.
  auto cyclic_sign = [](char a, char b) {
    if ((a == 'X' && b == 'Y') || (a == 'Y' && b == 'Z') || (a == 'Z' && b == 'X')) return +1;
    return -1;
  };
  int s = cyclic_sign(sec, p);
  return {1, 0, -s};
}

}  // namespace

Frame frame_from_string(const std::string& s) {
  for (std::size_t i = 0; i < kFrames.size(); ++i)
    if (s == kFrames[i].name) return static_cast<Frame>(i);
  throw std::invalid_argument("unknown frame: " + s);
}

std::string frame_to_string(Frame f) { return kFrames[static_cast<std::size_t>(f)].name; }
char frame_primary(Frame f) { return kFrames[static_cast<std::size_t>(f)].primary; }
char frame_secondary(Frame f) { return kFrames[static_cast<std::size_t>(f)].secondary; }
Frame frame_swapped(Frame f) { return kFrames[static_cast<std::size_t>(f)].swapped; }

bool frame_is_equatorial(Frame f) { return f == Frame::XY || f == Frame::YX; }

BitMat adjacency(const GraphSpec& g) {
  BitMat a(static_cast<std::size_t>(g.n), static_cast<std::size_t>(g.n));
  for (auto [u, v] : g.edges) {
    assert(u != v && u >= 0 && v >= 0 && u < g.n && v < g.n);
    a.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v), true);
    a.set(static_cast<std::size_t>(v), static_cast<std::size_t>(u), true);
  }
  return a;
}

Tableau graph_state_tableau(const GraphSpec& g, const std::vector<Frame>& frames) {
  assert(static_cast<int>(frames.size()) == g.n);
  std::size_t n = static_cast<std::size_t>(g.n);
  BitMat adj = adjacency(g);
  Tableau t{BitMat(n, n), BitMat(n, n), frames};
  auto put = [&](std::size_t row, std::size_t qubit, char axis) {
    Role r = role_of(axis, frames[qubit]);
    // A secondary-axis role with a dropped sign cannot be carried by the
    // encoding.  No X or Z factor produces one under any frame; kept as a
    // guard for future factor kinds.
    if (r.v && r.w && r.sign < 0)
      throw frame_incompatible_error("sign on a secondary-axis factor cannot be encoded");
    if (r.v) t.s.flip(row, qubit);
    if (r.w) t.phi.flip(row, qubit);
  };
  for (std::size_t a = 0; a < n; ++a) {
    put(a, a, 'X');
    for (std::size_t b = 0; b < n; ++b)
      if (adj.get(a, b)) put(a, b, 'Z');
  }
  return t;
}

ValidationReport validate(const Tableau& t) {
  std::size_t n = static_cast<std::size_t>(t.n());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool sym = gf2::parity_and(t.phi.row_ptr(i), t.s.row_ptr(j), t.phi.stride()) ^
                 gf2::parity_and(t.s.row_ptr(i), t.phi.row_ptr(j), t.s.stride());
      if (sym)
        return {ValidationReport::NonCommuting, static_cast<int>(i), static_cast<int>(j)};
    }
  }
  if (gf2::rank(t.concat()) != n) return {ValidationReport::DependentGenerators, -1, -1};
  return {};
}

RowProduct row_product(const Tableau& t, const std::vector<int>& rows) {
  std::size_t n = static_cast<std::size_t>(t.n());
  RowProduct p{Bits(n), Bits(n)};
  for (int r : rows) {
    p.w ^= t.phi.row(static_cast<std::size_t>(r));
    p.v ^= t.s.row(static_cast<std::size_t>(r));
  }
  return p;
}

Tableau flip_frame(const Tableau& t, int qubit) {
  Tableau out = t;
  std::size_t q = static_cast<std::size_t>(qubit);
  std::size_t n = static_cast<std::size_t>(t.n());
  for (std::size_t r = 0; r < n; ++r)
    if (out.phi.get(r, q)) out.s.flip(r, q);
  out.frames[q] = frame_swapped(out.frames[q]);
  return out;
}

bool same_group(const Tableau& a, const Tableau& b) {
  return gf2::same_row_space(a.concat(), b.concat());
}

}  // namespace mbqc::stabilizer
