#include "mbqc/wave.hpp"

#include <cassert>

#include "mbqc/gf2.hpp"

namespace mbqc::wave {

BitMat mod2_laplacian(const stabilizer::GraphSpec& g) {
  BitMat lap = stabilizer::adjacency(g);
  std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
  for (auto [u, v] : g.edges) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  for (std::size_t q = 0; q < static_cast<std::size_t>(g.n); ++q)
    if (deg[q] & 1) lap.set(q, q, true);
  return lap;
}

std::vector<int> orientation_bits(const std::vector<stabilizer::Frame>& frames) {
  std::vector<int> b(frames.size());
  for (std::size_t q = 0; q < frames.size(); ++q) {
    if (frames[q] == stabilizer::Frame::XY)
      b[q] = 0;
    else if (frames[q] == stabilizer::Frame::YX)
      b[q] = 1;
    else
      throw unsupported_frame_error("wave picture needs equatorial frames");
  }
  return b;
}

std::vector<int> masses(const stabilizer::GraphSpec& g,
                        const std::vector<stabilizer::Frame>& frames) {
  std::vector<int> m = orientation_bits(frames);
  assert(static_cast<int>(m.size()) == g.n);
  for (auto [u, v] : g.edges) {
    m[static_cast<std::size_t>(u)] ^= 1;
    m[static_cast<std::size_t>(v)] ^= 1;
  }
  return m;
}

ConeOperator forward_cone_operator(const stabilizer::GraphSpec& g, const Bits& f) {
  return {f, stabilizer::adjacency(g).mul_vec(f)};
}

WaveReport check_wave(const stabilizer::GraphSpec& g,
                      const std::vector<stabilizer::Frame>& frames,
                      const std::vector<int>& o_comp, const std::map<int, Bits>& cones) {
  std::size_t n = static_cast<std::size_t>(g.n);
  BitMat lap = mod2_laplacian(g);
  std::vector<int> mass = masses(g, frames);
  std::vector<int> oc_c = gf2::complement(o_comp, n);

  WaveReport report;
  for (int a : oc_c) {
    auto it = cones.find(a);
    if (it == cones.end())
      throw missing_cone_error("no cone for a non-output vertex");
    const Bits& f = it->second;
    Bits resid = lap.mul_vec(f);
    for (std::size_t v = 0; v < n; ++v)
      if (mass[v] && f.get(v)) resid.flip(v);
    resid.flip(static_cast<std::size_t>(a));
    for (int v : oc_c)
      if (resid.get(static_cast<std::size_t>(v))) {
        report.ok = false;
        report.residuals.emplace_back(a, v);
      }
  }
  return report;
}

}  // namespace mbqc::wave
