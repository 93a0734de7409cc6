#include "mbqc/temporal.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "mbqc/gf2.hpp"

namespace mbqc::temporal {

Bits forward_cone(const BitMat& t, int a) { return t.col(static_cast<std::size_t>(a)); }
Bits backward_cone(const BitMat& t, int b) { return t.row(static_cast<std::size_t>(b)); }

IoSets io_sets(const BitMat& t) {
  IoSets io;
  std::size_t n = t.rows();
  for (std::size_t q = 0; q < n; ++q) {
    if (!t.row_any(q)) io.inputs.push_back(static_cast<int>(q));
    if (!t.col_any(q)) io.outputs.push_back(static_cast<int>(q));
  }
  return io;
}

BitMat closure(const BitMat& t) {
  BitMat c = t;
  for (;;) {
    BitMat next = c;
    next.bool_or(c.bool_mul(c));
    if (next == c) return c;
    c = next;
  }
}

std::vector<int> self_loops(const BitMat& closed) {
  std::vector<int> out;
  for (std::size_t q = 0; q < closed.rows(); ++q)
    if (closed.get(q, q)) out.push_back(static_cast<int>(q));
  return out;
}

namespace {

// Shortest directed cycle over edges j -> i for t[i][j] = 1, as a vertex list
// in influence order.
std::vector<int> shortest_cycle(const BitMat& t) {
  std::size_t n = t.rows();
  std::vector<int> best;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> parent(n, -1);
    std::vector<int> dist(n, -1);
    std::deque<std::size_t> queue;
    // BFS from s over successors; a path back to s closes a cycle.
    dist[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (!t.get(v, u)) continue;
        if (v == s) {
          std::vector<int> cyc;
          for (int x = static_cast<int>(u); x != -1; x = parent[x]) cyc.push_back(x);
          std::reverse(cyc.begin(), cyc.end());
          if (best.empty() || cyc.size() < best.size()) best = cyc;
          goto next_source;
        }
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          parent[v] = static_cast<int>(u);
          queue.push_back(v);
        }
      }
    }
  next_source:;
  }
  return best;
}

}  // namespace

Order classify(const BitMat& t) {
  BitMat c = closure(t);
  Order o;
  if (!self_loops(c).empty()) {
    o.kind = Order::Ctc;
    o.cycle = shortest_cycle(t);
    return o;
  }
  std::size_t n = t.rows();
  // Longest dependency chain via relaxation; dependencies of q are row q.
  std::vector<int> depth(n, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t q = 0; q < n; ++q) {
      int d = 0;
      for (int p : t.row(q).ones()) d = std::max(d, depth[static_cast<std::size_t>(p)] + 1);
      if (d != depth[q]) {
        depth[q] = d;
        changed = true;
      }
    }
  }
  int max_depth = 0;
  for (std::size_t q = 0; q < n; ++q) max_depth = std::max(max_depth, depth[q]);
  o.rounds.assign(static_cast<std::size_t>(max_depth) + 1, {});
  for (std::size_t q = 0; q < n; ++q)
    o.rounds[static_cast<std::size_t>(depth[q])].push_back(static_cast<int>(q));
  return o;
}

namespace {

constexpr std::size_t kFlowBudget = std::size_t{1} << 20;

BitMat embed_flow(const std::vector<Bits>& f_cols, const std::vector<int>& free_qubits,
                  const std::vector<int>& non_outputs, std::size_t n) {
  BitMat t(n, n);
  for (std::size_t j = 0; j < non_outputs.size(); ++j) {
    std::size_t a = static_cast<std::size_t>(non_outputs[j]);
    for (std::size_t i = 0; i < free_qubits.size(); ++i)
      if (f_cols[j].get(i)) t.set(static_cast<std::size_t>(free_qubits[i]), a, true);
  }
  return t;
}

}  // namespace

FlowResult flow_check(const stabilizer::GraphSpec& g, const std::vector<int>& inputs,
                      const std::vector<int>& outputs) {
  std::size_t n = static_cast<std::size_t>(g.n);
  BitMat adj = adjacency(g);
  std::vector<int> non_outputs = gf2::complement(outputs, n);
  std::vector<int> non_inputs = gf2::complement(inputs, n);
  BitMat m = adj.select_rows(non_outputs).select_cols(non_inputs);

  std::vector<Bits> particular(non_outputs.size());
  for (std::size_t j = 0; j < non_outputs.size(); ++j) {
    Bits e(non_outputs.size());
    e.set(j, true);
    auto x = gf2::solve(m, e);
    if (!x) return {FlowResult::NoInverse, BitMat(), false};
    particular[j] = *x;
  }
  std::vector<Bits> null_basis = gf2::null_space(m);

  auto acyclic = [&](const std::vector<Bits>& cols) -> std::optional<BitMat> {
    BitMat t = embed_flow(cols, non_inputs, non_outputs, n);
    if (self_loops(closure(t)).empty()) return t;
    return std::nullopt;
  };

  if (auto t = acyclic(particular)) return {FlowResult::Ok, *t, false};
  if (null_basis.empty()) return {FlowResult::OnlyCyclicSolutions, BitMat(), true};

  // DFS over per-column coset choices, counting visited leaf candidates
  // against the budget.
  std::size_t visited = 0;
  bool exhausted_budget = false;
  std::vector<Bits> cols = particular;
  std::optional<BitMat> found;

  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (found || exhausted_budget) return;
    if (j == cols.size()) {
      if (++visited > kFlowBudget) {
        exhausted_budget = true;
        return;
      }
      if (auto t = acyclic(cols)) found = *t;
      return;
    }
    std::size_t combos = std::size_t{1} << null_basis.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
      Bits x = particular[j];
      for (std::size_t b = 0; b < null_basis.size(); ++b)
        if ((mask >> b) & 1) x ^= null_basis[b];
      cols[j] = x;
      self(self, j + 1);
      if (found || exhausted_budget) return;
    }
    cols[j] = particular[j];
  };
  rec(rec, 0);

  if (found) return {FlowResult::Ok, *found, false};
  return {FlowResult::OnlyCyclicSolutions, BitMat(), !exhausted_budget};
}

}  // namespace mbqc::temporal
