#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "fgx/instances.hpp"
#include "fgx/solvers.hpp"

namespace fgx::testutil {

inline bool is_subseq(const std::vector<Symbol>& needle,
                      const std::vector<Symbol>& hay) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < hay.size() && i < needle.size(); ++j)
    if (hay[j] == needle[i]) ++i;
  return i == needle.size();
}

// Exhaustive LCS over subsets of the shorter string; lengths <= ~20.
inline std::int64_t lcs_brute(const std::vector<Symbol>& a,
                              const std::vector<Symbol>& b) {
  const auto& s = a.size() <= b.size() ? a : b;
  const auto& o = a.size() <= b.size() ? b : a;
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << s.size()); ++mask) {
    std::vector<Symbol> sub;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (mask & (1u << i)) sub.push_back(s[i]);
    if (static_cast<std::int64_t>(sub.size()) > best && is_subseq(sub, o))
      best = static_cast<std::int64_t>(sub.size());
  }
  return best;
}

inline std::int64_t lcis_brute(const LcisInstance& inst) {
  const auto& s = inst.x1.size() <= inst.x2.size() ? inst.x1 : inst.x2;
  const auto& o = inst.x1.size() <= inst.x2.size() ? inst.x2 : inst.x1;
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << s.size()); ++mask) {
    std::vector<Symbol> sub;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (mask & (1u << i)) sub.push_back(s[i]);
    bool inc = true;
    for (std::size_t i = 1; i < sub.size(); ++i)
      inc = inc && (inst.strict ? sub[i - 1] < sub[i] : sub[i - 1] <= sub[i]);
    if (inc && static_cast<std::int64_t>(sub.size()) > best &&
        is_subseq(sub, o))
      best = static_cast<std::int64_t>(sub.size());
  }
  return best;
}

// Two smallest weights among distinct s-t walks of <= max_edges edges.
inline std::vector<Weight> best_two_walks(
    const SecondShortestPathInstance& inst, int max_edges) {
  const auto& g = inst.graph;
  using Best = std::vector<Weight>;  // sorted, capped at two entries
  auto push = [](Best& b, Weight w) {
    b.push_back(w);
    std::sort(b.begin(), b.end());
    if (b.size() > 2) b.resize(2);
  };
  std::vector<Best> cur(g.n + 1), nxt(g.n + 1);
  Best at_t;
  push(cur[inst.s], 0);
  for (int step = 0; step < max_edges; ++step) {
    for (auto& b : nxt) b.clear();
    for (const auto& e : g.edges)
      for (Weight w : cur[e.u]) push(nxt[e.v], w + e.w);
    for (Weight w : nxt[inst.t]) push(at_t, w);
    std::swap(cur, nxt);
  }
  return at_t;
}

// All simple s-t path weights, ascending (graphs stay tiny).
inline std::vector<Weight> simple_path_weights(
    const SecondShortestPathInstance& inst) {
  const auto& g = inst.graph;
  std::vector<std::vector<int>> adj(g.n + 1);
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    adj[g.edges[e].u].push_back(static_cast<int>(e));
  std::vector<Weight> out;
  std::vector<char> used(g.n + 1, 0);
  auto dfs = [&](auto&& self, int v, Weight total) -> void {
    if (v == inst.t) {
      out.push_back(total);
      return;
    }
    used[v] = 1;
    for (int ei : adj[v])
      if (!used[g.edges[ei].v]) self(self, g.edges[ei].v, total + g.edges[ei].w);
    used[v] = 0;
  };
  dfs(dfs, inst.s, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Whole-graph triple scan, ignoring components.
inline bool triangle_collection_brute(const WeightedGraph& g) {
  std::set<std::pair<int, int>> edges;
  for (const auto& e : g.edges) edges.insert(std::minmax(e.u, e.v));
  std::set<int> palette(g.colors.begin(), g.colors.end());
  std::set<std::array<int, 3>> realized;
  for (int a = 1; a <= g.n; ++a)
    for (int b = a + 1; b <= g.n; ++b) {
      if (!edges.count({a, b})) continue;
      for (int c = b + 1; c <= g.n; ++c) {
        if (!edges.count({a, c}) || !edges.count({b, c})) continue;
        std::array<int, 3> tri = {g.colors[a - 1], g.colors[b - 1],
                                  g.colors[c - 1]};
        std::sort(tri.begin(), tri.end());
        if (tri[0] != tri[1] && tri[1] != tri[2]) realized.insert(tri);
      }
    }
  const std::int64_t d = static_cast<std::int64_t>(palette.size());
  return static_cast<std::int64_t>(realized.size()) == d * (d - 1) * (d - 2) / 6;
}

}  // namespace fgx::testutil
