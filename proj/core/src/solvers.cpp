#include "fgx/solvers.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <queue>
#include <set>

namespace fgx {

namespace {

bool orthogonal(const std::vector<std::uint8_t>& a,
                const std::vector<std::uint8_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

bool is_subsequence(const std::vector<Symbol>& needle,
                    const std::vector<Symbol>& hay) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < hay.size() && i < needle.size(); ++j)
    if (hay[j] == needle[i]) ++i;
  return i == needle.size();
}

constexpr std::size_t kWitnessCells = std::size_t{1} << 22;

}  // namespace

std::vector<std::vector<int>> graph_components(const WeightedGraph& g) {
  std::vector<std::vector<int>> adj(g.n + 1);
  for (const auto& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> comp(g.n + 1, -1);
  std::vector<std::vector<int>> out;
  for (int v = 1; v <= g.n; ++v) {
    if (comp[v] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{v};
    comp[v] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      for (int w : adj[u])
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
  }
  return out;
}

namespace {

// Dense weight lookup local to one component.
struct LocalGraph {
  std::vector<int> verts;            // local -> global
  std::vector<char> has;             // ell x ell
  std::vector<Weight> w;             // ell x ell
  int ell = 0;

  bool adj(int a, int b) const { return has[a * ell + b]; }
  Weight weight(int a, int b) const { return w[a * ell + b]; }
};

LocalGraph make_local(const WeightedGraph& g, const std::vector<int>& verts) {
  LocalGraph lg;
  lg.verts = verts;
  lg.ell = static_cast<int>(verts.size());
  lg.has.assign(static_cast<std::size_t>(lg.ell) * lg.ell, 0);
  lg.w.assign(static_cast<std::size_t>(lg.ell) * lg.ell, 0);
  std::vector<int> local(g.n + 1, -1);
  for (int i = 0; i < lg.ell; ++i) local[verts[i]] = i;
  for (const auto& e : g.edges) {
    int a = local[e.u], b = local[e.v];
    if (a < 0 || b < 0) continue;
    lg.has[a * lg.ell + b] = lg.has[b * lg.ell + a] = 1;
    lg.w[a * lg.ell + b] = lg.w[b * lg.ell + a] = e.w;
  }
  return lg;
}

}  // namespace

SolveResult solve_ov(const OvInstance& inst) {
  for (std::size_t i = 0; i < inst.a.size(); ++i)
    for (std::size_t j = 0; j < inst.b.size(); ++j)
      if (orthogonal(inst.a[i], inst.b[j])) {
        SolveResult r;
        r.answer = true;
        r.witness = IndexPair{static_cast<std::int64_t>(i + 1),
                              static_cast<std::int64_t>(j + 1)};
        return r;
      }
  return {};
}

SolveResult solve_3sum(const ThreeSumInstance& inst) {
  const int n = inst.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return inst.values[x] < inst.values[y]; });
  for (int h = 0; h < n; ++h) {
    const std::int64_t target = -inst.values[h];
    int lo = 0, hi = n - 1;
    while (lo <= hi) {
      const std::int64_t sum =
          inst.values[order[lo]] + inst.values[order[hi]];
      if (sum == target) {
        SolveResult r;
        r.answer = true;
        r.witness = IndexTriple{order[lo] + 1, order[hi] + 1, h + 1};
        return r;
      }
      if (sum < target)
        ++lo;
      else
        --hi;
    }
  }
  return {};
}

SolveResult solve_conv3sum(const ConvThreeSumInstance& inst) {
  const int n = inst.n();
  const auto& a = inst.values;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j)
      if (a[i - 1] + a[j - 1] == a[i + j - 1]) {
        SolveResult r;
        r.answer = true;
        r.witness = IndexPair{i, j};
        return r;
      }
  return {};
}

SolveResult solve_mc_conv3sum(const McConvThreeSumInstance& inst) {
  const int n = inst.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) {
      const auto& c = inst.c[i + j - 1];
      if (c && inst.a[i - 1] + inst.b[j - 1] == *c) {
        SolveResult r;
        r.answer = true;
        r.witness = IndexPair{i, j};
        return r;
      }
    }
  return {};
}

SolveResult solve_neg_k_clique(const WeightedGraph& g, int k) {
  if (k < 3 || k > 4)
    throw std::invalid_argument("clique order out of supported range [3,4]");
  for (const auto& verts : graph_components(g)) {
    if (static_cast<int>(verts.size()) < k) continue;
    LocalGraph lg = make_local(g, verts);
    const int ell = lg.ell;
    auto emit = [&](std::initializer_list<int> picks) {
      SolveResult r;
      r.answer = true;
      VertexSet ws;
      for (int p : picks) ws.push_back(lg.verts[p]);
      std::sort(ws.begin(), ws.end());
      r.witness = std::move(ws);
      return r;
    };
    if (k == 3) {
      for (int a = 0; a < ell; ++a)
        for (int b = a + 1; b < ell; ++b) {
          if (!lg.adj(a, b)) continue;
          for (int c = b + 1; c < ell; ++c)
            if (lg.adj(a, c) && lg.adj(b, c) &&
                lg.weight(a, b) + lg.weight(a, c) + lg.weight(b, c) < 0)
              return emit({a, b, c});
        }
    } else {
      for (int a = 0; a < ell; ++a)
        for (int b = a + 1; b < ell; ++b) {
          if (!lg.adj(a, b)) continue;
          for (int c = b + 1; c < ell; ++c) {
            if (!lg.adj(a, c) || !lg.adj(b, c)) continue;
            for (int d = c + 1; d < ell; ++d)
              if (lg.adj(a, d) && lg.adj(b, d) && lg.adj(c, d) &&
                  lg.weight(a, b) + lg.weight(a, c) + lg.weight(a, d) +
                          lg.weight(b, c) + lg.weight(b, d) +
                          lg.weight(c, d) <
                      0)
                return emit({a, b, c, d});
          }
        }
    }
  }
  return {};
}

SolveResult solve_triangle_collection(const WeightedGraph& g) {
  if (g.colors.empty())
    throw std::invalid_argument("triangle collection requires colors");
  std::set<int> palette(g.colors.begin(), g.colors.end());
  std::set<std::array<int, 3>> realized;
  for (const auto& verts : graph_components(g)) {
    LocalGraph lg = make_local(g, verts);
    const int ell = lg.ell;
    for (int a = 0; a < ell; ++a)
      for (int b = a + 1; b < ell; ++b) {
        if (!lg.adj(a, b)) continue;
        for (int c = b + 1; c < ell; ++c) {
          if (!lg.adj(a, c) || !lg.adj(b, c)) continue;
          std::array<int, 3> tri = {g.colors[lg.verts[a] - 1],
                                    g.colors[lg.verts[b] - 1],
                                    g.colors[lg.verts[c] - 1]};
          std::sort(tri.begin(), tri.end());
          if (tri[0] != tri[1] && tri[1] != tri[2]) realized.insert(tri);
        }
      }
  }
  const std::int64_t d = static_cast<std::int64_t>(palette.size());
  const std::int64_t wanted = d * (d - 1) * (d - 2) / 6;
  SolveResult r;
  r.answer = static_cast<std::int64_t>(realized.size()) == wanted;
  r.value = static_cast<std::int64_t>(realized.size());
  return r;
}

SolveResult lcs_dp(const LcsInstance& inst) {
  const std::size_t n = inst.x1.size(), m = inst.x2.size();
  SolveResult r;
  if (n * m <= kWitnessCells && n > 0 && m > 0) {
    std::vector<std::int32_t> tab((n + 1) * (m + 1), 0);
    auto at = [&](std::size_t i, std::size_t j) -> std::int32_t& {
      return tab[i * (m + 1) + j];
    };
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= m; ++j)
        at(i, j) = inst.x1[i - 1] == inst.x2[j - 1]
                       ? at(i - 1, j - 1) + 1
                       : std::max(at(i - 1, j), at(i, j - 1));
    const std::int64_t opt = at(n, m);
    r.value = opt;
    r.answer = opt >= inst.k;
    SymbolSeq seq;
    std::size_t i = n, j = m;
    while (i > 0 && j > 0) {
      if (inst.x1[i - 1] == inst.x2[j - 1]) {
        seq.push_back(inst.x1[i - 1]);
        --i, --j;
      } else if (at(i - 1, j) >= at(i, j - 1)) {
        --i;
      } else {
        --j;
      }
    }
    std::reverse(seq.begin(), seq.end());
    r.witness = std::move(seq);
    return r;
  }
  // length only, rolling rows
  std::vector<std::int32_t> prev(m + 1, 0), cur(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j)
      cur[j] = inst.x1[i - 1] == inst.x2[j - 1]
                   ? prev[j - 1] + 1
                   : std::max(prev[j], cur[j - 1]);
    std::swap(prev, cur);
  }
  r.value = prev[m];
  r.answer = *r.value >= inst.k;
  return r;
}

SolveResult lcis_dp(const LcisInstance& inst) {
  const std::size_t n = inst.x1.size(), m = inst.x2.size();
  SolveResult r;
  if (m == 0 || n == 0) {
    r.value = 0;
    r.answer = inst.k <= 0;
    if (r.answer) r.witness = SymbolSeq{};
    return r;
  }
  const bool small = n * m <= kWitnessCells;
  // dp[j]: best common increasing subsequence ending at x2[j].
  // Row snapshots kept at small scale for witness reconstruction.
  std::vector<std::int32_t> dp(m, 0);
  std::vector<std::int32_t> snaps;
  if (small) snaps.assign((n + 1) * m, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::int32_t best = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const std::int32_t old = dp[j];
      if (inst.x1[i] == inst.x2[j] && best + 1 > dp[j]) dp[j] = best + 1;
      const bool le =
          inst.strict ? inst.x2[j] < inst.x1[i] : inst.x2[j] <= inst.x1[i];
      if (le && old > best) best = old;
    }
    if (small)
      std::copy(dp.begin(), dp.end(), snaps.begin() + (i + 1) * m);
  }
  const std::int32_t opt = *std::max_element(dp.begin(), dp.end());
  r.value = opt;
  r.answer = opt >= inst.k;
  if (small) {
    auto snap = [&](std::size_t i, std::size_t j) {
      return snaps[i * m + j];
    };
    SymbolSeq seq;
    std::int32_t need = opt;
    std::size_t hi_j = m;  // exclusive upper bound on position
    std::size_t i = n;
    std::optional<Symbol> ubound;  // value the next element must lie below
    while (need > 0) {
      bool found = false;
      for (std::size_t j = hi_j; j-- > 0 && !found;) {
        const bool val_ok =
            !ubound ||
            (inst.strict ? inst.x2[j] < *ubound : inst.x2[j] <= *ubound);
        if (!val_ok || snap(i, j) < need) continue;
        // first row where this length was reached at j
        std::size_t row = i;
        while (row > 0 && snap(row - 1, j) >= need) --row;
        seq.push_back(inst.x2[j]);
        ubound = inst.x2[j];
        hi_j = j;
        i = row - 1;  // earlier x1 rows only
        --need;
        found = true;
      }
      if (!found) break;  // defensive; opt guarantees a chain
    }
    std::reverse(seq.begin(), seq.end());
    if (static_cast<std::int32_t>(seq.size()) == opt) r.witness = std::move(seq);
  }
  return r;
}

SolveResult lcs_threshold(const LcsInstance& inst) {
  const std::int64_t n = static_cast<std::int64_t>(inst.x1.size());
  const std::int64_t m = static_cast<std::int64_t>(inst.x2.size());
  SolveResult r;
  if (inst.k == 0) {
    r.answer = true;
    r.value = 0;
    return r;
  }
  if (n == 0 || m == 0) {
    r.answer = false;
    r.value = 0;
    return r;
  }
  // nxt[s * (m+2) + p]: least position >= p of symbol s in x2, m+1 if none.
  const std::int64_t sigma = inst.sigma;
  std::vector<std::int32_t> nxt(static_cast<std::size_t>(sigma) * (m + 2));
  for (std::int64_t s = 0; s < sigma; ++s)
    nxt[s * (m + 2) + m + 1] = static_cast<std::int32_t>(m + 1);
  for (std::int64_t p = m; p >= 1; --p)
    for (std::int64_t s = 0; s < sigma; ++s)
      nxt[s * (m + 2) + p] = inst.x2[p - 1] == s
                                 ? static_cast<std::int32_t>(p)
                                 : nxt[s * (m + 2) + p + 1];

  std::vector<std::int32_t> thr(
      std::min<std::int64_t>(inst.k, std::min(n, m)) + 1,
      static_cast<std::int32_t>(m + 1));
  thr[0] = 0;
  std::int64_t reached = 0;
  const std::int64_t cap = static_cast<std::int64_t>(thr.size()) - 1;
  for (std::int64_t i = 0; i < n; ++i) {
    const Symbol s = inst.x1[i];
    for (std::int64_t j = std::min(reached, cap - 1); j >= 0; --j) {
      if (thr[j] > m) continue;
      const std::int32_t p = nxt[s * (m + 2) + thr[j] + 1];
      if (p <= m && p < thr[j + 1]) {
        thr[j + 1] = p;
        if (j + 1 > reached) reached = j + 1;
        if (reached >= inst.k) {
          r.answer = true;
          r.value = reached;
          return r;
        }
      }
    }
  }
  r.answer = reached >= inst.k;
  r.value = reached;
  return r;
}

namespace {

TraversalWitness backtrack_grid(const std::vector<char>& reach, std::size_t n,
                                std::size_t m) {
  // reach is (n+1)x(m+1), 1-based cells
  auto at = [&](std::size_t i, std::size_t j) {
    return reach[i * (m + 1) + j] != 0;
  };
  TraversalWitness w;
  std::size_t i = n, j = m;
  w.cells.emplace_back(static_cast<int>(i), static_cast<int>(j));
  while (i > 1 || j > 1) {
    if (i > 1 && j > 1 && at(i - 1, j - 1)) {
      --i, --j;
    } else if (i > 1 && at(i - 1, j)) {
      --i;
    } else {
      --j;
    }
    w.cells.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  std::reverse(w.cells.begin(), w.cells.end());
  return w;
}

}  // namespace

SolveResult frechet_dp(const FrechetInstance& inst) {
  const std::size_t n = inst.p.size(), m = inst.q.size();
  SolveResult r;
  if (n == 0 || m == 0) return r;
  auto feas = [&](std::size_t i, std::size_t j) {
    return dist2(inst.p[i - 1], inst.q[j - 1]) <= inst.k2;
  };
  std::vector<char> reach((n + 1) * (m + 1), 0);
  auto at = [&](std::size_t i, std::size_t j) -> char& {
    return reach[i * (m + 1) + j];
  };
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      if (!feas(i, j)) continue;
      if (i == 1 && j == 1)
        at(i, j) = 1;
      else if (at(i - 1, j) || at(i, j - 1) || at(i - 1, j - 1))
        at(i, j) = 1;
    }
  r.answer = at(n, m) != 0;
  if (r.answer) r.witness = backtrack_grid(reach, n, m);
  return r;
}

SolveResult frechet_banded(const FrechetInstance& inst, BandSpec band) {
  const std::int64_t n = static_cast<std::int64_t>(inst.p.size());
  const std::int64_t m = static_cast<std::int64_t>(inst.q.size());
  SolveResult r;
  if (n == 0 || m == 0) return r;
  const std::int64_t ell = band.ell;
  if (std::llabs(n - m) > ell) return r;
  const std::int64_t width = 2 * ell + 1;
  // row i holds columns j with |i-j| <= ell; band index j - (i - ell)
  std::vector<char> reach(static_cast<std::size_t>(n) * width, 0);
  auto at = [&](std::int64_t i, std::int64_t j) -> char& {
    return reach[static_cast<std::size_t>(i - 1) * width + (j - i + ell)];
  };
  auto in_band = [&](std::int64_t i, std::int64_t j) {
    return j >= 1 && j <= m && j >= i - ell && j <= i + ell;
  };
  auto feas = [&](std::int64_t i, std::int64_t j) {
    return dist2(inst.p[i - 1], inst.q[j - 1]) <= inst.k2;
  };
  for (std::int64_t i = 1; i <= n; ++i) {
    const std::int64_t lo = std::max<std::int64_t>(1, i - ell);
    const std::int64_t hi = std::min<std::int64_t>(m, i + ell);
    for (std::int64_t j = lo; j <= hi; ++j) {
      if (!feas(i, j)) continue;
      if (i == 1 && j == 1) {
        at(i, j) = 1;
        continue;
      }
      const bool from_up = i > 1 && in_band(i - 1, j) && at(i - 1, j);
      const bool from_left = j > 1 && in_band(i, j - 1) && at(i, j - 1);
      const bool from_diag = i > 1 && j > 1 && in_band(i - 1, j - 1) &&
                             at(i - 1, j - 1);
      if (from_up || from_left || from_diag) at(i, j) = 1;
    }
  }
  if (!in_band(n, m) || !at(n, m)) return r;
  r.answer = true;
  TraversalWitness w;
  std::int64_t i = n, j = m;
  w.cells.emplace_back(static_cast<int>(i), static_cast<int>(j));
  while (i > 1 || j > 1) {
    if (i > 1 && j > 1 && in_band(i - 1, j - 1) && at(i - 1, j - 1)) {
      --i, --j;
    } else if (i > 1 && in_band(i - 1, j) && at(i - 1, j)) {
      --i;
    } else {
      --j;
    }
    w.cells.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  std::reverse(w.cells.begin(), w.cells.end());
  r.witness = std::move(w);
  return r;
}

std::optional<std::int64_t> frechet_min_shift(const FrechetInstance& inst) {
  if (!frechet_dp(inst).answer) return std::nullopt;
  const std::int64_t n = static_cast<std::int64_t>(
      std::max(inst.p.size(), inst.q.size()));
  if (frechet_banded(inst, {0}).answer) return 0;
  std::int64_t hi = 1;
  while (hi < n && !frechet_banded(inst, {hi}).answer) hi *= 2;
  hi = std::min(hi, n);
  std::int64_t lo = hi / 2;  // banded(lo) false, banded(hi) true
  while (lo + 1 < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (frechet_banded(inst, {mid}).answer)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

namespace {

struct PopRecord {
  int vertex;
  Weight dist;
  int parent_pop;
  int edge;
};

std::vector<std::vector<int>> out_edges(const WeightedGraph& g) {
  std::vector<std::vector<int>> out(g.n + 1);
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    out[g.edges[e].u].push_back(static_cast<int>(e));
  return out;
}

struct DijkstraResult {
  std::vector<Weight> dist;
  std::vector<int> par_edge;
};

// Plain Dijkstra with optional vertex/edge exclusions.
DijkstraResult dijkstra(const WeightedGraph& g,
                        const std::vector<std::vector<int>>& adj, int src,
                        const std::vector<char>* blocked_vertex,
                        int blocked_edge) {
  constexpr Weight inf = std::numeric_limits<Weight>::max() / 4;
  DijkstraResult res;
  res.dist.assign(g.n + 1, inf);
  res.par_edge.assign(g.n + 1, -1);
  if (blocked_vertex && (*blocked_vertex)[src]) return res;
  using Item = std::pair<Weight, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  res.dist[src] = 0;
  pq.emplace(0, src);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != res.dist[u]) continue;
    for (int ei : adj[u]) {
      if (ei == blocked_edge) continue;
      const auto& e = g.edges[ei];
      if (blocked_vertex && (*blocked_vertex)[e.v]) continue;
      if (d + e.w < res.dist[e.v]) {
        res.dist[e.v] = d + e.w;
        res.par_edge[e.v] = ei;
        pq.emplace(res.dist[e.v], e.v);
      }
    }
  }
  return res;
}

}  // namespace

SolveResult second_shortest_walk(const SecondShortestPathInstance& inst) {
  const auto& g = inst.graph;
  auto adj = out_edges(g);
  std::vector<int> pops(g.n + 1, 0);
  std::vector<PopRecord> records;
  struct Item {
    Weight dist;
    int vertex;
    int parent_pop;
    int edge;
    bool operator>(const Item& o) const { return dist > o.dist; }
  };
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  pq.push({0, inst.s, -1, -1});
  std::optional<Weight> d2;
  int second_pop_of_t = -1;
  while (!pq.empty()) {
    Item it = pq.top();
    pq.pop();
    if (pops[it.vertex] >= 2) continue;
    const int pop_idx = static_cast<int>(records.size());
    records.push_back({it.vertex, it.dist, it.parent_pop, it.edge});
    ++pops[it.vertex];
    if (it.vertex == inst.t && pops[inst.t] == 2) {
      d2 = it.dist;
      second_pop_of_t = pop_idx;
      break;
    }
    for (int ei : adj[it.vertex])
      pq.push({it.dist + g.edges[ei].w, g.edges[ei].v, pop_idx, ei});
  }
  SolveResult r;
  if (!d2) return r;  // fewer than two walks reach t
  r.value = *d2;
  r.answer = *d2 <= inst.k;
  WalkWitness w;
  for (int p = second_pop_of_t; records[p].edge >= 0; p = records[p].parent_pop)
    w.edges.push_back(records[p].edge);
  std::reverse(w.edges.begin(), w.edges.end());
  r.witness = std::move(w);
  return r;
}

SolveResult second_shortest_simple_path(
    const SecondShortestPathInstance& inst) {
  const auto& g = inst.graph;
  auto adj = out_edges(g);
  constexpr Weight inf = std::numeric_limits<Weight>::max() / 4;
  auto base = dijkstra(g, adj, inst.s, nullptr, -1);
  SolveResult r;
  if (base.dist[inst.t] >= inf) return r;
  // edges of the shortest path, s to t
  std::vector<int> path_edges;
  for (int v = inst.t; v != inst.s;) {
    path_edges.push_back(base.par_edge[v]);
    v = g.edges[base.par_edge[v]].u;
  }
  std::reverse(path_edges.begin(), path_edges.end());

  std::optional<Weight> best;
  std::vector<int> best_edges;
  std::vector<char> blocked(g.n + 1, 0);
  Weight root_weight = 0;
  for (std::size_t i = 0; i < path_edges.size(); ++i) {
    const int spur = i == 0 ? inst.s : g.edges[path_edges[i - 1]].v;
    if (i > 0) {
      blocked[g.edges[path_edges[i - 1]].u] = 1;
      root_weight += g.edges[path_edges[i - 1]].w;
    }
    auto res = dijkstra(g, adj, spur, &blocked, path_edges[i]);
    if (res.dist[inst.t] < inf) {
      const Weight cand = root_weight + res.dist[inst.t];
      if (!best || cand < *best) {
        best = cand;
        best_edges.assign(path_edges.begin(), path_edges.begin() + i);
        std::vector<int> tail;
        for (int v = inst.t; v != spur;) {
          tail.push_back(res.par_edge[v]);
          v = g.edges[res.par_edge[v]].u;
        }
        best_edges.insert(best_edges.end(), tail.rbegin(), tail.rend());
      }
    }
  }
  if (!best) return r;
  r.value = *best;
  r.answer = *best <= inst.k;
  r.witness = WalkWitness{std::move(best_edges)};
  return r;
}

SolveResult solve(const ProblemInstance& inst) {
  struct Dispatch {
    SolveResult operator()(const OvInstance& i) { return solve_ov(i); }
    SolveResult operator()(const ThreeSumInstance& i) { return solve_3sum(i); }
    SolveResult operator()(const ConvThreeSumInstance& i) {
      return solve_conv3sum(i);
    }
    SolveResult operator()(const McConvThreeSumInstance& i) {
      return solve_mc_conv3sum(i);
    }
    SolveResult operator()(const WeightedGraph& g) {
      if (!g.colors.empty()) return solve_triangle_collection(g);
      return solve_neg_k_clique(g, g.k > 0 ? g.k : 3);
    }
    SolveResult operator()(const LcsInstance& i) { return lcs_dp(i); }
    SolveResult operator()(const LcisInstance& i) { return lcis_dp(i); }
    SolveResult operator()(const FrechetInstance& i) { return frechet_dp(i); }
    SolveResult operator()(const SecondShortestPathInstance& i) {
      return second_shortest_walk(i);
    }
  };
  return std::visit(Dispatch{}, inst);
}

namespace {

bool check_traversal(const FrechetInstance& inst, const TraversalWitness& w,
                     std::optional<std::int64_t> max_shift) {
  if (w.cells.empty()) return false;
  if (w.cells.front() != std::pair<int, int>{1, 1}) return false;
  if (w.cells.back() !=
      std::pair<int, int>{static_cast<int>(inst.p.size()),
                          static_cast<int>(inst.q.size())})
    return false;
  for (std::size_t s = 0; s < w.cells.size(); ++s) {
    auto [i, j] = w.cells[s];
    if (i < 1 || i > static_cast<int>(inst.p.size()) || j < 1 ||
        j > static_cast<int>(inst.q.size()))
      return false;
    if (dist2(inst.p[i - 1], inst.q[j - 1]) > inst.k2) return false;
    if (max_shift && std::abs(i - j) > *max_shift) return false;
    if (s > 0) {
      auto [pi, pj] = w.cells[s - 1];
      const int di = i - pi, dj = j - pj;
      const bool ok = (di == 1 && dj == 0) || (di == 0 && dj == 1) ||
                      (di == 1 && dj == 1);
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace

bool verify_witness(const ProblemInstance& inst, const SolveResult& result) {
  if (!result.witness) return false;
  const Witness& w = *result.witness;
  if (const auto* ov = std::get_if<OvInstance>(&inst)) {
    const auto* p = std::get_if<IndexPair>(&w);
    if (!p) return false;
    const auto [i, j] = *p;
    if (i < 1 || i > ov->n() || j < 1 || j > ov->n()) return false;
    return orthogonal(ov->a[i - 1], ov->b[j - 1]);
  }
  if (const auto* ts = std::get_if<ThreeSumInstance>(&inst)) {
    const auto* tr = std::get_if<IndexTriple>(&w);
    if (!tr) return false;
    for (auto idx : *tr)
      if (idx < 1 || idx > ts->n()) return false;
    return ts->values[(*tr)[0] - 1] + ts->values[(*tr)[1] - 1] +
               ts->values[(*tr)[2] - 1] ==
           0;
  }
  if (const auto* cv = std::get_if<ConvThreeSumInstance>(&inst)) {
    const auto* p = std::get_if<IndexPair>(&w);
    if (!p) return false;
    const auto [i, j] = *p;
    if (i < 1 || j < 1 || i + j > cv->n()) return false;
    return cv->values[i - 1] + cv->values[j - 1] == cv->values[i + j - 1];
  }
  if (const auto* mc = std::get_if<McConvThreeSumInstance>(&inst)) {
    const auto* p = std::get_if<IndexPair>(&w);
    if (!p) return false;
    const auto [i, j] = *p;
    if (i < 1 || j < 1 || i + j > mc->n()) return false;
    const auto& c = mc->c[i + j - 1];
    return c && mc->a[i - 1] + mc->b[j - 1] == *c;
  }
  if (const auto* g = std::get_if<WeightedGraph>(&inst)) {
    const auto* vs = std::get_if<VertexSet>(&w);
    if (!vs) return false;
    std::set<std::pair<int, int>> want;
    for (std::size_t x = 0; x < vs->size(); ++x)
      for (std::size_t y = x + 1; y < vs->size(); ++y) {
        if ((*vs)[x] == (*vs)[y]) return false;
        want.insert(std::minmax((*vs)[x], (*vs)[y]));
      }
    Weight total = 0;
    std::size_t found = 0;
    for (const auto& e : g->edges) {
      if (want.count(std::minmax(e.u, e.v))) {
        total += e.w;
        ++found;
      }
    }
    return found == want.size() && total < 0;
  }
  if (const auto* lcs = std::get_if<LcsInstance>(&inst)) {
    const auto* seq = std::get_if<SymbolSeq>(&w);
    if (!seq) return false;
    return static_cast<std::int64_t>(seq->size()) >= lcs->k &&
           is_subsequence(*seq, lcs->x1) && is_subsequence(*seq, lcs->x2);
  }
  if (const auto* lcis = std::get_if<LcisInstance>(&inst)) {
    const auto* seq = std::get_if<SymbolSeq>(&w);
    if (!seq) return false;
    for (std::size_t i = 1; i < seq->size(); ++i) {
      const bool ok = lcis->strict ? (*seq)[i - 1] < (*seq)[i]
                                   : (*seq)[i - 1] <= (*seq)[i];
      if (!ok) return false;
    }
    return static_cast<std::int64_t>(seq->size()) >= lcis->k &&
           is_subsequence(*seq, lcis->x1) && is_subsequence(*seq, lcis->x2);
  }
  if (const auto* fr = std::get_if<FrechetInstance>(&inst)) {
    const auto* tw = std::get_if<TraversalWitness>(&w);
    if (!tw) return false;
    return check_traversal(*fr, *tw, std::nullopt);
  }
  if (const auto* sp = std::get_if<SecondShortestPathInstance>(&inst)) {
    const auto* ww = std::get_if<WalkWitness>(&w);
    if (!ww || ww->edges.empty()) return false;
    int at = sp->s;
    Weight total = 0;
    for (int ei : ww->edges) {
      if (ei < 0 || ei >= static_cast<int>(sp->graph.edges.size()))
        return false;
      const auto& e = sp->graph.edges[ei];
      if (e.u != at) return false;
      at = e.v;
      total += e.w;
    }
    if (at != sp->t) return false;
    if (result.value && total != *result.value) return false;
    return total <= sp->k;
  }
  return false;
}

}  // namespace fgx
