#include "fgx/compose.hpp"

#include <algorithm>
#include <set>

#include "fgx/rng.hpp"

namespace fgx {

namespace {

void require_nonempty(std::size_t t) {
  if (t == 0) throw std::invalid_argument("composition needs >= 1 part");
}

template <typename T>
std::int64_t uniform_k(const std::vector<T>& parts) {
  for (const auto& p : parts)
    if (p.k != parts.front().k)
      throw std::invalid_argument("parts must share k; pad first");
  return parts.front().k;
}

}  // namespace

std::vector<LcsInstance> pad_lcs_parts(std::vector<LcsInstance> parts) {
  std::int64_t k_max = 0;
  for (const auto& p : parts) k_max = std::max(k_max, p.k);
  for (auto& p : parts) {
    if (p.k == k_max) continue;
    const Symbol fresh = p.sigma;
    p.sigma += 1;
    for (std::int64_t i = p.k; i < k_max; ++i) {
      p.x1.push_back(fresh);
      p.x2.push_back(fresh);
    }
    p.k = k_max;
  }
  return parts;
}

std::pair<LcsInstance, ParameterLedger> compose_lcs(
    const std::vector<LcsInstance>& parts) {
  require_nonempty(parts.size());
  const std::int64_t k = uniform_k(parts);
  std::int64_t sig = 0;
  for (const auto& p : parts) sig = std::max(sig, p.sigma);

  LcsInstance out;
  out.k = k;
  out.sigma = sig * static_cast<std::int64_t>(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (Symbol s : parts[i].x1)
      out.x1.push_back(static_cast<std::int64_t>(i) * sig + s);
  for (std::size_t i = parts.size(); i-- > 0;)
    for (Symbol s : parts[i].x2)
      out.x2.push_back(static_cast<std::int64_t>(i) * sig + s);

  ParameterLedger led;
  led.shape = "lcs";
  led.t = static_cast<std::int64_t>(parts.size());
  std::int64_t n_max = 0;
  for (const auto& p : parts)
    n_max = std::max<std::int64_t>(
        n_max, std::max(p.x1.size(), p.x2.size()));
  led.n_max = n_max;
  led.nu = Rat(1);
  led.mu = Rat(1);
  led.n_q = static_cast<std::int64_t>(std::max(out.x1.size(), out.x2.size()));
  led.ell_q = k;
  return {std::move(out), led};
}

std::vector<LcisInstance> pad_lcis_parts(std::vector<LcisInstance> parts) {
  std::int64_t k_max = 0;
  for (const auto& p : parts) k_max = std::max(k_max, p.k);
  for (auto& p : parts) {
    if (p.k == k_max) continue;
    Symbol top = 0;
    for (const auto* s : {&p.x1, &p.x2})
      for (Symbol v : *s) top = std::max(top, v);
    for (std::int64_t i = 0; i < k_max - p.k; ++i) {
      p.x1.push_back(top + 1 + i);
      p.x2.push_back(top + 1 + i);
    }
    p.k = k_max;
  }
  return parts;
}

std::pair<LcisInstance, ParameterLedger> compose_lcis(
    const std::vector<LcisInstance>& parts) {
  require_nonempty(parts.size());
  const std::int64_t k = uniform_k(parts);
  for (const auto& p : parts)
    if (p.strict != parts.front().strict)
      throw std::invalid_argument("parts must share the strict flag");

  Symbol c_max = 0;
  for (const auto& p : parts)
    for (const auto* s : {&p.x1, &p.x2})
      for (Symbol v : *s) c_max = std::max(c_max, v);
  c_max += 1;

  LcisInstance out;
  out.k = k;
  out.strict = parts.front().strict;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Symbol shift = static_cast<Symbol>(i + 1) * c_max;
    for (Symbol s : parts[i].x1) out.x1.push_back(s + shift);
  }
  // decreasing shift order blocks cross-part increasing subsequences
  for (std::size_t i = parts.size(); i-- > 0;) {
    const Symbol shift = static_cast<Symbol>(i + 1) * c_max;
    for (Symbol s : parts[i].x2) out.x2.push_back(s + shift);
  }

  ParameterLedger led;
  led.shape = "lcis";
  led.t = static_cast<std::int64_t>(parts.size());
  std::int64_t n_max = 0;
  for (const auto& p : parts)
    n_max = std::max<std::int64_t>(
        n_max, std::max(p.x1.size(), p.x2.size()));
  led.n_max = n_max;
  led.nu = Rat(1);
  led.mu = Rat(1);
  led.n_q = static_cast<std::int64_t>(std::max(out.x1.size(), out.x2.size()));
  led.ell_q = k;
  return {std::move(out), led};
}

std::vector<std::string> validate_frechet_contract(
    const FrechetInstance& inst) {
  using F = FrechetFrame;
  std::vector<std::string> out;
  if (inst.scale != F::scale) {
    out.push_back("scale must be 15");
    return out;
  }
  if (inst.k2 != F::k2) out.push_back("threshold k2 must be 225");
  if (inst.p.empty() || inst.q.empty()) {
    out.push_back("empty point list");
    return out;
  }
  if (inst.p.front() != F::s_a) out.push_back("P must start at s_A");
  for (std::size_t i = 1; i < inst.p.size(); ++i)
    if (inst.p[i] == F::s_a) {
      out.push_back("s_A may appear only at the start of P");
      break;
    }
  if (inst.q.front() != F::s_b) out.push_back("Q must start at s_B");
  for (const auto& pt : inst.q)
    if (dist2(pt, F::c_a) > F::k2) {
      out.push_back("Q point farther than 1 from c_A");
      break;
    }
  for (const auto& pt : inst.p)
    if (dist2(pt, F::c_b) > F::k2) {
      out.push_back("P point farther than 1 from c_B");
      break;
    }
  for (const auto& pt : inst.q)
    if (pt != F::s_b && dist2(F::ell_a, pt) <= F::k2) {
      out.push_back("ell_A within 1 of a Q point other than s_B");
      break;
    }
  for (const auto& pt : inst.p)
    if (pt != F::s_a && dist2(F::ell_b, pt) <= F::k2) {
      out.push_back("ell_B within 1 of a P point other than s_A");
      break;
    }
  bool far = false;
  for (const auto& pt : inst.q) far = far || dist2(pt, F::s_a) > F::k2;
  if (!far) out.push_back("no Q point farther than 1 from s_A");
  return out;
}

FrechetInstance make_frechet_gadget(bool answer, int m, std::uint64_t seed) {
  if (m < 2) throw std::invalid_argument("gadget needs >= 2 points per curve");
  using F = FrechetFrame;
  static constexpr Point p_pool[] = {{-5, 0}, {-4, 0}, {-5, 1},
                                     {-5, -1}, {-4, 1}, {-4, -1}};
  static constexpr Point q_pool[] = {{0, 5},  {1, 5}, {-1, 5}, {0, 4}, {1, 4},
                                     {-1, 4}, {0, 6}, {1, 6},  {-1, 6}};
  static constexpr Point far_q{0, 19};    // beyond 1 of s_A and the P cluster
  static constexpr Point bridge{-2, 9};   // within 1 of both c_B and far_q

  SplitMix64 rng(seed);
  FrechetInstance inst;
  inst.scale = F::scale;
  inst.k2 = F::k2;
  inst.p.push_back(F::s_a);
  inst.q.push_back(F::s_b);
  const int far_at = 1 + static_cast<int>(rng.below(m - 1));
  for (int i = 1; i < m; ++i) {
    inst.q.push_back(i == far_at ? far_q : q_pool[rng.below(std::size(q_pool))]);
    if (i == far_at && answer)
      inst.p.push_back(bridge);
    else
      inst.p.push_back(p_pool[rng.below(std::size(p_pool))]);
  }
  return inst;
}

std::pair<FrechetInstance, ParameterLedger> compose_frechet(
    const std::vector<FrechetInstance>& parts) {
  require_nonempty(parts.size());
  using F = FrechetFrame;
  for (const auto& part : parts) {
    auto violations = validate_frechet_contract(part);
    if (!violations.empty())
      throw std::invalid_argument("contract violation: " + violations.front());
  }
  std::vector<FrechetInstance> all = parts;
  all.push_back(make_frechet_gadget(false, 4, 0xF6C8ED));  // terminator

  FrechetInstance out;
  out.scale = F::scale;
  out.k2 = F::k2;
  for (std::size_t i = 0; i < all.size(); ++i) {
    out.p.insert(out.p.end(), all[i].p.begin(), all[i].p.end());
    if (i + 1 < all.size()) {
      out.p.push_back(F::ell_a);
      out.p.push_back(F::c_a);
    }
    out.q.insert(out.q.end(), all[i].q.begin(), all[i].q.end());
    out.q.push_back(F::ell_b);
  }
  out.q.push_back(F::c_b);
  while (out.q.size() < out.p.size()) out.q.push_back(F::c_b);
  while (out.p.size() < out.q.size()) out.p.push_back(F::c_b);

  ParameterLedger led;
  led.shape = "frechet";
  led.t = static_cast<std::int64_t>(parts.size());
  std::int64_t n_max = 0;
  for (const auto& g : all)
    n_max = std::max<std::int64_t>(n_max, g.p.size());
  led.n_max = n_max;
  led.nu = Rat(1);
  led.mu = Rat(1);
  led.n_q = static_cast<std::int64_t>(out.p.size());
  led.ell_q = 2 * (n_max + 2);
  return {std::move(out), led};
}

std::pair<WeightedGraph, ParameterLedger> compose_disjoint_union(
    const std::vector<WeightedGraph>& parts, int k) {
  require_nonempty(parts.size());
  WeightedGraph out;
  out.directed = false;
  out.k = k;
  std::int64_t n_max = 0;
  for (const auto& g : parts) {
    const int offset = out.n;
    for (const auto& e : g.edges)
      out.edges.push_back({e.u + offset, e.v + offset, e.w});
    out.n += g.n;
    n_max = std::max<std::int64_t>(n_max, g.n);
  }
  ParameterLedger led;
  led.shape = "union";
  led.k = k;
  led.t = static_cast<std::int64_t>(parts.size());
  led.n_max = n_max;
  led.nu = Rat(1);
  led.mu = Rat(1);
  led.n_q = out.n;
  led.ell_q = n_max;
  return {std::move(out), led};
}

std::pair<SecondShortestPathInstance, ParameterLedger>
compose_second_shortest_path(const std::vector<WeightedGraph>& parts) {
  require_nonempty(parts.size());
  const std::int64_t t = static_cast<std::int64_t>(parts.size());
  std::int64_t n = 0;
  Weight m_abs = 1;
  for (const auto& g : parts) {
    n = std::max<std::int64_t>(n, g.n);
    for (const auto& e : g.edges) m_abs = std::max(m_abs, std::abs(e.w));
  }
  const Weight c = 3 * m_abs + 1;  // detour base, keeps all weights positive
  const Weight d = 3 * m_abs + 1;  // skip penalty per slot difference

  // vertex layout: s, p_1..p_n, t, then per part an a-layer and b-layer
  SecondShortestPathInstance out;
  auto& g = out.graph;
  g.directed = true;
  out.s = 1;
  const int t_vertex = static_cast<int>(n) + 2;
  out.t = t_vertex;
  g.n = static_cast<int>(n + 2 + 2 * n * t);
  auto p_vertex = [&](std::int64_t j) {  // j in [0, n]; p_0 is s
    return j == 0 ? 1 : static_cast<int>(1 + j);
  };
  auto a_vertex = [&](std::int64_t part, std::int64_t u) {
    return static_cast<int>(n + 2 + part * 2 * n + u);
  };
  auto b_vertex = [&](std::int64_t part, std::int64_t u) {
    return static_cast<int>(n + 2 + part * 2 * n + n + u);
  };

  for (std::int64_t j = 1; j <= n; ++j)
    g.edges.push_back({p_vertex(j - 1), p_vertex(j), 0});
  g.edges.push_back({p_vertex(n), t_vertex, 0});

  for (std::int64_t part = 0; part < t; ++part) {
    std::vector<Weight> w(static_cast<std::size_t>(n) * n, 0);
    std::vector<char> has(static_cast<std::size_t>(n) * n, 0);
    for (const auto& e : parts[part].edges) {
      has[(e.u - 1) * n + (e.v - 1)] = has[(e.v - 1) * n + (e.u - 1)] = 1;
      w[(e.u - 1) * n + (e.v - 1)] = w[(e.v - 1) * n + (e.u - 1)] = e.w;
    }
    auto weight = [&](std::int64_t x, std::int64_t y) {
      return w[(x - 1) * n + (y - 1)];
    };
    auto adj = [&](std::int64_t x, std::int64_t y) {
      return has[(x - 1) * n + (y - 1)] != 0;
    };
    for (std::int64_t j = 1; j <= n; ++j)
      for (std::int64_t u = 1; u <= n; ++u) {
        if (!adj(j, u)) continue;
        // entering slot j reads edge (v_j, u); leaving it reads (u', v_j)
        g.edges.push_back(
            {p_vertex(j - 1), a_vertex(part, u), c + weight(j, u) + (n - j) * d});
        g.edges.push_back(
            {b_vertex(part, u), p_vertex(j), c + weight(u, j) + j * d});
      }
    for (std::int64_t u = 1; u <= n; ++u)
      for (std::int64_t v = 1; v <= n; ++v)
        if (adj(u, v))
          g.edges.push_back(
              {a_vertex(part, u), b_vertex(part, v), c + weight(u, v)});
  }
  // one detour costs 3c + n*d + triangle weight; cross-slot rejoins pay
  // at least one extra d > 3*m_abs and land above the bound
  out.k = 3 * c + n * d - 1;

  ParameterLedger led;
  led.shape = "2sp";
  led.t = t;
  led.n_max = n;
  led.nu = Rat(1);
  led.mu = Rat(1);
  led.n_q = g.n;
  led.ell_q = n;  // {p_1..p_n} meets every directed cycle
  return {std::move(out), led};
}

}  // namespace fgx
