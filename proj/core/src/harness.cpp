#include "fgx/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "fgx/compose.hpp"
#include "fgx/solvers.hpp"

namespace fgx {

namespace {

constexpr int kRejectCap = 2000;

std::int64_t ceil_log2(std::int64_t n) {
  std::int64_t r = 0;
  while ((std::int64_t{1} << r) < n) ++r;
  return r;
}

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

[[noreturn]] void reject_cap(const std::string& tag) {
  throw std::runtime_error("rejection cap exceeded generating planted=no " +
                           tag);
}

OvInstance gen_ov(const GenSpec& spec, SplitMix64& rng) {
  const std::int64_t n = std::max<std::int64_t>(1, spec.n);
  const std::int64_t d =
      spec.d > 0 ? spec.d : 2 * ceil_log2(std::max<std::int64_t>(2, n)) + 2;
  auto fill = [&](std::uint64_t num, std::uint64_t den) {
    OvInstance inst;
    inst.dim = static_cast<int>(d);
    for (auto* side : {&inst.a, &inst.b})
      for (std::int64_t i = 0; i < n; ++i) {
        std::vector<std::uint8_t> v(d);
        for (auto& bit : v) bit = rng.chance(num, den) ? 1 : 0;
        side->push_back(std::move(v));
      }
    return inst;
  };
  if (spec.planted == "yes") {
    OvInstance inst = fill(1, 2);
    const auto i = rng.below(n), j = rng.below(n);
    for (std::int64_t c = 0; c < d; ++c)
      if (inst.a[i][c] && inst.b[j][c]) {
        if (rng.chance(1, 2))
          inst.a[i][c] = 0;
        else
          inst.b[j][c] = 0;
      }
    return inst;
  }
  if (spec.planted == "no") {
    for (int attempt = 0; attempt < kRejectCap; ++attempt) {
      OvInstance inst = fill(3, 4);  // ones-biased keeps rejection short
      if (!solve_ov(inst).answer) return inst;
    }
    reject_cap("ov");
  }
  return fill(1, 2);
}

std::int64_t range_for_3sum(std::int64_t n) {
  const __int128 n4 = static_cast<__int128>(n) * n * n * n;
  const __int128 pref = static_cast<__int128>(8) * n * n * n;
  __int128 r = pref < n4 ? pref : n4;
  if (r < 16) r = 16;
  const __int128 lid = std::int64_t{1} << 60;
  return static_cast<std::int64_t>(r < lid ? r : lid);
}

ThreeSumInstance gen_3sum(const GenSpec& spec, SplitMix64& rng) {
  const std::int64_t n = std::max<std::int64_t>(1, spec.n);
  const std::int64_t r = range_for_3sum(n);
  auto fill = [&] {
    ThreeSumInstance inst;
    for (std::int64_t i = 0; i < n; ++i)
      inst.values.push_back(rng.range(-r / 2, r / 2));
    return inst;
  };
  if (spec.planted == "yes") {
    ThreeSumInstance inst = fill();
    if (n == 1) {
      inst.values[0] = 0;
      return inst;
    }
    const auto i = rng.below(n), j = rng.below(n);
    std::uint64_t h = rng.below(n);
    while (h == i || h == j) h = (h + 1) % n;
    inst.values[h] = -inst.values[i] - inst.values[j];
    return inst;
  }
  if (spec.planted == "no") {
    for (int attempt = 0; attempt < kRejectCap; ++attempt) {
      ThreeSumInstance inst = fill();
      if (!solve_3sum(inst).answer) return inst;
    }
    reject_cap("3sum");
  }
  return fill();
}

std::int64_t range_for_conv(std::int64_t n) {
  return std::max<std::int64_t>(16, 4 * n * n);
}

ConvThreeSumInstance gen_conv3sum(const GenSpec& spec, SplitMix64& rng) {
  const std::int64_t n = std::max<std::int64_t>(1, spec.n);
  const std::int64_t r = range_for_conv(n);
  auto fill = [&] {
    ConvThreeSumInstance inst;
    for (std::int64_t i = 0; i < n; ++i)
      inst.values.push_back(rng.range(-r / 2, r / 2));
    return inst;
  };
  if (spec.planted == "yes") {
    if (n < 2)
      throw std::invalid_argument("cannot plant a conv3sum solution at n < 2");
    ConvThreeSumInstance inst = fill();
    const std::int64_t i = 1 + static_cast<std::int64_t>(rng.below(n - 1));
    const std::int64_t j = 1 + static_cast<std::int64_t>(rng.below(n - i));
    inst.values[i + j - 1] = inst.values[i - 1] + inst.values[j - 1];
    return inst;
  }
  if (spec.planted == "no") {
    for (int attempt = 0; attempt < kRejectCap; ++attempt) {
      ConvThreeSumInstance inst = fill();
      if (!solve_conv3sum(inst).answer) return inst;
    }
    reject_cap("conv3sum");
  }
  return fill();
}

McConvThreeSumInstance gen_mcconv(const GenSpec& spec, SplitMix64& rng) {
  const std::int64_t n = std::max<std::int64_t>(1, spec.n);
  const std::int64_t r = range_for_conv(n);
  auto fill = [&] {
    McConvThreeSumInstance inst;
    for (std::int64_t i = 0; i < n; ++i)
      inst.a.push_back(rng.range(-r / 2, r / 2));
    for (std::int64_t i = 0; i < n; ++i)
      inst.b.push_back(rng.range(-r / 2, r / 2));
    for (std::int64_t i = 0; i < n; ++i) {
      if (rng.chance(1, 8))
        inst.c.push_back(std::nullopt);
      else
        inst.c.push_back(rng.range(-r / 2, r / 2));
    }
    return inst;
  };
  if (spec.planted == "yes") {
    if (n < 2)
      throw std::invalid_argument("cannot plant an mcconv3sum solution at n < 2");
    McConvThreeSumInstance inst = fill();
    const std::int64_t i = 1 + static_cast<std::int64_t>(rng.below(n - 1));
    const std::int64_t j = 1 + static_cast<std::int64_t>(rng.below(n - i));
    inst.c[i + j - 1] = inst.a[i - 1] + inst.b[j - 1];
    return inst;
  }
  if (spec.planted == "no") {
    for (int attempt = 0; attempt < kRejectCap; ++attempt) {
      McConvThreeSumInstance inst = fill();
      if (!solve_mc_conv3sum(inst).answer) return inst;
    }
    reject_cap("mcconv3sum");
  }
  return fill();
}

WeightedGraph graph_from_map(int n, bool directed,
                             const std::map<std::pair<int, int>, Weight>& m) {
  WeightedGraph g;
  g.n = n;
  g.directed = directed;
  for (const auto& [key, w] : m) g.edges.push_back({key.first, key.second, w});
  return g;
}

WeightedGraph gen_clique(const GenSpec& spec, SplitMix64& rng) {
  const int n = static_cast<int>(std::max<std::int64_t>(3, spec.n));
  const int k = spec.k > 0 ? static_cast<int>(spec.k) : 3;
  const Weight w_max = 8;
  auto fill = [&](bool positive_bias) {
    std::map<std::pair<int, int>, Weight> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) {
        if (!rng.chance(1, 2)) continue;
        Weight w;
        if (positive_bias)
          w = rng.chance(7, 8) ? rng.range(1, w_max)
                               : rng.range(-w_max / 4, -1);
        else
          w = rng.range(-w_max, w_max);
        edges[{u, v}] = w;
      }
    return edges;
  };
  if (spec.planted == "yes") {
    auto edges = fill(false);
    std::set<int> picked;
    while (static_cast<int>(picked.size()) < k)
      picked.insert(1 + static_cast<int>(rng.below(n)));
    for (auto it = picked.begin(); it != picked.end(); ++it)
      for (auto jt = std::next(it); jt != picked.end(); ++jt)
        edges[{*it, *jt}] = -1;
    auto g = graph_from_map(n, false, edges);
    g.k = k;
    return g;
  }
  if (spec.planted == "no") {
    for (int attempt = 0; attempt < kRejectCap; ++attempt) {
      auto g = graph_from_map(n, false, fill(true));
      g.k = k;
      if (!solve_neg_k_clique(g, k).answer) return g;
    }
    reject_cap("clique");
  }
  auto g = graph_from_map(n, false, fill(false));
  g.k = k;
  return g;
}

WeightedGraph gen_tricol(const GenSpec& spec, SplitMix64& rng) {
  const int n = static_cast<int>(std::max<std::int64_t>(3, spec.n));
  const int colors = static_cast<int>(
      spec.sigma > 0 ? spec.sigma : std::min<std::int64_t>(4, n));
  const Weight w_max = 8;
  auto fill = [&] {
    std::map<std::pair<int, int>, Weight> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng.chance(1, 4)) edges[{u, v}] = rng.range(-w_max, w_max);
    auto g = graph_from_map(n, false, edges);
    for (int v = 1; v <= n; ++v) g.colors.push_back((v - 1) % colors + 1);
    return g;
  };
  if (spec.planted == "yes") {
    auto g = fill();
    std::map<std::pair<int, int>, Weight> edges;
    for (const auto& e : g.edges) edges[{e.u, e.v}] = e.w;
    // a rainbow clique over one vertex per color realizes every triple
    std::vector<int> reps;
    for (int c = 1; c <= std::min(colors, n); ++c)
      reps.push_back(c);  // vertex v has color (v-1) % colors + 1
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        auto key = std::minmax(reps[i], reps[j]);
        if (!edges.count(key)) edges[key] = 1;
      }
    auto out = graph_from_map(n, false, edges);
    out.colors = g.colors;
    return out;
  }
  if (spec.planted == "no") {
    for (int attempt = 0; attempt < kRejectCap; ++attempt) {
      auto g = fill();
      if (!solve_triangle_collection(g).answer) return g;
    }
    reject_cap("tricol");
  }
  return fill();
}

std::vector<std::size_t> pick_positions(std::int64_t n, std::int64_t k,
                                        SplitMix64& rng) {
  std::set<std::size_t> pos;
  while (static_cast<std::int64_t>(pos.size()) < k)
    pos.insert(static_cast<std::size_t>(rng.below(n)));
  return {pos.begin(), pos.end()};
}

LcsInstance gen_lcs(const GenSpec& spec, SplitMix64& rng) {
  const std::int64_t n = std::max<std::int64_t>(1, spec.n);
  const std::int64_t sigma = spec.sigma > 0 ? spec.sigma : 4;
  const std::int64_t k =
      spec.k > 0 ? spec.k : std::max<std::int64_t>(1, 2 * n / 3);
  auto fill = [&] {
    LcsInstance inst;
    inst.sigma = sigma;
    inst.k = k;
    for (auto* s : {&inst.x1, &inst.x2})
      for (std::int64_t i = 0; i < n; ++i)
        s->push_back(static_cast<Symbol>(rng.below(sigma)));
    return inst;
  };
  if (spec.planted == "yes") {
    if (k > n) throw std::invalid_argument("cannot plant k > n symbols");
    LcsInstance inst = fill();
    SymbolSeq common;
    for (std::int64_t i = 0; i < k; ++i)
      common.push_back(static_cast<Symbol>(rng.below(sigma)));
    for (auto* s : {&inst.x1, &inst.x2}) {
      auto pos = pick_positions(n, k, rng);
      for (std::int64_t i = 0; i < k; ++i) (*s)[pos[i]] = common[i];
    }
    return inst;
  }
  if (spec.planted == "no") {
    for (int attempt = 0; attempt < kRejectCap; ++attempt) {
      LcsInstance inst = fill();
      if (!lcs_dp(inst).answer) return inst;
    }
    reject_cap("lcs");
  }
  return fill();
}

LcisInstance gen_lcis(const GenSpec& spec, SplitMix64& rng) {
  const std::int64_t n = std::max<std::int64_t>(1, spec.n);
  const std::int64_t top = 2 * n;
  const std::int64_t k =
      spec.k > 0 ? spec.k : std::max<std::int64_t>(1, n / 2);
  auto fill = [&] {
    LcisInstance inst;
    inst.strict = spec.strict;
    inst.k = k;
    for (auto* s : {&inst.x1, &inst.x2})
      for (std::int64_t i = 0; i < n; ++i)
        s->push_back(static_cast<Symbol>(rng.below(top)));
    return inst;
  };
  if (spec.planted == "yes") {
    if (k > n) throw std::invalid_argument("cannot plant k > n symbols");
    LcisInstance inst = fill();
    auto values = pick_positions(top, k, rng);  // ascending distinct
    for (auto* s : {&inst.x1, &inst.x2}) {
      auto pos = pick_positions(n, k, rng);
      for (std::int64_t i = 0; i < k; ++i)
        (*s)[pos[i]] = static_cast<Symbol>(values[i]);
    }
    return inst;
  }
  if (spec.planted == "no") {
    for (int attempt = 0; attempt < kRejectCap; ++attempt) {
      LcisInstance inst = fill();
      if (!lcis_dp(inst).answer) return inst;
    }
    reject_cap("lcis");
  }
  return fill();
}

FrechetInstance gen_frechet(const GenSpec& spec, SplitMix64& rng) {
  if (spec.planted != "none")
    throw std::invalid_argument("frechet generation supports planted=none only");
  const std::int64_t n = std::max<std::int64_t>(1, spec.n);
  FrechetInstance inst;
  inst.scale = 1;
  inst.k2 = rng.range(0, 18);
  std::int64_t x = 0, y = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    inst.p.push_back({x, y});
    inst.q.push_back({x + rng.range(-2, 2), y + rng.range(-2, 2)});
    x += rng.range(-3, 3);
    y += rng.range(-3, 3);
  }
  return inst;
}

SecondShortestPathInstance gen_2sp(const GenSpec& spec, SplitMix64& rng) {
  if (spec.planted != "none")
    throw std::invalid_argument("2sp generation supports planted=none only");
  const int n = static_cast<int>(std::max<std::int64_t>(2, spec.n));
  SecondShortestPathInstance inst;
  inst.graph.n = n;
  inst.graph.directed = true;
  inst.s = 1;
  inst.t = n;
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if (u != v && rng.chance(1, 3))
        inst.graph.edges.push_back({u, v, rng.range(0, 8)});
  inst.k = rng.range(0, 24);
  return inst;
}

}  // namespace

ProblemInstance generate(const GenSpec& spec) {
  SplitMix64 rng(spec.seed);
  const std::string& tag = spec.problem;
  if (tag == "ov") return gen_ov(spec, rng);
  if (tag == "3sum") return gen_3sum(spec, rng);
  if (tag == "conv3sum") return gen_conv3sum(spec, rng);
  if (tag == "mcconv3sum") return gen_mcconv(spec, rng);
  if (tag == "clique") return gen_clique(spec, rng);
  if (tag == "tricol") return gen_tricol(spec, rng);
  if (tag == "lcs") return gen_lcs(spec, rng);
  if (tag == "lcis") return gen_lcis(spec, rng);
  if (tag == "frechet") return gen_frechet(spec, rng);
  if (tag == "2sp") return gen_2sp(spec, rng);
  throw std::invalid_argument("unknown problem tag '" + tag + "'");
}

std::vector<std::string> audit_ledger(const ParameterLedger& led,
                                      std::int64_t n) {
  std::vector<std::string> fail;
  auto mismatch = [&](const std::string& what) {
    fail.push_back(what + " mismatch");
  };
  const std::string& s = led.shape;
  const bool is_decomp = s == "ov" || s == "clique" || s == "mcconv" ||
                         s == "convlift" || s == "tricol";
  if (is_decomp) {
    const Rat alpha =
        s == "clique" ? Rat(led.k) : (s == "tricol" ? Rat(3) : Rat(2));
    if (led.alpha != alpha) mismatch("alpha");
    if (led.lambda <= 0) {
      fail.push_back("lambda not positive");
      return fail;
    }
    const Rat eps = alpha / (alpha + led.lambda);
    if (led.epsilon != eps) mismatch("epsilon");
    if (led.source_n != n) mismatch("n");
    const std::int64_t q = ceil_rational_power(n, eps);
    const std::int64_t z = ceil_rational_power(n, Rat(1) - eps);
    if (led.q != q) mismatch("q");
    if (led.z != z) mismatch("z");
    std::int64_t t = z * z;
    if (s == "clique") t = ipow(z, led.k);
    if (s == "tricol") t = z * z * z;
    if (led.t != t) mismatch("t");
    std::int64_t n_max = q;
    if (s == "clique") n_max = std::min<std::int64_t>(led.k, z) * q;
    if (s == "mcconv") n_max = 2 * q;
    if (s == "convlift") n_max = 8 * q;
    if (s == "tricol") n_max = 3 * q;
    if (led.n_max != n_max) mismatch("n_max");
    if (s == "tricol" && led.ell_q.value_or(0) != 3 * q) mismatch("ell_q");
    return fail;
  }
  if (s == "lcs" || s == "lcis" || s == "union" || s == "frechet" ||
      s == "2sp") {
    if (led.t < 1) fail.push_back("t not positive");
    if (!led.n_q || !led.ell_q) {
      fail.push_back("composed parameters missing");
      return fail;
    }
    const std::int64_t c_n = s == "frechet" ? 4 : (s == "2sp" ? 5 : 1);
    const std::int64_t c_l = s == "frechet" ? 4 : 1;
    if (*led.n_q > c_n * led.t * led.n_max) fail.push_back("n_q bound exceeded");
    if (*led.ell_q > c_l * led.n_max) fail.push_back("ell_q bound exceeded");
    return fail;
  }
  fail.push_back("unknown ledger shape '" + s + "'");
  return fail;
}

std::string PipelineReport::to_text() const {
  std::ostringstream out;
  for (const auto& [key, value] : facts) out << key << "=" << value << "\n";
  for (const auto& msg : ledger_failures) out << "audit_fail=" << msg << "\n";
  out << "time_seconds=" << seconds << "\n";
  return out.str();
}

namespace {

struct PipelineContext {
  PipelineReport rep;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  void fact(const std::string& key, const std::string& value) {
    rep.facts.emplace_back(key, value);
  }
  void fact(const std::string& key, std::int64_t value) {
    fact(key, std::to_string(value));
  }
  void ledger_facts(const ParameterLedger& led) {
    for (const auto& [key, value] : ledger_to_lines(led))
      fact("ledger_" + key, value);
  }
  PipelineReport finish(bool direct, bool transformed, bool extra_ok) {
    rep.direct = direct;
    rep.transformed = transformed;
    rep.pass = direct == transformed && extra_ok && rep.ledger_failures.empty();
    fact("direct", direct ? "true" : "false");
    fact("transformed", transformed ? "true" : "false");
    fact("match", rep.pass ? "PASS" : "FAIL");
    rep.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return rep;
  }
};

bool or_over_subs(const std::vector<ProblemInstance>& subs) {
  bool any = false;
  for (const auto& sub : subs) any = any || solve(sub).answer;
  return any;
}

std::int64_t max_component_order(const WeightedGraph& g) {
  std::int64_t best = 0;
  for (const auto& comp : graph_components(g))
    best = std::max<std::int64_t>(best, comp.size());
  return best;
}

std::vector<GenSpec> part_specs(const GenSpec& spec, const std::string& tag,
                                SplitMix64& rng) {
  const std::int64_t t = spec.t > 0 ? spec.t : 3;
  std::vector<GenSpec> parts(t, spec);
  const std::uint64_t yes_at = rng.below(t);
  for (std::int64_t i = 0; i < t; ++i) {
    parts[i].problem = tag;
    parts[i].t = 0;
    parts[i].seed = rng.next();
    if (spec.planted == "yes")
      parts[i].planted =
          static_cast<std::uint64_t>(i) == yes_at ? "yes" : "no";
    else
      parts[i].planted = spec.planted;
  }
  return parts;
}

}  // namespace

PipelineReport run_pipeline(const std::string& name, const GenSpec& spec,
                            const Rat& lambda) {
  PipelineContext ctx;
  ctx.rep.name = name;
  ctx.fact("pipeline", name);
  ctx.fact("n", spec.n);
  ctx.fact("lambda", to_string(lambda));
  ctx.fact("seed", static_cast<std::int64_t>(spec.seed));
  ctx.fact("planted", spec.planted);
  SplitMix64 rng(spec.seed ^ 0xA5A5A5A5A5A5A5A5ULL);

  auto run_decomp = [&](const std::string& tag, auto decompose_fn) {
    GenSpec gspec = spec;
    gspec.problem = tag;
    ProblemInstance inst = generate(gspec);
    const bool direct = solve(inst).answer;
    DecompositionBundle bundle = decompose_fn(inst);
    ctx.ledger_facts(bundle.ledger);
    ctx.rep.ledger_failures = audit_ledger(bundle.ledger, spec.n);
    return ctx.finish(direct, or_over_subs(bundle.subs), true);
  };

  if (name == "ov-decomp")
    return run_decomp("ov", [&](const ProblemInstance& inst) {
      return decompose_ov(std::get<OvInstance>(inst), lambda);
    });
  if (name == "clique-decomp")
    return run_decomp("clique", [&](const ProblemInstance& inst) {
      const auto& g = std::get<WeightedGraph>(inst);
      return decompose_neg_k_clique(g, g.k > 0 ? g.k : 3, lambda);
    });
  if (name == "mcconv-decomp")
    return run_decomp("mcconv3sum", [&](const ProblemInstance& inst) {
      return decompose_mc_conv3sum(std::get<McConvThreeSumInstance>(inst),
                                   lambda);
    });
  if (name == "conv-lift")
    return run_decomp("conv3sum", [&](const ProblemInstance& inst) {
      return decompose_conv3sum(std::get<ConvThreeSumInstance>(inst), lambda);
    });

  if (name == "tricol-decomp") {
    GenSpec gspec = spec;
    gspec.problem = "tricol";
    auto inst = generate(gspec);
    const auto& g = std::get<WeightedGraph>(inst);
    const bool direct = solve_triangle_collection(g).answer;
    auto [h, led] = decompose_triangle_collection(g, lambda);
    ctx.ledger_facts(led);
    ctx.rep.ledger_failures = audit_ledger(led, spec.n);
    const std::int64_t comp = max_component_order(h);
    ctx.fact("max_component", comp);
    const bool transformed = solve_triangle_collection(h).answer;
    return ctx.finish(direct, transformed, comp <= 3 * led.q);
  }

  if (name == "clique-decomp-union") {
    GenSpec gspec = spec;
    gspec.problem = "clique";
    auto inst = generate(gspec);
    const auto& g = std::get<WeightedGraph>(inst);
    const int k = g.k > 0 ? g.k : 3;
    const bool direct = solve_neg_k_clique(g, k).answer;
    auto bundle = decompose_neg_k_clique(g, k, lambda);
    ctx.ledger_facts(bundle.ledger);
    ctx.rep.ledger_failures = audit_ledger(bundle.ledger, spec.n);
    std::vector<WeightedGraph> parts;
    parts.reserve(bundle.subs.size());
    for (const auto& sub : bundle.subs)
      parts.push_back(std::get<WeightedGraph>(sub));
    auto [merged, union_led] = compose_disjoint_union(parts, k);
    for (const auto& msg : audit_ledger(union_led, spec.n))
      ctx.rep.ledger_failures.push_back("union " + msg);
    const std::int64_t comp = max_component_order(merged);
    const std::int64_t bound = k * bundle.ledger.q;
    ctx.fact("union_n", merged.n);
    ctx.fact("max_component", comp);
    ctx.fact("component_bound", bound);
    const bool transformed = solve_neg_k_clique(merged, k).answer;
    return ctx.finish(direct, transformed, comp <= bound);
  }

  if (name == "lcs-compose") {
    auto specs = part_specs(spec, "lcs", rng);
    std::vector<LcsInstance> parts;
    bool direct = false;
    for (const auto& ps : specs)
      parts.push_back(std::get<LcsInstance>(generate(ps)));
    parts = pad_lcs_parts(std::move(parts));
    for (const auto& part : parts) direct = direct || lcs_dp(part).answer;
    auto [composed, led] = compose_lcs(parts);
    ctx.ledger_facts(led);
    ctx.rep.ledger_failures = audit_ledger(led, spec.n);
    return ctx.finish(direct, lcs_dp(composed).answer, true);
  }

  if (name == "lcis-compose") {
    auto specs = part_specs(spec, "lcis", rng);
    std::vector<LcisInstance> parts;
    bool direct = false;
    for (const auto& ps : specs)
      parts.push_back(std::get<LcisInstance>(generate(ps)));
    parts = pad_lcis_parts(std::move(parts));
    for (const auto& part : parts) direct = direct || lcis_dp(part).answer;
    auto [composed, led] = compose_lcis(parts);
    ctx.ledger_facts(led);
    ctx.rep.ledger_failures = audit_ledger(led, spec.n);
    return ctx.finish(direct, lcis_dp(composed).answer, true);
  }

  if (name == "frechet-compose") {
    const std::int64_t t = spec.t > 0 ? spec.t : 3;
    const std::int64_t m = std::max<std::int64_t>(2, spec.n ? spec.n : 6);
    std::vector<FrechetInstance> parts;
    bool direct = false;
    const std::uint64_t yes_at = rng.below(t);
    for (std::int64_t i = 0; i < t; ++i) {
      bool ans;
      if (spec.planted == "yes")
        ans = static_cast<std::uint64_t>(i) == yes_at;
      else if (spec.planted == "no")
        ans = false;
      else
        ans = rng.chance(1, 2);
      parts.push_back(make_frechet_gadget(ans, static_cast<int>(m), rng.next()));
      direct = direct || frechet_dp(parts.back()).answer;
    }
    auto [composed, led] = compose_frechet(parts);
    ctx.ledger_facts(led);
    ctx.rep.ledger_failures = audit_ledger(led, spec.n);
    const bool transformed = frechet_dp(composed).answer;
    bool shift_ok = true;
    if (transformed) {
      auto shift = frechet_min_shift(composed);
      shift_ok = shift && *shift <= *led.ell_q;
      ctx.fact("min_shift", shift ? *shift : -1);
    }
    return ctx.finish(direct, transformed, shift_ok);
  }

  if (name == "union-compose" || name == "2sp-compose") {
    auto specs = part_specs(spec, "clique", rng);
    std::vector<WeightedGraph> parts;
    bool direct = false;
    for (const auto& ps : specs) {
      parts.push_back(std::get<WeightedGraph>(generate(ps)));
      direct = direct || solve_neg_k_clique(parts.back(), 3).answer;
    }
    if (name == "union-compose") {
      auto [merged, led] = compose_disjoint_union(parts, 3);
      ctx.ledger_facts(led);
      ctx.rep.ledger_failures = audit_ledger(led, spec.n);
      return ctx.finish(direct, solve_neg_k_clique(merged, 3).answer, true);
    }
    auto [composed, led] = compose_second_shortest_path(parts);
    ctx.ledger_facts(led);
    ctx.rep.ledger_failures = audit_ledger(led, spec.n);
    auto res = second_shortest_simple_path(composed);
    ctx.fact("second_distance", res.value ? *res.value : -1);
    return ctx.finish(direct, res.answer, true);
  }

  throw std::invalid_argument("unknown pipeline '" + name + "'");
}

namespace {

double time_once(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::function<void()> bench_runner(const std::string& algo, std::int64_t size,
                                   std::int64_t fixed) {
  if (algo == "lcs_dp" || algo == "lcs_threshold") {
    GenSpec spec;
    spec.problem = "lcs";
    spec.n = size;
    spec.sigma = 4;
    spec.k = fixed > 0 ? fixed : 16;
    spec.seed = 0x9E3779B9ULL ^ static_cast<std::uint64_t>(size);
    auto inst = std::get<LcsInstance>(generate(spec));
    if (algo == "lcs_dp")
      return [inst] { lcs_dp(inst); };
    return [inst] { lcs_threshold(inst); };
  }
  if (algo == "frechet_dp" || algo == "frechet_banded") {
    GenSpec spec;
    spec.problem = "frechet";
    spec.n = algo == "frechet_banded" ? (fixed > 0 ? fixed : 4096) : size;
    spec.seed = 0x51ED270B ^ static_cast<std::uint64_t>(size);
    auto inst = std::get<FrechetInstance>(generate(spec));
    if (algo == "frechet_dp") return [inst] { frechet_dp(inst); };
    const BandSpec band{size};
    return [inst, band] { frechet_banded(inst, band); };
  }
  if (algo == "neg-triangle-components" || algo == "tricol-components") {
    // positive weights / sparse colors keep the scan exhaustive
    const std::int64_t ell = fixed > 0 ? fixed : 16;
    const std::int64_t blocks = std::max<std::int64_t>(1, size / ell);
    SplitMix64 rng(0xC0FFEE ^ static_cast<std::uint64_t>(size));
    WeightedGraph g;
    g.n = static_cast<int>(blocks * ell);
    g.directed = false;
    g.k = 3;
    for (std::int64_t b = 0; b < blocks; ++b)
      for (std::int64_t u = 1; u <= ell; ++u)
        for (std::int64_t v = u + 1; v <= ell; ++v)
          if (rng.chance(1, 2))
            g.edges.push_back({static_cast<int>(b * ell + u),
                               static_cast<int>(b * ell + v),
                               static_cast<Weight>(rng.range(1, 8))});
    if (algo == "neg-triangle-components")
      return [g] { solve_neg_k_clique(g, 3); };
    for (int v = 1; v <= g.n; ++v) g.colors.push_back((v - 1) % 4 + 1);
    return [g] { solve_triangle_collection(g); };
  }
  throw std::invalid_argument("unknown benchmark algorithm '" + algo + "'");
}

}  // namespace

double bench_point(const std::string& algo, std::int64_t size, int reps,
                   std::int64_t fixed) {
  auto runner = bench_runner(algo, size, fixed);
  double first = time_once(runner);
  int inner = 1;
  if (first < 0.015) inner = static_cast<int>(0.015 / std::max(first, 1e-7)) + 1;
  std::vector<double> samples;
  for (int r = 0; r < std::max(1, reps); ++r) {
    const double t = time_once([&] {
      for (int i = 0; i < inner; ++i) runner();
    });
    samples.push_back(t / inner);
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

BenchResult bench_envelope(const std::string& algo,
                           const std::vector<std::int64_t>& grid, int reps,
                           std::int64_t fixed) {
  if (grid.size() < 3)
    throw std::invalid_argument("grid too small to fit a slope");
  BenchResult result;
  for (std::int64_t size : grid)
    result.points.push_back({size, bench_point(algo, size, reps, fixed)});
  double sx = 0, sy = 0;
  for (const auto& p : result.points) {
    sx += std::log(static_cast<double>(p.size));
    sy += std::log(p.seconds);
  }
  const double mx = sx / result.points.size();
  const double my = sy / result.points.size();
  double num = 0, den = 0;
  for (const auto& p : result.points) {
    const double dx = std::log(static_cast<double>(p.size)) - mx;
    num += dx * (std::log(p.seconds) - my);
    den += dx * dx;
  }
  result.slope = num / den;
  return result;
}

}  // namespace fgx
