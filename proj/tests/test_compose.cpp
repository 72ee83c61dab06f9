#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "fgx/compose.hpp"
#include "fgx/harness.hpp"
#include "fgx/solvers.hpp"

using namespace fgx;

namespace {

LcsInstance lcs_part(const std::vector<Symbol>& a,
                     const std::vector<Symbol>& b, std::int64_t k,
                     std::int64_t sigma) {
  LcsInstance p;
  p.x1 = a;
  p.x2 = b;
  p.k = k;
  p.sigma = sigma;
  return p;
}

WeightedGraph triangle(std::initializer_list<Weight> weights) {
  WeightedGraph g;
  g.n = 3;
  g.k = 3;
  auto it = weights.begin();
  g.edges = {{1, 2, *it}, {1, 3, *(it + 1)}, {2, 3, *(it + 2)}};
  return g;
}

}  // namespace

TEST_CASE("lcs composition on the two-part example") {
  auto [out, led] = compose_lcs(
      {lcs_part({0, 1}, {1, 0}, 1, 2), lcs_part({0, 1}, {1, 0}, 1, 2)});
  CHECK(out.x1 == std::vector<Symbol>{0, 1, 2, 3});
  CHECK(out.x2 == std::vector<Symbol>{3, 2, 1, 0});
  CHECK(out.k == 1);
  CHECK(lcs_dp(out).answer);
  CHECK(led.n_q == 4);
  CHECK(audit_ledger(led, 0).empty());

  auto [none, led2] = compose_lcs(
      {lcs_part({0, 1}, {2, 3}, 1, 4), lcs_part({0, 1}, {2, 3}, 1, 4)});
  CHECK_FALSE(lcs_dp(none).answer);

  auto part = lcs_part({0, 1, 0}, {1, 0, 1}, 2, 2);
  auto [single, led3] = compose_lcs({part});
  CHECK(lcs_dp(single).answer == lcs_dp(part).answer);
}

TEST_CASE("lcs composition keeps part alphabets disjoint") {
  std::vector<LcsInstance> parts;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    GenSpec spec;
    spec.problem = "lcs";
    spec.n = 5;
    spec.sigma = 3;
    spec.k = 2;
    spec.seed = seed;
    parts.push_back(std::get<LcsInstance>(generate(spec)));
  }
  auto [out, led] = compose_lcs(parts);
  std::size_t offset = 0;
  std::vector<std::set<Symbol>> segments;
  for (const auto& p : parts) {
    segments.emplace_back(out.x1.begin() + offset,
                          out.x1.begin() + offset + p.x1.size());
    offset += p.x1.size();
  }
  for (std::size_t i = 0; i < segments.size(); ++i)
    for (std::size_t j = i + 1; j < segments.size(); ++j)
      for (Symbol s : segments[i]) CHECK_FALSE(segments[j].count(s));
}

TEST_CASE("lcs padding equalizes k and preserves answers") {
  std::vector<LcsInstance> parts = {lcs_part({0, 1, 0}, {0, 1, 1}, 2, 2),
                                    lcs_part({1, 0}, {0, 1}, 1, 2)};
  std::vector<bool> before;
  for (const auto& p : parts) before.push_back(lcs_dp(p).answer);
  auto padded = pad_lcs_parts(parts);
  CHECK(padded[0].k == padded[1].k);
  for (std::size_t i = 0; i < padded.size(); ++i)
    CHECK(lcs_dp(padded[i]).answer == before[i]);
  CHECK_THROWS_AS(compose_lcs(parts), std::invalid_argument);
}

TEST_CASE("lcis composition on the worked example") {
  LcisInstance a;
  a.x1 = {2, 1};
  a.x2 = {1, 2};
  a.k = 1;
  LcisInstance b;
  b.x1 = {1, 3};
  b.x2 = {3, 1};
  b.k = 1;
  auto [out, led] = compose_lcis({a, b});
  CHECK(out.x1 == std::vector<Symbol>{6, 5, 9, 11});
  CHECK(out.x2 == std::vector<Symbol>{11, 9, 5, 6});
  CHECK(lcis_dp(out).answer);
  CHECK(audit_ledger(led, 0).empty());
}

TEST_CASE("lcis composition is an OR, both flavors") {
  for (bool strict : {true, false}) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      std::vector<LcisInstance> parts;
      bool any = false;
      SplitMix64 rng(seed * 1009 + strict);
      const int t = 1 + static_cast<int>(rng.below(4));
      for (int i = 0; i < t; ++i) {
        GenSpec spec;
        spec.problem = "lcis";
        spec.n = 2 + rng.below(7);
        spec.strict = strict;
        spec.planted = rng.chance(1, 2) ? "yes" : "no";
        spec.seed = rng.next();
        parts.push_back(std::get<LcisInstance>(generate(spec)));
      }
      parts = pad_lcis_parts(std::move(parts));
      for (const auto& p : parts) any = any || lcis_dp(p).answer;
      auto [out, led] = compose_lcis(parts);
      CAPTURE(strict);
      CAPTURE(seed);
      CHECK(lcis_dp(out).answer == any);
      CHECK(audit_ledger(led, 0).empty());
    }
  }
}

TEST_CASE("frame facts at scale 15 hold exactly") {
  using F = FrechetFrame;
  CHECK(dist2(F::s_a, F::s_b) == 9);
  CHECK(dist2(F::ell_b, F::s_a) == 225);
  CHECK(dist2(F::ell_a, F::s_b) == 225);
  CHECK(dist2(F::ell_a, F::c_a) == 425);
  CHECK(dist2(Point{0, 19}, F::s_a) == 281);
  CHECK(dist2(Point{0, 19}, F::c_a) == 196);
}

TEST_CASE("gadgets satisfy the contract and their promised answer") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (bool answer : {true, false}) {
      const int m = 2 + static_cast<int>(seed % 7);
      auto g = make_frechet_gadget(answer, m, seed);
      CAPTURE(seed);
      CAPTURE(answer);
      CHECK(validate_frechet_contract(g).empty());
      CHECK(frechet_dp(g).answer == answer);
      CHECK(static_cast<int>(g.p.size()) == m);
      CHECK(static_cast<int>(g.q.size()) == m);
    }
  }
}

TEST_CASE("contract violations are reported per condition") {
  auto g = make_frechet_gadget(true, 4, 7);
  auto no_far = g;
  for (auto& pt : no_far.q)
    if (dist2(pt, FrechetFrame::s_a) > 225) pt = FrechetFrame::c_a;
  auto v = validate_frechet_contract(no_far);
  REQUIRE(!v.empty());
  CHECK(v.front().find("farther than 1 from s_A") != std::string::npos);

  auto repeated = g;
  repeated.p.push_back(FrechetFrame::s_a);
  v = validate_frechet_contract(repeated);
  bool mentions_start = false;
  for (const auto& msg : v)
    mentions_start =
        mentions_start || msg.find("only at the start") != std::string::npos;
  CHECK(mentions_start);

  auto wrong_scale = g;
  wrong_scale.scale = 14;
  CHECK_FALSE(validate_frechet_contract(wrong_scale).empty());
}

TEST_CASE("curve composition matches the OR of its parts") {
  auto yes = make_frechet_gadget(true, 5, 1);
  auto no1 = make_frechet_gadget(false, 4, 2);
  auto no2 = make_frechet_gadget(false, 6, 3);

  auto [all_no, led1] = compose_frechet({no1, no2, no1});
  CHECK_FALSE(frechet_dp(all_no).answer);

  auto [mid_yes, led2] = compose_frechet({no1, yes, no2});
  CHECK(frechet_dp(mid_yes).answer);

  auto [single, led3] = compose_frechet({yes});
  CHECK(frechet_dp(single).answer);
  auto shift = frechet_min_shift(single);
  REQUIRE(shift.has_value());
  CHECK(*shift <= 2 * (static_cast<std::int64_t>(yes.p.size()) + 2));
  CHECK(*shift <= *led3.ell_q);

  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    SplitMix64 rng(seed * 31337);
    const int t = 1 + static_cast<int>(rng.below(5));
    std::vector<FrechetInstance> parts;
    bool any = false;
    for (int i = 0; i < t; ++i) {
      const bool ans = rng.chance(1, 3);
      any = any || ans;
      parts.push_back(
          make_frechet_gadget(ans, 2 + static_cast<int>(rng.below(6)),
                              rng.next()));
    }
    auto [out, led] = compose_frechet(parts);
    CAPTURE(seed);
    CHECK(frechet_dp(out).answer == any);
    CHECK(audit_ledger(led, 0).empty());
    CHECK(out.p.size() == out.q.size());
  }
}

TEST_CASE("composition rejects contract violations") {
  FrechetInstance junk;
  junk.scale = 15;
  junk.k2 = 225;
  junk.p = {{0, 0}};
  junk.q = {{0, 0}};
  CHECK_THROWS_AS(compose_frechet({junk}), std::invalid_argument);
}

TEST_CASE("disjoint union composes negative-clique answers") {
  auto neg = triangle({-2, 1, 0});
  auto pos = triangle({1, 1, 1});
  auto [out, led] = compose_disjoint_union({neg, pos}, 3);
  CHECK(solve_neg_k_clique(out, 3).answer);
  CHECK(*led.ell_q == 3);
  CHECK(out.n == 6);
  CHECK_THROWS_AS(compose_disjoint_union({}, 3), std::invalid_argument);

  auto [same, led2] = compose_disjoint_union({pos}, 3);
  CHECK(solve_neg_k_clique(same, 3).answer ==
        solve_neg_k_clique(pos, 3).answer);

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SplitMix64 rng(seed * 503);
    const int t = 1 + static_cast<int>(rng.below(5));
    std::vector<WeightedGraph> parts;
    bool any = false;
    for (int i = 0; i < t; ++i) {
      GenSpec spec;
      spec.problem = "clique";
      spec.n = 3 + rng.below(6);
      spec.planted = rng.chance(1, 2) ? "yes" : "no";
      spec.seed = rng.next();
      parts.push_back(std::get<WeightedGraph>(generate(spec)));
      any = any || solve_neg_k_clique(parts.back(), 3).answer;
    }
    auto [merged, led3] = compose_disjoint_union(parts, 3);
    CAPTURE(seed);
    CHECK(solve_neg_k_clique(merged, 3).answer == any);
    CHECK(audit_ledger(led3, 0).empty());
  }
}

TEST_CASE("path composition detects a single negative triangle") {
  auto [inst, led] = compose_second_shortest_path({triangle({-2, 1, 0})});
  auto r = second_shortest_simple_path(inst);
  CHECK(r.answer);  // triangle weight -1 lands exactly on the bound
  REQUIRE(r.value.has_value());
  CHECK(*r.value == inst.k);
  CHECK(*led.ell_q == 3);

  auto [clean, led2] = compose_second_shortest_path({triangle({1, 1, 1})});
  CHECK_FALSE(second_shortest_simple_path(clean).answer);
}

TEST_CASE("path composition structure invariants") {
  std::vector<WeightedGraph> parts = {triangle({-2, 1, 0}),
                                      triangle({1, 1, 1})};
  auto [inst, led] = compose_second_shortest_path(parts);
  const auto& g = inst.graph;
  const std::int64_t n = led.n_max;
  Weight m_abs = 1;
  for (const auto& part : parts)
    for (const auto& e : part.edges) m_abs = std::max(m_abs, std::abs(e.w));
  const Weight c = 3 * m_abs + 1;
  int zero_weight = 0;
  for (const auto& e : g.edges) {
    if (e.w == 0)
      ++zero_weight;  // the shared path only
    else
      CHECK(e.w >= c - m_abs);
  }
  CHECK(zero_weight == n + 1);

  // removing p_1..p_n (and s) leaves an acyclic layer graph
  std::vector<char> keep(g.n + 1, 1);
  for (int v = 1; v <= static_cast<int>(n) + 1; ++v) keep[v] = 0;
  std::vector<int> indeg(g.n + 1, 0);
  for (const auto& e : g.edges)
    if (keep[e.u] && keep[e.v]) ++indeg[e.v];
  std::vector<int> order;
  for (int v = 1; v <= g.n; ++v)
    if (keep[v] && indeg[v] == 0) order.push_back(v);
  std::size_t head = 0;
  int seen = 0;
  std::vector<std::vector<int>> adj(g.n + 1);
  for (const auto& e : g.edges)
    if (keep[e.u] && keep[e.v]) adj[e.u].push_back(e.v);
  while (head < order.size()) {
    ++seen;
    for (int w : adj[order[head++]])
      if (--indeg[w] == 0) order.push_back(w);
  }
  int kept = 0;
  for (int v = 1; v <= g.n; ++v) kept += keep[v];
  CHECK(seen == kept);
}

TEST_CASE("path composition equals the OR over many random lists") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    SplitMix64 rng(seed * 12007);
    const int t = 1 + static_cast<int>(rng.below(4));
    std::vector<WeightedGraph> parts;
    bool any = false;
    for (int i = 0; i < t; ++i) {
      GenSpec spec;
      spec.problem = "clique";
      spec.n = 3 + rng.below(6);  // up to 8 vertices
      spec.planted = rng.chance(1, 2) ? "yes" : "no";
      spec.seed = rng.next();
      parts.push_back(std::get<WeightedGraph>(generate(spec)));
      any = any || solve_neg_k_clique(parts.back(), 3).answer;
    }
    auto [inst, led] = compose_second_shortest_path(parts);
    CAPTURE(seed);
    CHECK(second_shortest_simple_path(inst).answer == any);
    CHECK(audit_ledger(led, 0).empty());
  }
}
