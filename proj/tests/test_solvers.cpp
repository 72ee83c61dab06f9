#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fgx/harness.hpp"
#include "fgx/solvers.hpp"
#include "test_util.hpp"

using namespace fgx;
using namespace fgx::testutil;

namespace {

LcsInstance lcs_from(const std::vector<Symbol>& a,
                     const std::vector<Symbol>& b, std::int64_t k,
                     std::int64_t sigma = 0) {
  LcsInstance inst;
  inst.x1 = a;
  inst.x2 = b;
  inst.k = k;
  inst.sigma = sigma;
  if (sigma == 0) {
    for (auto s : a) inst.sigma = std::max(inst.sigma, s + 1);
    for (auto s : b) inst.sigma = std::max(inst.sigma, s + 1);
    inst.sigma = std::max<std::int64_t>(inst.sigma, 1);
  }
  return inst;
}

}  // namespace

TEST_CASE("orthogonal vectors brute force") {
  OvInstance inst;
  inst.dim = 2;
  inst.a = {{1, 0}};
  inst.b = {{0, 1}};
  auto r = solve_ov(inst);
  CHECK(r.answer);
  CHECK(std::get<IndexPair>(*r.witness) == IndexPair{1, 1});
  CHECK(verify_witness(inst, r));

  inst.a = {{1, 1}};
  inst.b = {{1, 1}};
  CHECK_FALSE(solve_ov(inst).answer);

  inst.dim = 3;
  inst.a = {{1, 0, 1}, {1, 1, 0}};
  inst.b = {{0, 1, 1}, {1, 1, 1}};
  CHECK_FALSE(solve_ov(inst).answer);
}

TEST_CASE("3sum allows repeated indices") {
  ThreeSumInstance inst;
  inst.values = {0, 0, 0};
  CHECK(solve_3sum(inst).answer);
  inst.values = {1, 2, 4};
  CHECK_FALSE(solve_3sum(inst).answer);
  inst.values = {5, -2, -3};
  auto r = solve_3sum(inst);
  CHECK(r.answer);
  CHECK(verify_witness(inst, r));
  inst.values = {-4, 2};  // 2 + 2 + (-4)
  CHECK(solve_3sum(inst).answer);
}

TEST_CASE("convolution forms") {
  ConvThreeSumInstance conv;
  conv.values = {5, 1, 2};
  CHECK_FALSE(solve_conv3sum(conv).answer);
  conv.values = {1, 2, 3};  // A[1]+A[1] != A[2]; A[1]+A[2]=3=A[3]
  auto r = solve_conv3sum(conv);
  CHECK(r.answer);
  CHECK(verify_witness(conv, r));

  McConvThreeSumInstance mc;
  mc.a = {1, 5};
  mc.b = {2, 9};
  mc.c = {std::nullopt, 3};
  auto mr = solve_mc_conv3sum(mc);
  CHECK(mr.answer);
  CHECK(std::get<IndexPair>(*mr.witness) == IndexPair{1, 1});
  mc.c = {std::nullopt, std::nullopt};
  CHECK_FALSE(solve_mc_conv3sum(mc).answer);
}

TEST_CASE("negative triangle enumeration per component") {
  WeightedGraph g;
  g.n = 3;
  g.edges = {{1, 2, -2}, {1, 3, 1}, {2, 3, 0}};
  auto r = solve_neg_k_clique(g, 3);
  CHECK(r.answer);
  CHECK(verify_witness(g, r));

  g.edges = {{1, 2, 1}, {1, 3, 1}, {2, 3, 1}};
  CHECK_FALSE(solve_neg_k_clique(g, 3).answer);

  g.n = 6;
  g.edges = {{1, 2, 1},  {1, 3, 1},  {2, 3, 1},
             {4, 5, -3}, {4, 6, 1},  {5, 6, 1}};
  r = solve_neg_k_clique(g, 3);
  CHECK(r.answer);
  const auto& w = std::get<VertexSet>(*r.witness);
  CHECK(w == VertexSet{4, 5, 6});

  CHECK_THROWS_AS(solve_neg_k_clique(g, 5), std::invalid_argument);
}

TEST_CASE("negative 4-clique") {
  WeightedGraph g;
  g.n = 5;
  g.k = 4;
  for (int u = 1; u <= 4; ++u)
    for (int v = u + 1; v <= 4; ++v) g.edges.push_back({u, v, -1});
  g.edges.push_back({4, 5, 100});
  auto r = solve_neg_k_clique(g, 4);
  CHECK(r.answer);
  CHECK(std::get<VertexSet>(*r.witness).size() == 4);
  CHECK(verify_witness(g, r));
}

TEST_CASE("triangle collection examples") {
  WeightedGraph g;
  g.n = 3;
  g.edges = {{1, 2, 0}, {1, 3, 0}, {2, 3, 0}};
  g.colors = {1, 2, 3};
  CHECK(solve_triangle_collection(g).answer);

  g.edges.clear();
  CHECK_FALSE(solve_triangle_collection(g).answer);
}

TEST_CASE("triangle collection matches whole-graph scan on randoms") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    GenSpec spec;
    spec.problem = "tricol";
    spec.n = 12;
    spec.sigma = 4;
    spec.seed = seed;
    auto g = std::get<WeightedGraph>(generate(spec));
    CAPTURE(seed);
    CHECK(solve_triangle_collection(g).answer ==
          triangle_collection_brute(g));
  }
}

TEST_CASE("lcs dp against exhaustive search") {
  // ABCBDAB / BDCABA with A=0 B=1 C=2 D=3
  auto inst = lcs_from({0, 1, 2, 1, 3, 0, 1}, {1, 3, 2, 0, 1, 0}, 4);
  auto r = lcs_dp(inst);
  CHECK(r.answer);
  CHECK(*r.value == 4);
  CHECK(*r.value == lcs_brute(inst.x1, inst.x2));
  CHECK(verify_witness(inst, r));

  auto same = lcs_from({2, 0, 1, 1}, {2, 0, 1, 1}, 4);
  CHECK(lcs_dp(same).answer);

  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GenSpec spec;
    spec.problem = "lcs";
    spec.n = 3 + seed % 8;
    spec.sigma = 3;
    spec.k = 1 + seed % 4;
    spec.seed = seed * 31;
    auto rand_inst = std::get<LcsInstance>(generate(spec));
    CAPTURE(seed);
    auto res = lcs_dp(rand_inst);
    CHECK(*res.value == lcs_brute(rand_inst.x1, rand_inst.x2));
    if (res.answer) CHECK(verify_witness(rand_inst, res));
  }
}

TEST_CASE("lcis dp against exhaustive search, strict and weak") {
  LcisInstance inst;
  inst.x1 = {1, 1, 2};
  inst.x2 = {1, 2, 1};
  inst.k = 2;
  inst.strict = true;
  auto r = lcis_dp(inst);
  CHECK(r.answer);
  CHECK(*r.value == 2);
  CHECK(verify_witness(inst, r));

  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    GenSpec spec;
    spec.problem = "lcis";
    spec.n = 3 + seed % 8;
    spec.k = 1 + seed % 3;
    spec.strict = seed % 2 == 0;
    spec.seed = seed * 101;
    auto rand_inst = std::get<LcisInstance>(generate(spec));
    CAPTURE(seed);
    auto res = lcis_dp(rand_inst);
    CHECK(*res.value == lcis_brute(rand_inst));
    if (res.answer) CHECK(verify_witness(rand_inst, res));
  }
}

TEST_CASE("threshold table agrees with the dp") {
  auto inst = lcs_from({0, 1, 2, 1, 3, 0, 1}, {1, 3, 2, 0, 1, 0}, 4);
  CHECK(lcs_threshold(inst).answer == lcs_dp(inst).answer);

  inst.k = 0;
  CHECK(lcs_threshold(inst).answer);

  auto disjoint = lcs_from({0, 0}, {1, 1}, 1, 2);
  CHECK_FALSE(lcs_threshold(disjoint).answer);

  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    GenSpec spec;
    spec.problem = "lcs";
    spec.n = 2 + seed % 24;
    spec.sigma = 2 + seed % 4;
    spec.k = 1 + seed % 12;
    spec.seed = seed * 7919;
    auto rand_inst = std::get<LcsInstance>(generate(spec));
    CAPTURE(seed);
    CHECK(lcs_threshold(rand_inst).answer == lcs_dp(rand_inst).answer);
  }
}

TEST_CASE("threshold early exit never overshoots at k = n") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GenSpec spec;
    spec.problem = "lcs";
    spec.n = 4 + seed % 6;
    spec.sigma = 2;
    spec.seed = seed;
    auto inst = std::get<LcsInstance>(generate(spec));
    inst.k = static_cast<std::int64_t>(inst.x1.size());
    CHECK(lcs_threshold(inst).answer == lcs_dp(inst).answer);
  }
}

TEST_CASE("traversal feasibility basics") {
  FrechetInstance inst;
  inst.scale = 1;
  inst.k2 = 0;
  inst.p = {{0, 0}, {1, 1}, {2, 2}};
  inst.q = inst.p;
  auto r = frechet_dp(inst);
  CHECK(r.answer);
  const auto& w = std::get<TraversalWitness>(*r.witness);
  for (auto [i, j] : w.cells) CHECK(i == j);  // shift-0 diagonal
  CHECK(verify_witness(inst, r));

  FrechetInstance single;
  single.scale = 1;
  single.p = {{0, 0}};
  single.q = {{3, 4}};
  single.k2 = 24;
  CHECK_FALSE(frechet_dp(single).answer);
  single.k2 = 25;
  CHECK(frechet_dp(single).answer);
}

TEST_CASE("full band equals the unrestricted dp") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    GenSpec spec;
    spec.problem = "frechet";
    spec.n = 1 + seed % 16;
    spec.seed = seed * 13;
    auto inst = std::get<FrechetInstance>(generate(spec));
    CAPTURE(seed);
    CHECK(frechet_banded(inst, {spec.n}).answer == frechet_dp(inst).answer);
  }
}

TEST_CASE("banded answers are monotone in band and threshold") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GenSpec spec;
    spec.problem = "frechet";
    spec.n = 2 + seed % 10;
    spec.seed = seed * 269;
    auto inst = std::get<FrechetInstance>(generate(spec));
    bool prev = false;
    for (std::int64_t ell = 0; ell <= spec.n; ++ell) {
      const bool cur = frechet_banded(inst, {ell}).answer;
      CHECK((!prev || cur));  // once true, stays true
      prev = cur;
    }
    auto lower = inst;
    auto higher = inst;
    higher.k2 = inst.k2 + 5;
    if (frechet_dp(lower).answer) CHECK(frechet_dp(higher).answer);
  }
}

TEST_CASE("minimum shift matches a linear scan") {
  int feasible = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    GenSpec spec;
    spec.problem = "frechet";
    spec.n = 2 + seed % 12;
    spec.seed = seed * 733;
    auto inst = std::get<FrechetInstance>(generate(spec));
    auto shift = frechet_min_shift(inst);
    if (!frechet_dp(inst).answer) {
      CHECK_FALSE(shift.has_value());
      continue;
    }
    ++feasible;
    std::optional<std::int64_t> scan;
    for (std::int64_t ell = 0; ell <= spec.n && !scan; ++ell)
      if (frechet_banded(inst, {ell}).answer) scan = ell;
    REQUIRE(shift.has_value());
    CHECK(*shift == *scan);
    auto witness = frechet_banded(inst, {*shift});
    CHECK(witness.answer);
  }
  CHECK(feasible > 10);

  FrechetInstance same;
  same.scale = 1;
  same.k2 = 0;
  same.p = {{0, 0}, {5, 5}};
  same.q = same.p;
  CHECK(frechet_min_shift(same) == 0);
}

TEST_CASE("second shortest walk on the spec cases") {
  SecondShortestPathInstance inst;
  inst.graph.n = 3;  // s=1, t=2, a=3
  inst.graph.directed = true;
  inst.graph.edges = {{1, 2, 1}, {1, 3, 1}, {3, 2, 1}};
  inst.s = 1;
  inst.t = 2;
  inst.k = 2;
  auto r = second_shortest_walk(inst);
  CHECK(r.answer);
  CHECK(*r.value == 2);
  CHECK(verify_witness(inst, r));

  inst.graph.edges = {{1, 2, 0}, {2, 3, 1}, {3, 2, 1}};
  inst.k = 5;
  r = second_shortest_walk(inst);
  CHECK(*r.value == 2);  // one loop around the cycle

  inst.graph.edges = {{1, 2, 5}, {1, 2, 5}};
  r = second_shortest_walk(inst);
  CHECK(*r.value == 5);  // parallel tie

  inst.graph.edges = {{1, 2, 1}};
  r = second_shortest_walk(inst);
  CHECK_FALSE(r.answer);
  CHECK_FALSE(r.value.has_value());

  inst.graph.edges = {{3, 2, 1}};
  r = second_shortest_walk(inst);
  CHECK_FALSE(r.answer);  // t unreachable entirely
}

TEST_CASE("second shortest walk against bounded enumeration") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    GenSpec spec;
    spec.problem = "2sp";
    spec.n = 3 + seed % 4;  // up to 6 vertices
    spec.seed = seed * 4099;
    auto inst = std::get<SecondShortestPathInstance>(generate(spec));
    auto r = second_shortest_walk(inst);
    // a 2-best pop chain never exceeds 2n-1 edges, so 12 is exhaustive here
    auto oracle = best_two_walks(inst, 12);
    CAPTURE(seed);
    if (oracle.size() < 2) {
      CHECK_FALSE(r.value.has_value());
    } else {
      REQUIRE(r.value.has_value());
      CHECK(*r.value == oracle[1]);
      CHECK(r.answer == (oracle[1] <= inst.k));
      CHECK(verify_witness(inst, r) == r.answer);
    }
  }
}

TEST_CASE("second shortest simple path against path enumeration") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    GenSpec spec;
    spec.problem = "2sp";
    spec.n = 3 + seed % 4;
    spec.seed = seed * 6151;
    auto inst = std::get<SecondShortestPathInstance>(generate(spec));
    auto r = second_shortest_simple_path(inst);
    auto weights = simple_path_weights(inst);
    CAPTURE(seed);
    if (weights.size() < 2) {
      CHECK_FALSE(r.value.has_value());
    } else {
      REQUIRE(r.value.has_value());
      CHECK(*r.value == weights[1]);
      CHECK(r.answer == (weights[1] <= inst.k));
    }
  }
}
