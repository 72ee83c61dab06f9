#include "fgx/instances.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace fgx {

std::int64_t dist2(const Point& a, const Point& b) {
  const std::int64_t dx = a.x - b.x;
  const std::int64_t dy = a.y - b.y;
  return dx * dx + dy * dy;
}

namespace {

// |x| <= n^4, computed without overflow at desk scale.
bool within_hypothesis_range(std::int64_t x, std::int64_t n) {
  __int128 bound = 1;
  for (int i = 0; i < 4; ++i) bound *= n;
  __int128 v = x < 0 ? -static_cast<__int128>(x) : static_cast<__int128>(x);
  return v <= bound;
}

void validate_graph_common(const WeightedGraph& g,
                           std::vector<std::string>& out) {
  if (g.n < 1) out.push_back("graph: vertex count must be >= 1");
  std::set<std::pair<int, int>> seen;
  for (const auto& e : g.edges) {
    if (e.u < 1 || e.u > g.n || e.v < 1 || e.v > g.n)
      out.push_back("edges: endpoint out of range");
    if (e.u == e.v) out.push_back("edges: self-loop");
    if (!g.directed) {
      auto key = std::minmax(e.u, e.v);
      if (!seen.insert(key).second)
        out.push_back("edges: duplicate undirected edge");
    }
  }
  if (!g.colors.empty() && static_cast<int>(g.colors.size()) != g.n)
    out.push_back("colors: length differs from vertex count");
}

struct Validator {
  std::vector<std::string> out;

  void operator()(const OvInstance& i) {
    if (i.a.size() != i.b.size()) out.push_back("A/B size mismatch");
    if (i.a.empty()) out.push_back("A: must contain at least one vector");
    if (i.dim < 1) out.push_back("d: dimension must be >= 1");
    for (const auto* side : {&i.a, &i.b})
      for (const auto& v : *side) {
        if (static_cast<int>(v.size()) != i.dim)
          out.push_back("vector length differs from d");
        for (auto bit : v)
          if (bit != 0 && bit != 1) out.push_back("vector entry not in {0,1}");
      }
  }
  void operator()(const ThreeSumInstance& i) {
    if (i.values.empty()) out.push_back("A: empty array");
    for (auto x : i.values)
      if (!within_hypothesis_range(x, i.n()))
        out.push_back("A: entry outside {-n^4,...,n^4}");
  }
  void operator()(const ConvThreeSumInstance& i) {
    if (i.values.empty()) out.push_back("A: empty array");
  }
  void operator()(const McConvThreeSumInstance& i) {
    if (i.a.size() != i.b.size() || i.a.size() != i.c.size())
      out.push_back("A/B/C size mismatch");
    if (i.a.empty()) out.push_back("A: empty array");
  }
  void operator()(const WeightedGraph& g) { validate_graph_common(g, out); }
  void operator()(const LcsInstance& i) {
    if (i.k < 0) out.push_back("k: must be >= 0");
    if (i.sigma < 1) out.push_back("sigma: must be >= 1");
    for (const auto* s : {&i.x1, &i.x2})
      for (auto sym : *s)
        if (sym < 0 || sym >= i.sigma)
          out.push_back("symbol outside [0, sigma)");
  }
  void operator()(const LcisInstance& i) {
    if (i.k < 0) out.push_back("k: must be >= 0");
    for (const auto* s : {&i.x1, &i.x2})
      for (auto sym : *s)
        if (sym < 0) out.push_back("symbol must be non-negative");
  }
  void operator()(const FrechetInstance& i) {
    if (i.p.empty() || i.q.empty()) out.push_back("empty point list");
    if (i.scale < 1) out.push_back("scale: must be >= 1");
    if (i.k2 < 0) out.push_back("k2: must be >= 0");
  }
  void operator()(const SecondShortestPathInstance& i) {
    validate_graph_common(i.graph, out);
    if (!i.graph.directed) out.push_back("graph must be directed");
    if (i.s == i.t) out.push_back("s and t must differ");
    if (i.s < 1 || i.s > i.graph.n) out.push_back("s out of range");
    if (i.t < 1 || i.t > i.graph.n) out.push_back("t out of range");
    for (const auto& e : i.graph.edges)
      if (e.w < 0) out.push_back("edges: negative weight");
  }
};

}  // namespace

std::vector<std::string> validate(const ProblemInstance& inst) {
  Validator v;
  std::visit(v, inst);
  return v.out;
}

std::string problem_tag(const ProblemInstance& inst) {
  struct Tagger {
    std::string operator()(const OvInstance&) { return "ov"; }
    std::string operator()(const ThreeSumInstance&) { return "3sum"; }
    std::string operator()(const ConvThreeSumInstance&) { return "conv3sum"; }
    std::string operator()(const McConvThreeSumInstance&) {
      return "mcconv3sum";
    }
    std::string operator()(const WeightedGraph& g) {
      return g.colors.empty() ? "clique" : "tricol";
    }
    std::string operator()(const LcsInstance&) { return "lcs"; }
    std::string operator()(const LcisInstance&) { return "lcis"; }
    std::string operator()(const FrechetInstance&) { return "frechet"; }
    std::string operator()(const SecondShortestPathInstance&) { return "2sp"; }
  };
  return std::visit(Tagger{}, inst);
}

}  // namespace fgx
