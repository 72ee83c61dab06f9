#pragma once

#include <optional>
#include <variant>

#include "fgx/instances.hpp"

namespace fgx {

/// Monotone grid path certifying a traversal: starts at (1,1), ends at
/// (n,n), steps in {(1,0),(0,1),(1,1)}. Width is the maximum squared
/// point distance along it, shift the maximum |i-j|.
struct TraversalWitness {
  std::vector<std::pair<int, int>> cells;
  bool operator==(const TraversalWitness&) const = default;
};

using IndexPair = std::array<std::int64_t, 2>;
using IndexTriple = std::array<std::int64_t, 3>;
using VertexSet = std::vector<int>;
using SymbolSeq = std::vector<Symbol>;

/// Walk as a sequence of indices into graph.edges.
struct WalkWitness {
  std::vector<int> edges;
  bool operator==(const WalkWitness&) const = default;
};

using Witness = std::variant<IndexPair, IndexTriple, VertexSet, SymbolSeq,
                             WalkWitness, TraversalWitness>;

struct SolveResult {
  bool answer = false;
  std::optional<Witness> witness;
  std::optional<std::int64_t> value;  // optimum / distance when meaningful
};

/// Band half-width for the banded traversal search.
struct BandSpec {
  std::int64_t ell = 0;
};

SolveResult solve_ov(const OvInstance& inst);
SolveResult solve_3sum(const ThreeSumInstance& inst);
SolveResult solve_conv3sum(const ConvThreeSumInstance& inst);
SolveResult solve_mc_conv3sum(const McConvThreeSumInstance& inst);

/// Enumerates k-subsets per connected component; k in {3,4}.
SolveResult solve_neg_k_clique(const WeightedGraph& g, int k);

/// True iff every triple of three distinct colors occurring in the graph
/// is realized by a triangle. The certificate is universal, no witness.
SolveResult solve_triangle_collection(const WeightedGraph& g);

SolveResult lcs_dp(const LcsInstance& inst);
SolveResult lcis_dp(const LcisInstance& inst);

/// Threshold-table variant: T[j] = least end position in x2 of a common
/// subsequence of length j, rows driven by next-occurrence tables.
/// O(nk + n*sigma); answers agree with lcs_dp.
SolveResult lcs_threshold(const LcsInstance& inst);

SolveResult frechet_dp(const FrechetInstance& inst);
SolveResult frechet_banded(const FrechetInstance& inst, BandSpec band);

/// Least band ell for which a width-feasible traversal exists, or
/// nullopt if frechet_dp rejects. Doubling then binary search.
std::optional<std::int64_t> frechet_min_shift(const FrechetInstance& inst);

/// Two-best label-setting search over walks (distinct edge sequences).
SolveResult second_shortest_walk(const SecondShortestPathInstance& inst);

/// Second-smallest weight among distinct simple s-t paths (Yen, k=2).
SolveResult second_shortest_simple_path(const SecondShortestPathInstance& inst);

/// Dispatch by tag; graphs use the k field (clique) or colors (tricol).
SolveResult solve(const ProblemInstance& inst);

/// Connected components of the undirected view, 1-based vertex lists.
std::vector<std::vector<int>> graph_components(const WeightedGraph& g);

/// Re-checks a witness against its instance in time linear in its size.
bool verify_witness(const ProblemInstance& inst, const SolveResult& result);

}  // namespace fgx
