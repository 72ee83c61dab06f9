#pragma once

#include <functional>
#include <iosfwd>

#include "fgx/instances.hpp"
#include "fgx/ledger.hpp"

namespace fgx {

/// Ordered sub-instances, the ledger, and the map back to the source
/// block indices (1-based, row-major over block tuples).
struct DecompositionBundle {
  std::vector<ProblemInstance> subs;
  ParameterLedger ledger;
  std::vector<std::vector<int>> origin;
};

/// Splits both sides into z = ceil(n^(1-eps)) blocks of exactly
/// ceil(n^eps) vectors (all-one padding), eps = 2/(2+lambda); one
/// sub-instance per block pair.
DecompositionBundle decompose_ov(const OvInstance& inst, const Rat& lambda);

/// Vertex blocks padded with isolated vertices, one induced subgraph per
/// k-tuple of blocks; eps = k/(k+lambda), k in {3,4}.
DecompositionBundle decompose_neg_k_clique(const WeightedGraph& g, int k,
                                           const Rat& lambda);

/// Array blocks of length q with C-windows re-indexed per block pair;
/// window positions past the source array become absent entries.
DecompositionBundle decompose_mc_conv3sum(const McConvThreeSumInstance& inst,
                                          const Rat& lambda);

McConvThreeSumInstance reduce_conv_to_mc(const ConvThreeSumInstance& inst);

/// Requires no absent C entries; use replace_sentinels first.
ConvThreeSumInstance reduce_mc_to_conv(const McConvThreeSumInstance& inst);

/// Replaces absent C entries by a constant no A[i]+B[j] can reach.
McConvThreeSumInstance replace_sentinels(const McConvThreeSumInstance& inst);

/// Decomposability transfer: source -> fwd -> decompose -> bwd per sub.
DecompositionBundle lift_decomposition(
    const ProblemInstance& source,
    const std::function<ProblemInstance(const ProblemInstance&)>& fwd,
    const std::function<DecompositionBundle(const ProblemInstance&)>& decompose,
    const std::function<ProblemInstance(const ProblemInstance&)>& bwd);

/// Conv-3SUM route through the multicolored form.
DecompositionBundle decompose_conv3sum(const ConvThreeSumInstance& inst,
                                       const Rat& lambda);

/// One-step equivalence (not an OR): H is the disjoint union of the
/// induced colored subgraphs over all block triples; components <= 3q.
std::pair<WeightedGraph, ParameterLedger> decompose_triangle_collection(
    const WeightedGraph& g, const Rat& lambda);

// Bundle files: '#ledger' comment block, then ----separated instances.
void write_bundle(std::ostream& out, const DecompositionBundle& bundle);
DecompositionBundle read_bundle(std::istream& in);
std::string write_bundle(const DecompositionBundle& bundle);
DecompositionBundle read_bundle(const std::string& text);

}  // namespace fgx
