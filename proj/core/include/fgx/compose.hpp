#pragma once

#include "fgx/instances.hpp"
#include "fgx/ledger.hpp"

namespace fgx {

/// Anchor points of the curve contract at scale 15; threshold distance 1
/// is the squared comparison against k2 = 225.
struct FrechetFrame {
  static constexpr Point s_a{-5, 3};
  static constexpr Point s_b{-5, 0};
  static constexpr Point c_a{0, 5};
  static constexpr Point c_b{-5, 0};
  static constexpr Point ell_a{-20, 0};
  static constexpr Point ell_b{-20, 3};
  static constexpr std::int64_t scale = 15;
  static constexpr std::int64_t k2 = 225;
};

/// Appends a fresh-symbol run to both strings of shorter-target parts so
/// all parts share the largest k.
std::vector<LcsInstance> pad_lcs_parts(std::vector<LcsInstance> parts);

/// Disjoint alphabets by per-part symbol tagging; x1 concatenated
/// forward, x2 in reverse part order. Requires uniform k.
std::pair<LcsInstance, ParameterLedger> compose_lcs(
    const std::vector<LcsInstance>& parts);

/// Appends fresh increasing runs to equalize k.
std::vector<LcisInstance> pad_lcis_parts(std::vector<LcisInstance> parts);

/// Part i shifted by i * C_max so no increasing subsequence of x2
/// crosses part boundaries. Requires uniform k and strict flag.
std::pair<LcisInstance, ParameterLedger> compose_lcis(
    const std::vector<LcisInstance>& parts);

/// Checks contract conditions 2-8 with exact squared-distance tests.
std::vector<std::string> validate_frechet_contract(const FrechetInstance& inst);

/// Synthetic contract-clean gadget of m points per curve whose traversal
/// feasibility equals `answer`. The mandatory far point (0,19) keeps the
/// no-case unreachable; yes-gadgets pair it with a bridge point.
FrechetInstance make_frechet_gadget(bool answer, int m, std::uint64_t seed);

/// Chains gadgets with the frame separators and a fixed no-instance
/// terminator; curves padded to equal length with c_B copies.
std::pair<FrechetInstance, ParameterLedger> compose_frechet(
    const std::vector<FrechetInstance>& parts);

std::pair<WeightedGraph, ParameterLedger> compose_disjoint_union(
    const std::vector<WeightedGraph>& parts, int k);

/// Negative-triangle parts merge onto one zero-weight path; per-slot
/// detours carry triangle weights, skip penalties exclude cross-slot
/// rejoins, and {p_1..p_n} is a directed feedback vertex set. Decision
/// semantics of the output are second shortest simple path.
std::pair<SecondShortestPathInstance, ParameterLedger>
compose_second_shortest_path(const std::vector<WeightedGraph>& parts);

}  // namespace fgx
