#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgx/framework.hpp"

namespace fgx {

/// Every exponent-derived quantity a transform claims, audited against
/// the closed-form formulas by the harness.
struct ParameterLedger {
  std::string shape;  // ov|clique|mcconv|convlift|tricol|lcs|lcis|frechet|union|2sp
  Rat alpha{0};
  Rat lambda{0};
  Rat epsilon{0};
  std::int64_t source_n = 0;
  int k = 0;  // clique order where relevant
  std::int64_t q = 0;
  std::int64_t z = 0;
  std::int64_t t = 0;
  std::int64_t n_max = 0;
  // Distinct original (non-padding) vertices; recorded next to the
  // formula value when they disagree on padded final blocks.
  std::optional<std::int64_t> n_max_compact;
  std::optional<Rat> nu, mu;
  std::optional<std::int64_t> n_q, ell_q;

  bool operator==(const ParameterLedger&) const = default;
};

/// '# key=value' lines as found under a '#ledger' heading.
std::vector<std::pair<std::string, std::string>> ledger_to_lines(
    const ParameterLedger& ledger);
ParameterLedger ledger_from_lines(
    const std::vector<std::pair<std::string, std::string>>& lines);

}  // namespace fgx
