#pragma once

#include "fgx/instances.hpp"

namespace fgx {

struct KernelReport {
  std::int64_t in_len1 = 0, in_len2 = 0;
  std::int64_t out_len1 = 0, out_len2 = 0;
  std::vector<std::int64_t> caps;  // cap per subset size 1..sigma
};

/// Single left-to-right sweep per string with one run counter per
/// non-empty alphabet subset S, cap (k+1)^|S|; a letter is dropped when
/// keeping it would push some counter past its cap. Answer-preserving,
/// idempotent, output is a subsequence of the input. Requires sigma <= 6.
LcsInstance lcs_kernel(const LcsInstance& inst, KernelReport* report = nullptr);

}  // namespace fgx
