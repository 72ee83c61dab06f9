#include "fgx/kernelize.hpp"

#include <algorithm>

namespace fgx {

namespace {

// (k+1)^e, saturating well above any counter a sweep can reach.
std::int64_t cap_pow(std::int64_t base, int e) {
  constexpr std::int64_t sat = std::int64_t{1} << 62;
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > sat / base) return sat;
    r *= base;
  }
  return r;
}

std::vector<Symbol> sweep(const std::vector<Symbol>& s, std::int64_t sigma,
                          const std::vector<std::int64_t>& cap) {
  const int subsets = (1 << sigma) - 1;
  std::vector<std::int64_t> run(subsets + 1, 0);  // consecutive kept letters in S
  std::vector<Symbol> out;
  out.reserve(s.size());
  for (Symbol x : s) {
    const int bit = 1 << x;
    bool drop = false;
    for (int m = 1; m <= subsets && !drop; ++m)
      if ((m & bit) && run[m] >= cap[m]) drop = true;
    if (drop) continue;
    out.push_back(x);
    for (int m = 1; m <= subsets; ++m)
      if (m & bit)
        ++run[m];
      else
        run[m] = 0;
  }
  return out;
}

}  // namespace

LcsInstance lcs_kernel(const LcsInstance& inst, KernelReport* report) {
  if (inst.sigma > 6)
    throw std::invalid_argument("kernel supports sigma <= 6");
  const int subsets = (1 << inst.sigma) - 1;
  std::vector<std::int64_t> cap(subsets + 1, 0);
  for (int m = 1; m <= subsets; ++m)
    cap[m] = cap_pow(inst.k + 1, __builtin_popcount(m));

  LcsInstance out = inst;
  out.x1 = sweep(inst.x1, inst.sigma, cap);
  out.x2 = sweep(inst.x2, inst.sigma, cap);
  if (report) {
    report->in_len1 = static_cast<std::int64_t>(inst.x1.size());
    report->in_len2 = static_cast<std::int64_t>(inst.x2.size());
    report->out_len1 = static_cast<std::int64_t>(out.x1.size());
    report->out_len2 = static_cast<std::int64_t>(out.x2.size());
    report->caps.clear();
    for (int size = 1; size <= inst.sigma; ++size)
      report->caps.push_back(cap_pow(inst.k + 1, size));
  }
  return out;
}

}  // namespace fgx
