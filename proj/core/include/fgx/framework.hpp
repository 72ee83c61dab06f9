#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace fgx {

/// Exponent arithmetic is exact end to end; no floating point anywhere.
using Rat = boost::rational<long long>;

std::string to_string(const Rat& r);
Rat rat_from_string(const std::string& text);

/// Smallest integer m >= 0 with m^den >= n^num for e = num/den, i.e.
/// ceil(n^e) computed by integer k-th-root tests.
std::int64_t ceil_rational_power(std::int64_t n, const Rat& e);

struct Obs1Result {
  Rat beta_out;
  Rat gamma_out;
  Rat ell_threshold_exponent;
};

/// Trade-off of the folklore case split: an O(ell^beta n^gamma) algorithm
/// yields an O(ell^(beta + gamma*beta/lambda) + n^(gamma+lambda)) one,
/// splitting at ell <= n^(lambda/beta).
Obs1Result obs1_envelope(const Rat& beta, const Rat& gamma, const Rat& lambda);

/// Supremum of excluded beta: gamma*(alpha-nu) / ((gamma-1)*mu).
/// Requires alpha > nu*gamma, gamma > 1, mu > 0.
Rat thm24_beta_max(const Rat& alpha, const Rat& gamma, const Rat& nu,
                   const Rat& mu);

/// Kernel variant: gamma*(alpha-nu) / ((gamma-1)*mu*xi).
Rat cor25_kernel_beta_max(const Rat& alpha, const Rat& gamma, const Rat& nu,
                          const Rat& mu, const Rat& xi);

/// The lambda the framework feeds the decomposition: beta*mu/gamma - nu.
/// Requires a positive result.
Rat thm24_lambda(const Rat& beta, const Rat& gamma, const Rat& mu,
                 const Rat& nu);

}  // namespace fgx
