#include "fgx/framework.hpp"

#include <charconv>
#include <stdexcept>

namespace fgx {

std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rat rat_from_string(const std::string& text) {
  auto slash = text.find('/');
  auto parse = [&](const std::string& part) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size())
      throw std::invalid_argument("bad rational '" + text + "'");
    return v;
  };
  if (slash == std::string::npos) return Rat(parse(text));
  return Rat(parse(text.substr(0, slash)), parse(text.substr(slash + 1)));
}

namespace {

// x^e with saturation; inputs stay far below the cap in practice.
__int128 pow_sat(std::int64_t x, std::int64_t e) {
  constexpr __int128 cap = static_cast<__int128>(1) << 120;
  __int128 r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    r *= x;
    if (r > cap) return cap;
  }
  return r;
}

}  // namespace

std::int64_t ceil_rational_power(std::int64_t n, const Rat& e) {
  if (n < 0 || e < 0) throw std::invalid_argument("negative base or exponent");
  if (n == 0) return 0;
  if (n == 1 || e == 0) return 1;
  const std::int64_t num = e.numerator();
  const std::int64_t den = e.denominator();
  const __int128 target = pow_sat(n, num);
  std::int64_t lo = 1, hi = 1;
  while (pow_sat(hi, den) < target) hi *= 2;
  while (lo < hi) {  // first m with m^den >= n^num
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (pow_sat(mid, den) >= target)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

Obs1Result obs1_envelope(const Rat& beta, const Rat& gamma, const Rat& lambda) {
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  if (beta <= 0) throw std::invalid_argument("beta must be positive");
  Obs1Result r;
  r.beta_out = beta + gamma * beta / lambda;
  r.gamma_out = gamma + lambda;
  r.ell_threshold_exponent = lambda / beta;
  return r;
}

Rat thm24_beta_max(const Rat& alpha, const Rat& gamma, const Rat& nu,
                   const Rat& mu) {
  if (gamma <= 1) throw std::invalid_argument("gamma must exceed 1");
  if (mu <= 0) throw std::invalid_argument("mu must be positive");
  if (alpha <= nu * gamma)
    throw std::invalid_argument("alpha must exceed nu*gamma");
  return gamma * (alpha - nu) / ((gamma - 1) * mu);
}

Rat cor25_kernel_beta_max(const Rat& alpha, const Rat& gamma, const Rat& nu,
                          const Rat& mu, const Rat& xi) {
  if (xi <= 0) throw std::invalid_argument("xi must be positive");
  return thm24_beta_max(alpha, gamma, nu, mu) / xi;
}

Rat thm24_lambda(const Rat& beta, const Rat& gamma, const Rat& mu,
                 const Rat& nu) {
  if (gamma <= 0) throw std::invalid_argument("gamma must be positive");
  const Rat lambda = beta * mu / gamma - nu;
  if (lambda <= 0)
    throw std::invalid_argument("requested beta yields non-positive lambda");
  return lambda;
}

}  // namespace fgx
