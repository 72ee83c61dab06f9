#include "fgx/ledger.hpp"

#include <stdexcept>

namespace fgx {

std::vector<std::pair<std::string, std::string>> ledger_to_lines(
    const ParameterLedger& ledger) {
  std::vector<std::pair<std::string, std::string>> out;
  auto put = [&](const std::string& key, const std::string& value) {
    out.emplace_back(key, value);
  };
  put("shape", ledger.shape);
  if (ledger.alpha != 0) put("alpha", to_string(ledger.alpha));
  if (ledger.lambda != 0) put("lambda", to_string(ledger.lambda));
  if (ledger.epsilon != 0) put("epsilon", to_string(ledger.epsilon));
  if (ledger.source_n) put("n", std::to_string(ledger.source_n));
  if (ledger.k) put("k", std::to_string(ledger.k));
  if (ledger.q) put("q", std::to_string(ledger.q));
  if (ledger.z) put("z", std::to_string(ledger.z));
  if (ledger.t) put("t", std::to_string(ledger.t));
  if (ledger.n_max) put("n_max", std::to_string(ledger.n_max));
  if (ledger.n_max_compact)
    put("n_max_compact", std::to_string(*ledger.n_max_compact));
  if (ledger.nu) put("nu", to_string(*ledger.nu));
  if (ledger.mu) put("mu", to_string(*ledger.mu));
  if (ledger.n_q) put("n_q", std::to_string(*ledger.n_q));
  if (ledger.ell_q) put("ell_q", std::to_string(*ledger.ell_q));
  return out;
}

ParameterLedger ledger_from_lines(
    const std::vector<std::pair<std::string, std::string>>& lines) {
  ParameterLedger ledger;
  for (const auto& [key, value] : lines) {
    if (key == "shape")
      ledger.shape = value;
    else if (key == "alpha")
      ledger.alpha = rat_from_string(value);
    else if (key == "lambda")
      ledger.lambda = rat_from_string(value);
    else if (key == "epsilon")
      ledger.epsilon = rat_from_string(value);
    else if (key == "n")
      ledger.source_n = std::stoll(value);
    else if (key == "k")
      ledger.k = std::stoi(value);
    else if (key == "q")
      ledger.q = std::stoll(value);
    else if (key == "z")
      ledger.z = std::stoll(value);
    else if (key == "t")
      ledger.t = std::stoll(value);
    else if (key == "n_max")
      ledger.n_max = std::stoll(value);
    else if (key == "n_max_compact")
      ledger.n_max_compact = std::stoll(value);
    else if (key == "nu")
      ledger.nu = rat_from_string(value);
    else if (key == "mu")
      ledger.mu = rat_from_string(value);
    else if (key == "n_q")
      ledger.n_q = std::stoll(value);
    else if (key == "ell_q")
      ledger.ell_q = std::stoll(value);
    else
      throw std::invalid_argument("unknown ledger key '" + key + "'");
  }
  return ledger;
}

}  // namespace fgx
