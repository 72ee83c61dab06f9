#pragma once

#include "fgx/decompose.hpp"
#include "fgx/rng.hpp"

namespace fgx {

/// Instance generation is a pure function of (spec, seed); the generator
/// is the split-mix one documented in rng.hpp, consumed left to right.
struct GenSpec {
  std::string problem;
  std::int64_t n = 0;
  std::int64_t d = 0;      // ov dimension; 0 picks a log-scale default
  std::int64_t sigma = 0;  // alphabet / color count; 0 picks a default
  std::int64_t k = 0;      // target length / clique order; 0 picks a default
  std::int64_t t = 0;      // part count for composition pipelines
  bool strict = true;      // lcis flavor
  std::string planted = "none";  // yes | no | none
  std::uint64_t seed = 0;
};

/// planted=yes embeds a solution; planted=no rejects against the oracle
/// (throws once the attempt cap is hit). frechet and 2sp support only
/// planted=none.
ProblemInstance generate(const GenSpec& spec);

struct PipelineReport {
  std::string name;
  bool direct = false;
  bool transformed = false;
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> ledger_failures;
  double seconds = 0.0;

  /// key=value lines; timing keys carry the time_ prefix and are the
  /// only lines allowed to differ between identical runs.
  std::string to_text() const;
};

/// Pipeline ids: ov-decomp, clique-decomp, mcconv-decomp, conv-lift,
/// tricol-decomp, lcs-compose, lcis-compose, frechet-compose,
/// union-compose, 2sp-compose, clique-decomp-union.
PipelineReport run_pipeline(const std::string& name, const GenSpec& spec,
                            const Rat& lambda);

/// Recomputes every formula-derived ledger entry from (shape, lambda, n)
/// and compares exactly; returns one message per mismatch.
std::vector<std::string> audit_ledger(const ParameterLedger& ledger,
                                      std::int64_t n);

struct BenchPoint {
  std::int64_t size = 0;
  double seconds = 0.0;
};

struct BenchResult {
  std::vector<BenchPoint> points;
  double slope = 0.0;  // least-squares slope of log time vs log size
};

/// Algorithms: lcs_dp, lcs_threshold (fixed = k, grid = n),
/// frechet_dp (grid = n), frechet_banded (fixed = n, grid = ell),
/// neg-triangle-components, tricol-components (fixed = component order,
/// grid = n). Needs >= 3 grid points to fit.
BenchResult bench_envelope(const std::string& algo,
                           const std::vector<std::int64_t>& grid, int reps,
                           std::int64_t fixed = 0);

/// Median-of-reps seconds for one grid point of the same algorithms.
double bench_point(const std::string& algo, std::int64_t size, int reps,
                   std::int64_t fixed = 0);

}  // namespace fgx
