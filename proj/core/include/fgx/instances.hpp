#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fgx {

using Symbol = std::int64_t;
using Weight = std::int64_t;

/// Orthogonal Vectors: two size-n sets of 0/1 vectors of dimension d.
struct OvInstance {
  std::vector<std::vector<std::uint8_t>> a, b;
  int dim = 0;

  int n() const { return static_cast<int>(a.size()); }
  bool operator==(const OvInstance&) const = default;
};

struct ThreeSumInstance {
  std::vector<std::int64_t> values;

  int n() const { return static_cast<int>(values.size()); }
  bool operator==(const ThreeSumInstance&) const = default;
};

struct ConvThreeSumInstance {
  std::vector<std::int64_t> values;

  int n() const { return static_cast<int>(values.size()); }
  bool operator==(const ConvThreeSumInstance&) const = default;
};

/// Multicolored convolution form. Absent C entries never match any sum.
struct McConvThreeSumInstance {
  std::vector<std::int64_t> a, b;
  std::vector<std::optional<std::int64_t>> c;

  int n() const { return static_cast<int>(a.size()); }
  bool operator==(const McConvThreeSumInstance&) const = default;
};

struct Edge {
  int u = 0, v = 0;
  Weight w = 0;
  bool operator==(const Edge&) const = default;
};

/// Shared graph form for the negative-k-clique and triangle-collection
/// roles. Colors present selects the triangle-collection role.
struct WeightedGraph {
  int n = 0;
  std::vector<Edge> edges;
  bool directed = false;
  int k = 0;
  std::vector<int> colors;

  bool operator==(const WeightedGraph&) const = default;
};

struct LcsInstance {
  std::vector<Symbol> x1, x2;
  std::int64_t k = 0;
  std::int64_t sigma = 0;

  bool operator==(const LcsInstance&) const = default;
};

struct LcisInstance {
  std::vector<Symbol> x1, x2;
  std::int64_t k = 0;
  bool strict = true;

  bool operator==(const LcisInstance&) const = default;
};

struct Point {
  std::int64_t x = 0, y = 0;
  bool operator==(const Point&) const = default;
};

/// Fixed-point curves; all distance tests compare squared distances
/// against k2 in scaled integer units.
struct FrechetInstance {
  std::vector<Point> p, q;
  std::int64_t scale = 1;
  std::int64_t k2 = 0;

  bool operator==(const FrechetInstance&) const = default;
};

struct SecondShortestPathInstance {
  WeightedGraph graph;
  int s = 0, t = 0;
  Weight k = 0;

  bool operator==(const SecondShortestPathInstance&) const = default;
};

using ProblemInstance =
    std::variant<OvInstance, ThreeSumInstance, ConvThreeSumInstance,
                 McConvThreeSumInstance, WeightedGraph, LcsInstance,
                 LcisInstance, FrechetInstance, SecondShortestPathInstance>;

/// FGX tag of an instance: ov, 3sum, conv3sum, mcconv3sum, clique, lcs,
/// lcis, frechet, 2sp, tricol. Graphs with colors carry the tricol tag.
std::string problem_tag(const ProblemInstance& inst);

/// Invariant check; returns one message per violated rule, empty if clean.
std::vector<std::string> validate(const ProblemInstance& inst);

std::int64_t dist2(const Point& a, const Point& b);

class FormatError : public std::runtime_error {
 public:
  FormatError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// FGX v1 text format. Canonical form: single spaces, \n line ends,
// header key=value pairs on one line, instances separated by ---.
ProblemInstance read_instance(std::istream& in);
ProblemInstance read_instance(const std::string& text);
void write_instance(std::ostream& out, const ProblemInstance& inst);
std::string write_instance(const ProblemInstance& inst);

std::vector<ProblemInstance> read_instances(std::istream& in);
std::vector<ProblemInstance> read_instances(const std::string& text);
void write_instances(std::ostream& out,
                     const std::vector<ProblemInstance>& insts);

}  // namespace fgx
