#include "fgx/decompose.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace fgx {

namespace {

struct BlockShape {
  Rat epsilon;
  std::int64_t q, z;
};

BlockShape block_shape(std::int64_t n, const Rat& alpha, const Rat& lambda) {
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  BlockShape s;
  s.epsilon = alpha / (alpha + lambda);
  s.q = ceil_rational_power(n, s.epsilon);
  s.z = ceil_rational_power(n, Rat(1) - s.epsilon);
  return s;
}

std::int64_t max_abs_entry(const McConvThreeSumInstance& inst) {
  std::int64_t m = 0;
  for (auto v : inst.a) m = std::max(m, std::abs(v));
  for (auto v : inst.b) m = std::max(m, std::abs(v));
  for (const auto& v : inst.c)
    if (v) m = std::max(m, std::abs(*v));
  return m;
}

}  // namespace

DecompositionBundle decompose_ov(const OvInstance& inst, const Rat& lambda) {
  const std::int64_t n = inst.n();
  const auto shape = block_shape(n, Rat(2), lambda);
  const std::vector<std::uint8_t> all_one(inst.dim, 1);

  auto block = [&](const std::vector<std::vector<std::uint8_t>>& side,
                   std::int64_t b) {
    std::vector<std::vector<std::uint8_t>> out;
    out.reserve(shape.q);
    for (std::int64_t i = (b - 1) * shape.q; i < b * shape.q; ++i)
      out.push_back(i < n ? side[i] : all_one);
    return out;
  };

  DecompositionBundle bundle;
  for (std::int64_t i = 1; i <= shape.z; ++i) {
    auto ai = block(inst.a, i);
    for (std::int64_t j = 1; j <= shape.z; ++j) {
      OvInstance sub;
      sub.dim = inst.dim;
      sub.a = ai;
      sub.b = block(inst.b, j);
      bundle.subs.emplace_back(std::move(sub));
      bundle.origin.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  auto& led = bundle.ledger;
  led.shape = "ov";
  led.alpha = Rat(2);
  led.lambda = lambda;
  led.epsilon = shape.epsilon;
  led.source_n = n;
  led.q = shape.q;
  led.z = shape.z;
  led.t = shape.z * shape.z;
  led.n_max = shape.q;
  return bundle;
}

DecompositionBundle decompose_neg_k_clique(const WeightedGraph& g, int k,
                                           const Rat& lambda) {
  if (k < 3 || k > 4)
    throw std::invalid_argument("clique order out of supported range [3,4]");
  const std::int64_t n = g.n;
  const auto shape = block_shape(n, Rat(k), lambda);
  const std::int64_t padded_n = shape.q * shape.z;

  // block of vertex v (1-based blocks over the padded id range)
  auto block_of = [&](int v) {
    return static_cast<std::int64_t>((v - 1) / shape.q) + 1;
  };

  DecompositionBundle bundle;
  std::int64_t n_max = 0, compact_max = 0;
  std::vector<std::int64_t> tuple(k, 1);
  for (;;) {
    std::set<std::int64_t> blocks(tuple.begin(), tuple.end());
    WeightedGraph sub;
    sub.directed = false;
    sub.k = k;
    sub.n = static_cast<int>(blocks.size() * shape.q);
    std::vector<int> local(padded_n + 1, 0);
    int next_id = 0;
    std::int64_t compact = 0;
    for (std::int64_t b : blocks)
      for (std::int64_t v = (b - 1) * shape.q + 1; v <= b * shape.q; ++v) {
        local[v] = ++next_id;
        if (v <= n) ++compact;
      }
    for (const auto& e : g.edges)
      if (blocks.count(block_of(e.u)) && blocks.count(block_of(e.v)))
        sub.edges.push_back({local[e.u], local[e.v], e.w});
    n_max = std::max<std::int64_t>(n_max, sub.n);
    compact_max = std::max(compact_max, compact);
    bundle.subs.emplace_back(std::move(sub));
    bundle.origin.emplace_back(tuple.begin(), tuple.end());

    int pos = k - 1;
    while (pos >= 0 && tuple[pos] == shape.z) tuple[pos--] = 1;
    if (pos < 0) break;
    ++tuple[pos];
  }
  auto& led = bundle.ledger;
  led.shape = "clique";
  led.alpha = Rat(k);
  led.lambda = lambda;
  led.epsilon = shape.epsilon;
  led.source_n = n;
  led.k = k;
  led.q = shape.q;
  led.z = shape.z;
  led.t = static_cast<std::int64_t>(bundle.subs.size());
  led.n_max = n_max;
  if (compact_max != n_max) led.n_max_compact = compact_max;
  return bundle;
}

DecompositionBundle decompose_mc_conv3sum(const McConvThreeSumInstance& inst,
                                          const Rat& lambda) {
  const std::int64_t n = inst.n();
  const auto shape = block_shape(n, Rat(2), lambda);
  const std::int64_t q = shape.q;
  // Padding exceeds 3*z_max in absolute value, so padded cells never
  // participate in any solution.
  const std::int64_t z_max = max_abs_entry(inst) + 1;
  const std::int64_t pad = 4 * z_max;

  auto slice = [&](const std::vector<std::int64_t>& arr, std::int64_t b) {
    std::vector<std::int64_t> out;
    out.reserve(2 * q);
    for (std::int64_t i = (b - 1) * q; i < b * q; ++i)
      out.push_back(i < n ? arr[i] : pad);
    out.resize(2 * q, pad);
    return out;
  };

  DecompositionBundle bundle;
  for (std::int64_t l = 1; l <= shape.z; ++l)
    for (std::int64_t p = 1; p <= shape.z; ++p) {
      McConvThreeSumInstance sub;
      sub.a = slice(inst.a, l);
      sub.b = slice(inst.b, p);
      sub.c.assign(2 * q, std::nullopt);
      // sub indices i*, j* in [q] test the source cell (l+p-2)q + i* + j*
      for (std::int64_t w = 2; w <= 2 * q; ++w) {
        const std::int64_t gi = (l + p - 2) * q + w;
        if (gi >= 1 && gi <= n) sub.c[w - 1] = inst.c[gi - 1];
      }
      bundle.subs.emplace_back(std::move(sub));
      bundle.origin.push_back({static_cast<int>(l), static_cast<int>(p)});
    }
  auto& led = bundle.ledger;
  led.shape = "mcconv";
  led.alpha = Rat(2);
  led.lambda = lambda;
  led.epsilon = shape.epsilon;
  led.source_n = n;
  led.q = q;
  led.z = shape.z;
  led.t = shape.z * shape.z;
  led.n_max = 2 * q;
  return bundle;
}

McConvThreeSumInstance reduce_conv_to_mc(const ConvThreeSumInstance& inst) {
  McConvThreeSumInstance out;
  out.a = inst.values;
  out.b = inst.values;
  out.c.assign(inst.values.begin(), inst.values.end());
  return out;
}

McConvThreeSumInstance replace_sentinels(const McConvThreeSumInstance& inst) {
  std::int64_t m = std::max<std::int64_t>(1, max_abs_entry(inst));
  const std::int64_t unreachable = 2 * m + 1;  // above any A[i]+B[j]
  McConvThreeSumInstance out = inst;
  for (auto& c : out.c)
    if (!c) c = unreachable;
  return out;
}

ConvThreeSumInstance reduce_mc_to_conv(const McConvThreeSumInstance& inst) {
  for (const auto& c : inst.c)
    if (!c)
      throw std::invalid_argument(
          "reduce_mc_to_conv requires no absent entries");
  const std::int64_t n = inst.n();
  // Offsets separate the four blocks only if z_max dominates three
  // entries; max+1 admits cross-block collisions on adversarial inputs.
  const std::int64_t z_max = 3 * std::max<std::int64_t>(1, max_abs_entry(inst)) + 1;
  ConvThreeSumInstance out;
  out.values.reserve(4 * n);
  for (std::int64_t i = 0; i < n; ++i) out.values.push_back(-5 * z_max);
  for (std::int64_t i = 0; i < n; ++i) out.values.push_back(inst.a[i] + z_max);
  for (std::int64_t i = 0; i < n; ++i)
    out.values.push_back(inst.b[i] + 3 * z_max);
  for (std::int64_t i = 0; i < n; ++i)
    out.values.push_back(*inst.c[i] + 4 * z_max);
  return out;
}

DecompositionBundle lift_decomposition(
    const ProblemInstance& source,
    const std::function<ProblemInstance(const ProblemInstance&)>& fwd,
    const std::function<DecompositionBundle(const ProblemInstance&)>& decompose,
    const std::function<ProblemInstance(const ProblemInstance&)>& bwd) {
  DecompositionBundle bundle = decompose(fwd(source));
  for (auto& sub : bundle.subs) sub = bwd(sub);
  return bundle;
}

DecompositionBundle decompose_conv3sum(const ConvThreeSumInstance& inst,
                                       const Rat& lambda) {
  auto fwd = [](const ProblemInstance& p) -> ProblemInstance {
    return reduce_conv_to_mc(std::get<ConvThreeSumInstance>(p));
  };
  auto mid = [&](const ProblemInstance& p) {
    return decompose_mc_conv3sum(std::get<McConvThreeSumInstance>(p), lambda);
  };
  auto bwd = [](const ProblemInstance& p) -> ProblemInstance {
    return reduce_mc_to_conv(
        replace_sentinels(std::get<McConvThreeSumInstance>(p)));
  };
  DecompositionBundle bundle = lift_decomposition(inst, fwd, mid, bwd);
  bundle.ledger.shape = "convlift";
  bundle.ledger.n_max = 8 * bundle.ledger.q;  // 4 * (2q) after the reduction
  return bundle;
}

std::pair<WeightedGraph, ParameterLedger> decompose_triangle_collection(
    const WeightedGraph& g, const Rat& lambda) {
  if (g.colors.empty())
    throw std::invalid_argument("triangle collection requires colors");
  const std::int64_t n = g.n;
  const auto shape = block_shape(n, Rat(3), lambda);
  const std::int64_t q = shape.q, z = shape.z;

  auto block_of = [&](int v) {
    return std::min<std::int64_t>((v - 1) / q + 1, z);
  };
  // Blocks are not padded: fresh-colored padding would alter the triple
  // universe, and the component bound 3q holds without it.
  WeightedGraph h;
  h.directed = false;
  ParameterLedger led;
  std::vector<int> local(g.n + 1, 0);
  for (std::int64_t i = 1; i <= z; ++i)
    for (std::int64_t j = 1; j <= z; ++j)
      for (std::int64_t k = 1; k <= z; ++k) {
        std::set<std::int64_t> blocks{i, j, k};
        for (std::int64_t b : blocks)
          for (std::int64_t v = (b - 1) * q + 1; v <= std::min<std::int64_t>(b * q, n);
               ++v) {
            h.colors.push_back(g.colors[v - 1]);
            local[v] = ++h.n;
          }
        for (const auto& e : g.edges)
          if (blocks.count(block_of(e.u)) && blocks.count(block_of(e.v)))
            h.edges.push_back({local[e.u], local[e.v], e.w});
      }
  led.shape = "tricol";
  led.alpha = Rat(3);
  led.lambda = lambda;
  led.epsilon = shape.epsilon;
  led.source_n = n;
  led.q = q;
  led.z = z;
  led.t = z * z * z;
  led.n_max = 3 * q;
  led.ell_q = 3 * q;
  return {std::move(h), led};
}

void write_bundle(std::ostream& out, const DecompositionBundle& bundle) {
  out << "#ledger\n";
  for (const auto& [key, value] : ledger_to_lines(bundle.ledger))
    out << "# " << key << "=" << value << "\n";
  write_instances(out, bundle.subs);
}

DecompositionBundle read_bundle(std::istream& in) {
  std::ostringstream rest;
  std::string line;
  DecompositionBundle bundle;
  std::vector<std::pair<std::string, std::string>> kv;
  bool in_ledger = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line == "#ledger") {
      in_ledger = true;
      continue;
    }
    if (!line.empty() && line[0] == '#') {
      if (!in_ledger) continue;
      std::string body = line.substr(1);
      if (!body.empty() && body[0] == ' ') body = body.substr(1);
      auto eq = body.find('=');
      if (eq == std::string::npos)
        throw FormatError(0, "malformed ledger line '" + line + "'");
      kv.emplace_back(body.substr(0, eq), body.substr(eq + 1));
      continue;
    }
    in_ledger = false;
    rest << line << "\n";
  }
  bundle.ledger = ledger_from_lines(kv);
  bundle.subs = read_instances(rest.str());
  return bundle;
}

std::string write_bundle(const DecompositionBundle& bundle) {
  std::ostringstream ss;
  write_bundle(ss, bundle);
  return ss.str();
}

DecompositionBundle read_bundle(const std::string& text) {
  std::istringstream ss(text);
  return read_bundle(ss);
}

}  // namespace fgx
