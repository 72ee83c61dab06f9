#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "fgx/instances.hpp"

namespace fgx {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::int64_t parse_int(const std::string& tok, int line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw FormatError(line, "expected integer, got '" + tok + "'");
  return v;
}

// Cursor over the lines of one instance block.
struct Block {
  std::vector<std::string> lines;
  std::vector<int> numbers;  // original file line numbers
  std::size_t pos = 0;

  bool done() const { return pos >= lines.size(); }
  const std::string& peek() const { return lines[pos]; }
  int line_no() const {
    return done() ? (numbers.empty() ? 1 : numbers.back()) : numbers[pos];
  }
};

bool is_section(const std::string& line) {
  return line.rfind("A:", 0) == 0 || line.rfind("B:", 0) == 0 ||
         line.rfind("C:", 0) == 0 || line.rfind("E:", 0) == 0 ||
         line.rfind("V:", 0) == 0;
}

// key=value pairs, any number of lines until the first section.
std::map<std::string, std::int64_t> parse_header(Block& b) {
  std::map<std::string, std::int64_t> kv;
  static const std::set<std::string> known = {"n",  "d",  "k", "sigma",
                                              "scale", "k2", "s", "t",
                                              "strict", "directed"};
  while (!b.done() && !is_section(b.peek())) {
    for (const auto& tok : split_tokens(b.peek())) {
      auto eq = tok.find('=');
      if (eq == std::string::npos)
        throw FormatError(b.line_no(), "expected key=value, got '" + tok + "'");
      std::string key = tok.substr(0, eq);
      if (!known.count(key))
        throw FormatError(b.line_no(), "unknown header key '" + key + "'");
      if (kv.count(key))
        throw FormatError(b.line_no(), "duplicate header key '" + key + "'");
      kv[key] = parse_int(tok.substr(eq + 1), b.line_no());
    }
    ++b.pos;
  }
  return kv;
}

std::int64_t require(const std::map<std::string, std::int64_t>& kv,
                     const std::string& key, int line) {
  auto it = kv.find(key);
  if (it == kv.end())
    throw FormatError(line, "missing header key '" + key + "'");
  return it->second;
}

// Inline section: label and tokens share one line, e.g. "A: 1 5 -3".
std::vector<std::string> read_inline(Block& b, const std::string& label) {
  if (b.done() || b.peek().rfind(label, 0) != 0)
    throw FormatError(b.line_no(), "expected section '" + label + "'");
  auto toks = split_tokens(b.peek().substr(label.size()));
  ++b.pos;
  return toks;
}

// Multi-line section: label on its own line, then one row per line.
std::vector<std::vector<std::string>> read_rows(Block& b,
                                                const std::string& label) {
  if (b.done() || b.peek() != label)
    throw FormatError(b.line_no(), "expected section '" + label + "'");
  ++b.pos;
  std::vector<std::vector<std::string>> rows;
  while (!b.done() && !is_section(b.peek())) {
    rows.push_back(split_tokens(b.peek()));
    ++b.pos;
  }
  return rows;
}

std::vector<std::uint8_t> parse_bitvec(const std::string& tok, int d,
                                       int line) {
  if (static_cast<int>(tok.size()) != d)
    throw FormatError(line, "bit-vector length differs from d");
  std::vector<std::uint8_t> v(tok.size());
  for (std::size_t i = 0; i < tok.size(); ++i) {
    if (tok[i] != '0' && tok[i] != '1')
      throw FormatError(line, "bit-vector entry not 0/1");
    v[i] = tok[i] == '1';
  }
  return v;
}

std::vector<std::int64_t> parse_ints(const std::vector<std::string>& toks,
                                     int line) {
  std::vector<std::int64_t> out;
  out.reserve(toks.size());
  for (const auto& t : toks) out.push_back(parse_int(t, line));
  return out;
}

WeightedGraph parse_graph(Block& b, const std::map<std::string, std::int64_t>& kv,
                          bool want_colors, int header_line) {
  WeightedGraph g;
  g.n = static_cast<int>(require(kv, "n", header_line));
  g.directed = kv.count("directed") ? kv.at("directed") != 0 : false;
  g.k = kv.count("k") ? static_cast<int>(kv.at("k")) : 0;
  for (const auto& row : read_rows(b, "E:")) {
    if (row.size() != 3)
      throw FormatError(b.line_no(), "edge row must be 'u v w'");
    Edge e;
    e.u = static_cast<int>(parse_int(row[0], b.line_no()));
    e.v = static_cast<int>(parse_int(row[1], b.line_no()));
    e.w = parse_int(row[2], b.line_no());
    g.edges.push_back(e);
  }
  if (want_colors) {
    auto toks = read_inline(b, "V:");
    for (const auto& t : toks)
      g.colors.push_back(static_cast<int>(parse_int(t, b.line_no())));
  } else if (!b.done() && b.peek().rfind("V:", 0) == 0) {
    throw FormatError(b.line_no(), "colors not allowed for tag 'clique'");
  }
  return g;
}

ProblemInstance parse_block(Block& b) {
  const int first_line = b.line_no();
  if (b.done()) throw FormatError(first_line, "empty instance");
  auto head = split_tokens(b.peek());
  if (head.size() != 3 || head[0] != "fgx")
    throw FormatError(first_line, "expected header 'fgx 1 <tag>'");
  if (head[1] != "1")
    throw FormatError(first_line, "unsupported format version '" + head[1] + "'");
  const std::string tag = head[2];
  ++b.pos;
  auto kv = parse_header(b);
  const int hline = b.line_no();

  if (tag == "ov") {
    OvInstance inst;
    const int n = static_cast<int>(require(kv, "n", hline));
    inst.dim = static_cast<int>(require(kv, "d", hline));
    auto atoks = read_inline(b, "A:");
    auto btoks = read_inline(b, "B:");
    if (static_cast<int>(atoks.size()) != n ||
        static_cast<int>(btoks.size()) != n)
      throw FormatError(hline, "vector count differs from n");
    for (const auto& t : atoks) inst.a.push_back(parse_bitvec(t, inst.dim, hline));
    for (const auto& t : btoks) inst.b.push_back(parse_bitvec(t, inst.dim, hline));
    return inst;
  }
  if (tag == "3sum" || tag == "conv3sum") {
    const int n = static_cast<int>(require(kv, "n", hline));
    auto vals = parse_ints(read_inline(b, "A:"), hline);
    if (static_cast<int>(vals.size()) != n)
      throw FormatError(hline, "array length differs from n");
    if (tag == "3sum") return ThreeSumInstance{std::move(vals)};
    return ConvThreeSumInstance{std::move(vals)};
  }
  if (tag == "mcconv3sum") {
    McConvThreeSumInstance inst;
    const int n = static_cast<int>(require(kv, "n", hline));
    inst.a = parse_ints(read_inline(b, "A:"), hline);
    inst.b = parse_ints(read_inline(b, "B:"), hline);
    for (const auto& t : read_inline(b, "C:")) {
      if (t == "_")
        inst.c.push_back(std::nullopt);
      else
        inst.c.push_back(parse_int(t, hline));
    }
    if (inst.n() != n || static_cast<int>(inst.b.size()) != n ||
        static_cast<int>(inst.c.size()) != n)
      throw FormatError(hline, "array length differs from n");
    return inst;
  }
  if (tag == "clique") return parse_graph(b, kv, false, hline);
  if (tag == "tricol") return parse_graph(b, kv, true, hline);
  if (tag == "lcs") {
    LcsInstance inst;
    inst.k = require(kv, "k", hline);
    inst.sigma = require(kv, "sigma", hline);
    inst.x1 = parse_ints(read_inline(b, "A:"), hline);
    inst.x2 = parse_ints(read_inline(b, "B:"), hline);
    return inst;
  }
  if (tag == "lcis") {
    LcisInstance inst;
    inst.k = require(kv, "k", hline);
    inst.strict = kv.count("strict") ? kv.at("strict") != 0 : true;
    inst.x1 = parse_ints(read_inline(b, "A:"), hline);
    inst.x2 = parse_ints(read_inline(b, "B:"), hline);
    return inst;
  }
  if (tag == "frechet") {
    FrechetInstance inst;
    inst.scale = require(kv, "scale", hline);
    inst.k2 = require(kv, "k2", hline);
    for (auto* side : {&inst.p, &inst.q}) {
      for (const auto& row : read_rows(b, side == &inst.p ? "A:" : "B:")) {
        if (row.size() != 2)
          throw FormatError(b.line_no(), "point row must be 'x y'");
        side->push_back(Point{parse_int(row[0], b.line_no()),
                              parse_int(row[1], b.line_no())});
      }
    }
    return inst;
  }
  if (tag == "2sp") {
    SecondShortestPathInstance inst;
    inst.s = static_cast<int>(require(kv, "s", hline));
    inst.t = static_cast<int>(require(kv, "t", hline));
    inst.k = require(kv, "k", hline);
    std::map<std::string, std::int64_t> gkv = kv;
    if (!gkv.count("directed")) gkv["directed"] = 1;
    inst.graph = parse_graph(b, gkv, false, hline);
    return inst;
  }
  throw FormatError(first_line, "unknown problem tag '" + tag + "'");
}

void finish_block(Block& b) {
  if (!b.done())
    throw FormatError(b.line_no(), "unexpected trailing content");
}

void write_header(std::ostream& out, const std::string& tag) {
  out << "fgx 1 " << tag << "\n";
}

template <typename Seq>
void write_inline_ints(std::ostream& out, const std::string& label,
                       const Seq& seq) {
  out << label;
  for (const auto& v : seq) out << " " << v;
  out << "\n";
}

struct Writer {
  std::ostream& out;

  void operator()(const OvInstance& i) {
    write_header(out, "ov");
    out << "n=" << i.n() << " d=" << i.dim << "\n";
    for (const auto* side : {&i.a, &i.b}) {
      out << (side == &i.a ? "A:" : "B:");
      for (const auto& v : *side) {
        out << " ";
        for (auto bit : v) out << (bit ? '1' : '0');
      }
      out << "\n";
    }
  }
  void operator()(const ThreeSumInstance& i) {
    write_header(out, "3sum");
    out << "n=" << i.n() << "\n";
    write_inline_ints(out, "A:", i.values);
  }
  void operator()(const ConvThreeSumInstance& i) {
    write_header(out, "conv3sum");
    out << "n=" << i.n() << "\n";
    write_inline_ints(out, "A:", i.values);
  }
  void operator()(const McConvThreeSumInstance& i) {
    write_header(out, "mcconv3sum");
    out << "n=" << i.n() << "\n";
    write_inline_ints(out, "A:", i.a);
    write_inline_ints(out, "B:", i.b);
    out << "C:";
    for (const auto& v : i.c) {
      out << " ";
      if (v)
        out << *v;
      else
        out << "_";
    }
    out << "\n";
  }
  void operator()(const WeightedGraph& g) {
    const bool tricol = !g.colors.empty();
    write_header(out, tricol ? "tricol" : "clique");
    out << "n=" << g.n;
    if (!tricol) out << " k=" << g.k;
    out << " directed=" << (g.directed ? 1 : 0) << "\n";
    out << "E:\n";
    for (const auto& e : g.edges)
      out << e.u << " " << e.v << " " << e.w << "\n";
    if (tricol) write_inline_ints(out, "V:", g.colors);
  }
  void operator()(const LcsInstance& i) {
    write_header(out, "lcs");
    out << "k=" << i.k << " sigma=" << i.sigma << "\n";
    write_inline_ints(out, "A:", i.x1);
    write_inline_ints(out, "B:", i.x2);
  }
  void operator()(const LcisInstance& i) {
    write_header(out, "lcis");
    out << "k=" << i.k << " strict=" << (i.strict ? 1 : 0) << "\n";
    write_inline_ints(out, "A:", i.x1);
    write_inline_ints(out, "B:", i.x2);
  }
  void operator()(const FrechetInstance& i) {
    write_header(out, "frechet");
    out << "scale=" << i.scale << " k2=" << i.k2 << "\n";
    for (const auto* side : {&i.p, &i.q}) {
      out << (side == &i.p ? "A:" : "B:") << "\n";
      for (const auto& pt : *side) out << pt.x << " " << pt.y << "\n";
    }
  }
  void operator()(const SecondShortestPathInstance& i) {
    write_header(out, "2sp");
    out << "n=" << i.graph.n << " s=" << i.s << " t=" << i.t << " k=" << i.k
        << " directed=" << (i.graph.directed ? 1 : 0) << "\n";
    out << "E:\n";
    for (const auto& e : i.graph.edges)
      out << e.u << " " << e.v << " " << e.w << "\n";
  }
};

// Splits the stream into ----separated blocks; # lines are comments.
std::vector<Block> read_blocks(std::istream& in) {
  std::vector<Block> blocks(1);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line == "---") {
      blocks.emplace_back();
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    blocks.back().lines.push_back(line);
    blocks.back().numbers.push_back(no);
  }
  return blocks;
}

}  // namespace

ProblemInstance read_instance(std::istream& in) {
  auto blocks = read_blocks(in);
  if (blocks.size() != 1)
    throw FormatError(1, "expected a single instance");
  auto inst = parse_block(blocks[0]);
  finish_block(blocks[0]);
  return inst;
}

ProblemInstance read_instance(const std::string& text) {
  std::istringstream ss(text);
  return read_instance(ss);
}

std::vector<ProblemInstance> read_instances(std::istream& in) {
  std::vector<ProblemInstance> out;
  for (auto& b : read_blocks(in)) {
    if (b.lines.empty()) continue;
    out.push_back(parse_block(b));
    finish_block(b);
  }
  return out;
}

std::vector<ProblemInstance> read_instances(const std::string& text) {
  std::istringstream ss(text);
  return read_instances(ss);
}

void write_instance(std::ostream& out, const ProblemInstance& inst) {
  std::visit(Writer{out}, inst);
}

std::string write_instance(const ProblemInstance& inst) {
  std::ostringstream ss;
  write_instance(ss, inst);
  return ss.str();
}

void write_instances(std::ostream& out,
                     const std::vector<ProblemInstance>& insts) {
  for (std::size_t i = 0; i < insts.size(); ++i) {
    if (i > 0) out << "---\n";
    write_instance(out, insts[i]);
  }
}

}  // namespace fgx
