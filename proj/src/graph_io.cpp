#include "maxcut_aee/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "maxcut_aee/errors.hpp"

namespace aee {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_int(std::string_view tok, std::size_t line_no) {
  std::int64_t value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw FormatError("line " + std::to_string(line_no) + ": expected integer, got '" + std::string(tok) + "'");
  }
  return value;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw FormatError("line " + std::to_string(line_no) + ": " + what);
}

struct ParsedGraph {
  Graph graph;
  std::vector<std::string> comments;
};

ParsedGraph read_with_comments(std::istream& in) {
  ParsedGraph out;
  std::optional<std::int64_t> declared_n;
  std::int64_t declared_m = 0;
  std::int64_t seen_m = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "c") {
      const auto pos = line.find('c');
      out.comments.push_back(line.substr(std::min(line.size(), pos + 2)));
      continue;
    }
    if (toks[0] == "p") {
      if (declared_n) fail(line_no, "second problem line");
      if (toks.size() != 4 || toks[1] != "edge") fail(line_no, "expected 'p edge <n> <m>'");
      const std::int64_t n = parse_int(toks[2], line_no);
      declared_m = parse_int(toks[3], line_no);
      if (n < 0 || declared_m < 0) fail(line_no, "negative count");
      if (n > (1 << 30)) fail(line_no, "vertex count too large");
      declared_n = n;
      out.graph = Graph(static_cast<VertexId>(n));
      continue;
    }
    if (toks[0] == "e") {
      if (!declared_n) fail(line_no, "edge before problem line");
      if (toks.size() != 3) fail(line_no, "expected 'e <u> <v>'");
      const std::int64_t u = parse_int(toks[1], line_no);
      const std::int64_t v = parse_int(toks[2], line_no);
      if (u == v) fail(line_no, "self-loop");
      if (u < 1 || v > *declared_n || u > v) fail(line_no, "endpoints must satisfy 1 <= u < v <= n");
      const auto a = static_cast<VertexId>(u - 1);
      const auto b = static_cast<VertexId>(v - 1);
      if (out.graph.adjacent(a, b)) fail(line_no, "duplicate edge");
      out.graph.add_edge(a, b);
      ++seen_m;
      continue;
    }
    fail(line_no, "unknown line type '" + std::string(toks[0]) + "'");
  }
  if (!declared_n) throw FormatError("missing 'p edge' line");
  if (seen_m != declared_m) {
    throw FormatError("edge count mismatch: declared " + std::to_string(declared_m) + ", found " +
                      std::to_string(seen_m));
  }
  return out;
}

}  // namespace

Graph read_graph(std::istream& in) { return read_with_comments(in).graph; }

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

std::vector<VertexId> write_graph(std::ostream& out, const Graph& g) {
  const VertexList ids = g.vertices();
  std::vector<std::int64_t> index(static_cast<std::size_t>(g.id_bound()), 0);
  for (std::size_t i = 0; i < ids.size(); ++i) index[static_cast<std::size_t>(ids[i])] = static_cast<std::int64_t>(i) + 1;
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << index[static_cast<std::size_t>(e.u)] << ' ' << index[static_cast<std::size_t>(e.v)] << '\n';
  }
  return ids;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void write_kernel(std::ostream& out, const Graph& g, std::int64_t k, const VertexList& separator) {
  const std::vector<VertexId> ids = write_graph(out, g);
  out << "c kernel k=" << k << " s=";
  bool first = true;
  for (VertexId s : separator) {
    const auto it = std::lower_bound(ids.begin(), ids.end(), s);
    if (it == ids.end() || *it != s) throw PreconditionError("separator vertex not in kernel graph");
    out << (first ? "" : ",") << (it - ids.begin()) + 1;
    first = false;
  }
  out << '\n';
}

KernelFile read_kernel(std::istream& in) {
  ParsedGraph parsed = read_with_comments(in);
  KernelFile kf;
  kf.graph = std::move(parsed.graph);
  for (const std::string& c : parsed.comments) {
    const auto toks = split_ws(c);
    if (toks.size() < 2 || toks[0] != "kernel") continue;
    bool have_k = false;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      if (toks[i].starts_with("k=")) {
        kf.k = parse_int(toks[i].substr(2), 0);
        have_k = true;
      } else if (toks[i].starts_with("s=")) {
        std::string_view rest = toks[i].substr(2);
        while (!rest.empty()) {
          const auto comma = rest.find(',');
          const auto item = rest.substr(0, comma);
          const std::int64_t idx = parse_int(item, 0);
          if (idx < 1 || idx > static_cast<std::int64_t>(kf.graph.order())) {
            throw FormatError("kernel trailer: separator index out of range");
          }
          kf.separator.push_back(static_cast<VertexId>(idx - 1));
          rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
      }
    }
    if (!have_k) throw FormatError("kernel trailer without k=");
    std::sort(kf.separator.begin(), kf.separator.end());
    return kf;
  }
  throw FormatError("missing 'c kernel' trailer");
}

}  // namespace aee
