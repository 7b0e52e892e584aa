#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "maxcut_aee/graph.hpp"

namespace aee {

// DIMACS-like text, 1-indexed:
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>        (exactly m lines, 1 <= u < v <= n)
// File vertex u becomes id u-1. Throws FormatError on loops, duplicate
// edges, out-of-range endpoints and count mismatches.
Graph read_graph(std::istream& in);
Graph parse_graph(std::string_view text);

// Writes vertices renumbered 1..n in ascending id order. Returns the map
// from file index (0-based) to original id.
std::vector<VertexId> write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

// Kernel file: the graph followed by the trailer
//   c kernel k=<k'> s=<i1>,<i2>,...
// with separator vertices in the file's 1-indexed numbering.
void write_kernel(std::ostream& out, const Graph& g, std::int64_t k, const VertexList& separator);

struct KernelFile {
  Graph graph;
  std::int64_t k = 0;
  VertexList separator;
};
KernelFile read_kernel(std::istream& in);

}  // namespace aee
