#include "maxcut_aee/generators.hpp"

#include <algorithm>
#include <queue>
#include <random>

#include "maxcut_aee/errors.hpp"

namespace aee {

namespace {

// Uniform double in [0, 1) from the top 53 bits, independent of the
// standard library's distribution implementations.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

VertexId index_draw(std::mt19937_64& rng, VertexId bound) {
  return static_cast<VertexId>(rng() % static_cast<std::uint64_t>(bound));
}

std::vector<Edge> pruefer_tree(VertexId n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  if (n == 2) edges.push_back({0, 1});
  if (n <= 2) return edges;
  std::vector<VertexId> code(static_cast<std::size_t>(n - 2));
  for (VertexId& c : code) c = index_draw(rng, n);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (VertexId c : code) ++degree[static_cast<std::size_t>(c)];
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (VertexId v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  for (VertexId c : code) {
    const VertexId leaf = leaves.top();
    leaves.pop();
    edges.push_back({std::min(leaf, c), std::max(leaf, c)});
    if (--degree[static_cast<std::size_t>(c)] == 1) leaves.push(c);
  }
  const VertexId a = leaves.top();
  leaves.pop();
  const VertexId b = leaves.top();
  edges.push_back({std::min(a, b), std::max(a, b)});
  return edges;
}

}  // namespace

Graph gen_connected(VertexId n, double edge_probability, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("gen_connected: n must be at least 1");
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw PreconditionError("gen_connected: probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (const Edge& e : pruefer_tree(n, rng)) g.add_edge(e.u, e.v);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      if (unit_draw(rng) < edge_probability) g.add_edge(u, v);
    }
  }
  return g;
}

Graph gen_clique_forest(int block_count, int max_block, std::uint64_t seed) {
  if (block_count < 0) throw PreconditionError("gen_clique_forest: block count must be non-negative");
  if (max_block < 2) throw PreconditionError("gen_clique_forest: blocks need at least 2 vertices");
  std::mt19937_64 rng(seed);
  Graph g(1);
  for (int b = 0; b < block_count; ++b) {
    const auto size = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_block - 1));
    VertexList clique{index_draw(rng, g.id_bound())};
    for (int i = 1; i < size; ++i) clique.push_back(g.add_vertex());
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) g.add_edge(clique[i], clique[j]);
    }
  }
  return g;
}

}  // namespace aee
