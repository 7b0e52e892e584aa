#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "maxcut_aee/graph.hpp"

namespace aee {

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexList> components(const Graph& g);

/// Components of g - excluded, without materializing the subgraph.
std::vector<VertexList> components_excluding(const Graph& g, std::span<const VertexId> excluded);

/// True iff g has at most one component. The empty graph counts as connected.
bool is_connected(const Graph& g);
bool is_connected_excluding(const Graph& g, std::span<const VertexId> excluded);

/// Blocks of a graph together with the derived statistics used by the
/// kernel thresholds. Block indices are 0-based; blocks are ordered
/// lexicographically by their sorted vertex lists.
struct BlockDecomposition {
  std::vector<VertexList> blocks;
  VertexList cut_vertices;
  // Vertices lying in two or more blocks. Equal to cut_vertices, kept under
  // its own name because the kernel statistics are phrased in terms of it.
  VertexList joints;
  // private_vertices[i] = blocks[i] minus joints.
  std::vector<VertexList> private_vertices;
  // Blocks with at most one vertex shared with another block.
  std::vector<std::size_t> leaf_blocks;
  // Blocks sharing three or more vertices with other blocks.
  std::vector<std::size_t> branching_blocks;
  // blocks_of[v]: indices of blocks containing v (indexed by vertex id).
  std::vector<std::vector<std::size_t>> blocks_of;

  std::size_t block_count() const { return blocks.size(); }
  bool is_leaf(std::size_t i) const;
};

/// Maximal 2-connected subgraphs, bridges (as K2 blocks) and isolated
/// vertices (as singleton blocks). Linear time.
BlockDecomposition blocks(const Graph& g);

/// True iff every block induces a complete subgraph.
bool is_clique_forest(const Graph& g);

}  // namespace aee
