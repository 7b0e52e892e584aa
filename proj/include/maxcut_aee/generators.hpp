#pragma once

#include <cstdint>

#include "maxcut_aee/graph.hpp"

namespace aee {

/// Uniform random spanning tree (via a Pruefer sequence) plus every other
/// pair independently with probability p. Vertices are 0..n-1.
Graph gen_connected(VertexId n, double edge_probability, std::uint64_t seed);

/// Connected clique-forest built by gluing `block_count` cliques of 2 to
/// `max_block` vertices onto random existing vertices.
Graph gen_clique_forest(int block_count, int max_block, std::uint64_t seed);

}  // namespace aee
