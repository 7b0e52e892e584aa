#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "maxcut_aee/blocks.hpp"
#include "maxcut_aee/graph.hpp"

namespace aee {

/// Max-Cut with weighted vertices: maximize
///   #cut edges + sum_{f(x)=0} w0(x) + sum_{f(x)=1} w1(x).
/// Weights are indexed by vertex id and must cover g.id_bound().
struct WeightedInstance {
  Graph graph;
  std::vector<std::int64_t> w0;
  std::vector<std::int64_t> w1;

  static WeightedInstance unweighted(Graph g);
};

struct WeightPair {
  std::int64_t w0 = 0;
  std::int64_t w1 = 0;
};

struct BlockSplit {
  std::int64_t value = 0;
  std::size_t ones = 0;  // leading vertices (in descending w1-w0 order) assigned 1
};

/// Best extension of an anchor colored `anchor_color` into the clique formed
/// by the anchor and `block` (the non-anchor vertices). Vertices are ordered
/// by w1-w0 descending, stable on input order, and only the |block|+1 prefix
/// splits are tried. The anchor's own weight is not included. Returns the
/// smallest optimal prefix length.
BlockSplit clique_block_extension(Color anchor_color, std::span<const WeightPair> block,
                                  std::size_t block_size_with_anchor);

struct EliminationStep {
  VertexList block;  // X, ordered by w1-w0 descending, ties by ascending id
  VertexId anchor = kNoVertex;
  BlockSplit if_anchor_blue;  // A: anchor assigned 1
  BlockSplit if_anchor_red;   // B: anchor assigned 0
};

struct McwwvSolution {
  std::int64_t value = 0;
  Assignment witness;
  std::vector<EliminationStep> steps;
  VertexList roots;  // one surviving vertex per component
};

/// Exact solver for clique-forests by repeated leaf-block elimination.
/// Disconnected inputs are solved per component. Throws PreconditionError if
/// the graph is not a clique-forest or weights are missing/negative.
McwwvSolution solve_mcwwv(const WeightedInstance& inst);

/// Undoes elimination steps last-to-first given colors for the roots.
Assignment reconstruct(std::span<const EliminationStep> steps, const Assignment& root_colors);

/// The block elimination order of a clique-forest, computed once and reused
/// across many weight vectors (one per separator coloring).
class CliqueForestSolver {
 public:
  explicit CliqueForestSolver(const Graph& g);

  const Graph& graph() const { return graph_; }

  // Value only; w0/w1 indexed by vertex id.
  std::int64_t max_value(std::span<const std::int64_t> w0, std::span<const std::int64_t> w1) const;

  McwwvSolution solve(std::span<const std::int64_t> w0, std::span<const std::int64_t> w1) const;

 private:
  struct PlannedBlock {
    VertexId anchor;
    VertexList block;  // ascending id
  };

  template <typename OnStep>
  std::int64_t run(std::span<const std::int64_t> w0, std::span<const std::int64_t> w1, OnStep&& on_step,
                   VertexList* roots, std::vector<Color>* root_colors) const;

  Graph graph_;
  std::vector<PlannedBlock> plan_;
  VertexList roots_;
};

}  // namespace aee
