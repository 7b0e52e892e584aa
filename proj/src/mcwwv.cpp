#include "maxcut_aee/mcwwv.hpp"

#include <algorithm>
#include <numeric>

#include "maxcut_aee/errors.hpp"

namespace aee {

WeightedInstance WeightedInstance::unweighted(Graph g) {
  const auto bound = static_cast<std::size_t>(g.id_bound());
  return {std::move(g), std::vector<std::int64_t>(bound, 0), std::vector<std::int64_t>(bound, 0)};
}

namespace {

// Stable order of block positions by w1 - w0 descending.
void order_by_preference(std::span<const WeightPair> block, std::vector<std::size_t>& order) {
  order.resize(block.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return block[i].w1 - block[i].w0 > block[j].w1 - block[j].w0;
  });
}

// `block` already in preference order.
BlockSplit best_prefix_split(Color anchor_color, std::span<const WeightPair> block) {
  const auto n = static_cast<std::int64_t>(block.size());
  std::int64_t weight = 0;
  for (const WeightPair& w : block) weight += w.w0;
  const std::int64_t anchor_one = anchor_color == Color::kBlue ? 1 : 0;
  BlockSplit best{(anchor_one) * (n + 1 - anchor_one) + weight, 0};
  for (std::int64_t t = 1; t <= n; ++t) {
    const WeightPair& w = block[static_cast<std::size_t>(t - 1)];
    weight += w.w1 - w.w0;
    const std::int64_t ones = t + anchor_one;
    const std::int64_t zeros = n + 1 - ones;
    const std::int64_t value = ones * zeros + weight;
    if (value > best.value) best = {value, static_cast<std::size_t>(t)};
  }
  return best;
}

}  // namespace

BlockSplit clique_block_extension(Color anchor_color, std::span<const WeightPair> block,
                                  std::size_t block_size_with_anchor) {
  if (block.empty()) throw PreconditionError("clique_block_extension: empty block");
  if (block_size_with_anchor != block.size() + 1) {
    throw PreconditionError("clique_block_extension: block size must count the anchor");
  }
  std::vector<std::size_t> order;
  order_by_preference(block, order);
  std::vector<WeightPair> sorted;
  sorted.reserve(block.size());
  for (std::size_t i : order) sorted.push_back(block[i]);
  return best_prefix_split(anchor_color, sorted);
}

CliqueForestSolver::CliqueForestSolver(const Graph& g) : graph_(g) {
  const BlockDecomposition d = blocks(g);
  for (const VertexList& b : d.blocks) {
    if (!g.is_clique(b)) throw PreconditionError("solve_mcwwv: graph is not a clique-forest");
  }
  std::vector<char> block_done(d.block_count(), 0);
  std::vector<char> vertex_seen(static_cast<std::size_t>(g.id_bound()), 0);
  std::vector<PlannedBlock> preorder;
  std::vector<VertexId> stack;
  for (VertexId root : g.vertices()) {
    if (vertex_seen[static_cast<std::size_t>(root)]) continue;
    roots_.push_back(root);
    vertex_seen[static_cast<std::size_t>(root)] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (std::size_t bi : d.blocks_of[static_cast<std::size_t>(v)]) {
        if (block_done[bi]) continue;
        block_done[bi] = 1;
        PlannedBlock pb{v, {}};
        for (VertexId u : d.blocks[bi]) {
          if (u == v) continue;
          pb.block.push_back(u);
          vertex_seen[static_cast<std::size_t>(u)] = 1;
          stack.push_back(u);
        }
        if (!pb.block.empty()) preorder.push_back(std::move(pb));
      }
    }
  }
  // Reversed pre-order eliminates every block after all blocks hanging below it.
  plan_.assign(preorder.rbegin(), preorder.rend());
}

template <typename OnStep>
std::int64_t CliqueForestSolver::run(std::span<const std::int64_t> w0, std::span<const std::int64_t> w1,
                                     OnStep&& on_step, VertexList* roots, std::vector<Color>* root_colors) const {
  const auto bound = static_cast<std::size_t>(graph_.id_bound());
  if (w0.size() < bound || w1.size() < bound) throw PreconditionError("solve_mcwwv: weight vectors too short");
  std::vector<std::int64_t> cur0(w0.begin(), w0.begin() + static_cast<std::ptrdiff_t>(bound));
  std::vector<std::int64_t> cur1(w1.begin(), w1.begin() + static_cast<std::ptrdiff_t>(bound));
  std::vector<WeightPair> raw;
  std::vector<WeightPair> sorted;
  std::vector<std::size_t> order;
  for (const PlannedBlock& pb : plan_) {
    raw.clear();
    for (VertexId x : pb.block) raw.push_back({cur0[static_cast<std::size_t>(x)], cur1[static_cast<std::size_t>(x)]});
    order_by_preference(raw, order);
    sorted.clear();
    for (std::size_t i : order) sorted.push_back(raw[i]);
    const auto r = static_cast<std::size_t>(pb.anchor);
    BlockSplit blue = best_prefix_split(Color::kBlue, sorted);
    BlockSplit red = best_prefix_split(Color::kRed, sorted);
    blue.value += cur1[r];
    red.value += cur0[r];
    cur1[r] = blue.value;
    cur0[r] = red.value;
    on_step(pb, order, blue, red);
  }
  std::int64_t total = 0;
  for (VertexId root : roots_) {
    const auto r = static_cast<std::size_t>(root);
    total += std::max(cur0[r], cur1[r]);
    if (roots) roots->push_back(root);
    if (root_colors) root_colors->push_back(cur1[r] > cur0[r] ? Color::kBlue : Color::kRed);
  }
  return total;
}

std::int64_t CliqueForestSolver::max_value(std::span<const std::int64_t> w0, std::span<const std::int64_t> w1) const {
  return run(w0, w1, [](const PlannedBlock&, const std::vector<std::size_t>&, const BlockSplit&, const BlockSplit&) {},
             nullptr, nullptr);
}

McwwvSolution CliqueForestSolver::solve(std::span<const std::int64_t> w0, std::span<const std::int64_t> w1) const {
  McwwvSolution sol;
  std::vector<Color> root_colors;
  sol.value = run(
      w0, w1,
      [&](const PlannedBlock& pb, const std::vector<std::size_t>& order, const BlockSplit& blue,
          const BlockSplit& red) {
        EliminationStep step;
        step.anchor = pb.anchor;
        for (std::size_t i : order) step.block.push_back(pb.block[i]);
        step.if_anchor_blue = blue;
        step.if_anchor_red = red;
        sol.steps.push_back(std::move(step));
      },
      &sol.roots, &root_colors);
  Assignment roots;
  for (std::size_t i = 0; i < sol.roots.size(); ++i) roots.set(sol.roots[i], root_colors[i]);
  sol.witness = reconstruct(sol.steps, roots);
  return sol;
}

McwwvSolution solve_mcwwv(const WeightedInstance& inst) {
  const auto bound = static_cast<std::size_t>(inst.graph.id_bound());
  if (inst.w0.size() < bound || inst.w1.size() < bound) {
    throw PreconditionError("solve_mcwwv: every vertex needs both weights");
  }
  for (VertexId v : inst.graph.vertices()) {
    if (inst.w0[static_cast<std::size_t>(v)] < 0 || inst.w1[static_cast<std::size_t>(v)] < 0) {
      throw PreconditionError("solve_mcwwv: weights must be non-negative");
    }
  }
  return CliqueForestSolver(inst.graph).solve(inst.w0, inst.w1);
}

Assignment reconstruct(std::span<const EliminationStep> steps, const Assignment& root_colors) {
  Assignment a = root_colors;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (!a.contains(it->anchor)) {
      throw PreconditionError("reconstruct: anchor " + std::to_string(it->anchor) + " has no color");
    }
    const BlockSplit& split = a.at(it->anchor) == Color::kBlue ? it->if_anchor_blue : it->if_anchor_red;
    for (std::size_t j = 0; j < it->block.size(); ++j) {
      a.set(it->block[j], j < split.ones ? Color::kBlue : Color::kRed);
    }
  }
  return a;
}

}  // namespace aee
