#include "maxcut_aee/blocks.hpp"

#include <algorithm>

namespace aee {

namespace {

std::vector<VertexList> components_masked(const Graph& g, const VertexMask& excluded) {
  std::vector<VertexList> out;
  std::vector<char> seen(static_cast<std::size_t>(g.id_bound()), 0);
  std::vector<VertexId> stack;
  for (VertexId s : g.vertices()) {
    if (seen[static_cast<std::size_t>(s)] || excluded[s]) continue;
    VertexList comp;
    seen[static_cast<std::size_t>(s)] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)] && !excluded[w]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::vector<VertexList> components(const Graph& g) { return components_masked(g, VertexMask{}); }

std::vector<VertexList> components_excluding(const Graph& g, std::span<const VertexId> excluded) {
  return components_masked(g, VertexMask(g.id_bound(), excluded));
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_connected_excluding(const Graph& g, std::span<const VertexId> excluded) {
  const VertexMask mask(g.id_bound(), excluded);
  std::size_t remaining = 0;
  VertexId start = kNoVertex;
  for (VertexId v : g.vertices()) {
    if (mask[v]) continue;
    ++remaining;
    if (start == kNoVertex) start = v;
  }
  if (remaining <= 1) return true;

  std::vector<char> seen(static_cast<std::size_t>(g.id_bound()), 0);
  std::vector<VertexId> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    ++reached;
    for (VertexId w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)] && !mask[w]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return reached == remaining;
}

bool BlockDecomposition::is_leaf(std::size_t i) const {
  return std::binary_search(leaf_blocks.begin(), leaf_blocks.end(), i);
}

BlockDecomposition blocks(const Graph& g) {
  const auto bound = static_cast<std::size_t>(g.id_bound());
  std::vector<int> disc(bound, -1);
  std::vector<int> low(bound, 0);
  std::vector<VertexList> found;
  std::vector<Edge> edge_stack;
  int timer = 0;

  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;
  };
  std::vector<Frame> stack;

  auto pop_block = [&](VertexId v, VertexId w) {
    VertexList block;
    while (true) {
      const Edge e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e.u);
      block.push_back(e.v);
      if (e.u == v && e.v == w) break;
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    found.push_back(std::move(block));
  };

  for (VertexId root : g.vertices()) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    if (g.degree(root) == 0) {
      disc[static_cast<std::size_t>(root)] = timer++;
      found.push_back({root});
      continue;
    }
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    stack.push_back({root, kNoVertex, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const VertexId w = nbrs[f.next++];
        const auto wi = static_cast<std::size_t>(w);
        const auto vi = static_cast<std::size_t>(f.v);
        if (w == f.parent) continue;
        if (disc[wi] == -1) {
          edge_stack.push_back({f.v, w});
          disc[wi] = low[wi] = timer++;
          stack.push_back({w, f.v, 0});
        } else if (disc[wi] < disc[vi]) {
          edge_stack.push_back({f.v, w});
          low[vi] = std::min(low[vi], disc[wi]);
        }
        continue;
      }
      const VertexId w = f.v;
      const VertexId v = f.parent;
      stack.pop_back();
      if (v == kNoVertex) continue;
      const auto vi = static_cast<std::size_t>(v);
      const auto wi = static_cast<std::size_t>(w);
      low[vi] = std::min(low[vi], low[wi]);
      if (low[wi] >= disc[vi]) pop_block(v, w);
    }
  }

  std::sort(found.begin(), found.end());

  BlockDecomposition d;
  d.blocks = std::move(found);
  d.blocks_of.resize(bound);
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    for (VertexId v : d.blocks[i]) d.blocks_of[static_cast<std::size_t>(v)].push_back(i);
  }
  for (VertexId v : g.vertices()) {
    if (d.blocks_of[static_cast<std::size_t>(v)].size() >= 2) d.joints.push_back(v);
  }
  d.cut_vertices = d.joints;
  const VertexMask joint_mask(g.id_bound(), d.joints);
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    VertexList priv;
    std::size_t shared = 0;
    for (VertexId v : d.blocks[i]) {
      if (joint_mask[v]) {
        ++shared;
      } else {
        priv.push_back(v);
      }
    }
    d.private_vertices.push_back(std::move(priv));
    if (shared <= 1) d.leaf_blocks.push_back(i);
    if (shared >= 3) d.branching_blocks.push_back(i);
  }
  return d;
}

bool is_clique_forest(const Graph& g) {
  const BlockDecomposition d = blocks(g);
  return std::all_of(d.blocks.begin(), d.blocks.end(), [&](const VertexList& b) { return g.is_clique(b); });
}

}  // namespace aee
