#include "maxcut_aee/kernel.hpp"

#include <algorithm>
#include <map>

#include "maxcut_aee/blocks.hpp"
#include "maxcut_aee/errors.hpp"
#include "maxcut_aee/reduction.hpp"

namespace aee {

namespace {

struct SeparatedGraph {
  const Graph& g;
  const VertexList& separator;
  VertexMask in_s;

  SeparatedGraph(const Graph& graph, const VertexList& sep)
      : g(graph), separator(sep), in_s(graph.id_bound(), sep) {}

  Graph rest() const { return g.without(separator); }

  VertexList s_neighbors(VertexId v) const {
    VertexList out;
    for (VertexId w : g.neighbors(v)) {
      if (in_s[w]) out.push_back(w);
    }
    return out;
  }

  VertexList s_neighbors(const VertexList& vs) const {
    VertexList out;
    for (VertexId v : vs) {
      const VertexList n = s_neighbors(v);
      out.insert(out.end(), n.begin(), n.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // X is a component of G - (S + x).
  bool is_component_off(VertexId x, const VertexList& comp) const {
    if (comp.empty() || !g.contains(x) || in_s[x]) return false;
    if (std::binary_search(comp.begin(), comp.end(), x)) return false;
    const VertexMask in_comp(g.id_bound(), comp);
    for (VertexId v : comp) {
      if (!g.contains(v) || in_s[v]) return false;
      for (VertexId w : g.neighbors(v)) {
        if (w != x && !in_comp[w] && !in_s[w]) return false;
      }
    }
    VertexList excluded;
    for (VertexId v : g.vertices()) {
      if (!in_comp[v]) excluded.push_back(v);
    }
    return components_excluding(g, excluded).size() == 1;
  }

  std::vector<VertexList> components_off(VertexId x) const {
    VertexList excluded = separator;
    excluded.push_back(x);
    return components_excluding(g, excluded);
  }
};

bool adjacent_to_all(const Graph& g, VertexId v, const VertexList& xs) {
  return std::all_of(xs.begin(), xs.end(), [&](VertexId x) { return g.adjacent(v, x); });
}

std::optional<KernelRuleApplication> make_k1(const SeparatedGraph& sg, VertexId x, const VertexList& comp) {
  if (comp.size() <= 1 || !sg.is_component_off(x, comp)) return std::nullopt;
  if (!sg.g.is_clique(comp) || !adjacent_to_all(sg.g, x, comp)) return std::nullopt;
  if (!sg.s_neighbors(comp).empty()) return std::nullopt;
  KernelRuleApplication app;
  app.rule = KernelRule::kK1;
  app.x = x;
  app.block = comp;
  app.removed = comp;
  app.k_delta = comp.size() % 2 == 1 ? -1 : 0;
  return app;
}

std::optional<KernelRuleApplication> make_k2(const SeparatedGraph& sg, VertexId s, VertexId x,
                                             const VertexList& comp) {
  if (comp.size() <= 1 || !sg.is_component_off(x, comp)) return std::nullopt;
  if (!sg.g.is_clique(comp) || !adjacent_to_all(sg.g, x, comp)) return std::nullopt;
  if (sg.s_neighbors(comp) != VertexList{s} || !adjacent_to_all(sg.g, s, comp)) return std::nullopt;
  KernelRuleApplication app;
  app.rule = KernelRule::kK2;
  app.s = s;
  app.x = x;
  app.block = comp;
  app.removed.assign(comp.begin() + 1, comp.end());
  app.k_delta = comp.size() % 2 == 0 ? -1 : 0;
  return app;
}

// The block's unique non-shared vertex with outside neighbours, the smallest
// non-shared vertex if none has any, or kNoVertex if two or more do.
VertexId k3_port(const Graph& g, const VertexList& block, VertexId shared) {
  const VertexMask in_block(g.id_bound(), block);
  VertexId port = kNoVertex;
  for (VertexId v : block) {
    if (v == shared) continue;
    const bool touches_outside = std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                                             [&](VertexId w) { return !in_block[w]; });
    if (!touches_outside) continue;
    if (port != kNoVertex) return kNoVertex;
    port = v;
  }
  if (port != kNoVertex) return port;
  for (VertexId v : block) {
    if (v != shared) return v;
  }
  return kNoVertex;
}

std::optional<KernelRuleApplication> make_k3(const Graph& g, const BlockDecomposition& d, std::size_t i,
                                             std::size_t j) {
  const VertexList& bx = d.blocks[i];
  const VertexList& by = d.blocks[j];
  if (bx.size() < 3 || by.size() < 3 || bx.size() % 2 == 0 || by.size() % 2 == 0) return std::nullopt;
  VertexList shared;
  std::set_intersection(bx.begin(), bx.end(), by.begin(), by.end(), std::back_inserter(shared));
  if (shared.size() != 1) return std::nullopt;
  const VertexId z = shared.front();
  const VertexId x = k3_port(g, bx, z);
  const VertexId y = k3_port(g, by, z);
  if (x == kNoVertex || y == kNoVertex) return std::nullopt;
  KernelRuleApplication app;
  app.rule = KernelRule::kK3;
  app.x = x;
  app.y = y;
  app.z = z;
  app.block = bx;
  app.other_block = by;
  for (const VertexList* b : {&bx, &by}) {
    for (VertexId v : *b) {
      if (v != x && v != y && v != z) app.removed.push_back(v);
    }
  }
  std::sort(app.removed.begin(), app.removed.end());
  app.added = {g.id_bound(), g.id_bound() + 1};
  return app;
}

std::optional<KernelRuleApplication> make_k4(const SeparatedGraph& sg, const BlockDecomposition& d,
                                             std::size_t i) {
  const VertexList& priv = d.private_vertices[i];
  std::map<VertexList, VertexList> classes;
  for (VertexId v : priv) classes[sg.s_neighbors(v)].push_back(v);
  const auto limit = static_cast<std::int64_t>(priv.size() + d.joints.size() + sg.separator.size());
  for (const auto& [nbrs, members] : classes) {
    const auto size = static_cast<std::int64_t>(members.size());
    if (size < 2 || 2 * size <= limit) continue;
    const VertexList removed{members[0], members[1]};
    // Never empty or disconnect the graph.
    if (sg.g.order() <= 2 || !is_connected_excluding(sg.g, removed)) return std::nullopt;
    KernelRuleApplication app;
    app.rule = KernelRule::kK4;
    app.block_index = i;
    app.block = d.blocks[i];
    app.removed = removed;
    return app;
  }
  return std::nullopt;
}

void check_structure(const Graph& g, const VertexList& separator, const char* op) {
  if (!is_connected(g)) throw PreconditionError(std::string(op) + ": graph is disconnected");
  for (VertexId s : separator) {
    if (!g.contains(s)) throw PreconditionError(std::string(op) + ": separator vertex not in graph");
  }
  if (!is_clique_forest(g.without(separator))) {
    throw PreconditionError(std::string(op) + ": G - S is not a clique-forest");
  }
}

std::optional<KernelRuleApplication> find_rule_unchecked(const Graph& g, const VertexList& separator,
                                                         KernelRule rule) {
  const SeparatedGraph sg(g, separator);
  switch (rule) {
    case KernelRule::kK1:
    case KernelRule::kK2: {
      for (VertexId x : g.vertices()) {
        if (sg.in_s[x]) continue;
        for (const VertexList& comp : sg.components_off(x)) {
          if (rule == KernelRule::kK1) {
            if (auto app = make_k1(sg, x, comp)) return app;
          } else {
            const VertexList ns = sg.s_neighbors(comp);
            if (ns.size() != 1) continue;
            if (auto app = make_k2(sg, ns.front(), x, comp)) return app;
          }
        }
      }
      return std::nullopt;
    }
    case KernelRule::kK3: {
      const BlockDecomposition d = blocks(sg.rest());
      for (std::size_t i = 0; i < d.block_count(); ++i) {
        for (std::size_t j = i + 1; j < d.block_count(); ++j) {
          if (auto app = make_k3(g, d, i, j)) return app;
        }
      }
      return std::nullopt;
    }
    case KernelRule::kK4: {
      const BlockDecomposition d = blocks(sg.rest());
      for (std::size_t i = 0; i < d.block_count(); ++i) {
        if (auto app = make_k4(sg, d, i)) return app;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<KernelRuleApplication> find_any_unchecked(const Graph& g, const VertexList& separator) {
  for (KernelRule r : {KernelRule::kK1, KernelRule::kK2, KernelRule::kK3, KernelRule::kK4}) {
    if (auto app = find_rule_unchecked(g, separator, r)) return app;
  }
  return std::nullopt;
}

}  // namespace

std::string_view kernel_rule_name(KernelRule r) {
  switch (r) {
    case KernelRule::kK1: return "K1";
    case KernelRule::kK2: return "K2";
    case KernelRule::kK3: return "K3";
    case KernelRule::kK4: return "K4";
  }
  return "?";
}

std::string_view reason_name(DecisionReason r) {
  switch (r) {
    case DecisionReason::kOneWayReduction: return "one-way-reduction";
    case DecisionReason::kSolvedDirectly: return "solved-directly";
    case DecisionReason::kLeafBlocks: return "leaf-blocks";
    case DecisionReason::kBlockCount: return "block-count";
    case DecisionReason::kBlockSize: return "block-size";
    case DecisionReason::kTotalSize: return "total-size";
  }
  return "?";
}

std::optional<KernelRuleApplication> find_kernel_rule(const Graph& g, const VertexList& separator) {
  check_structure(g, separator, "find_kernel_rule");
  return find_any_unchecked(g, separator);
}

std::optional<KernelRuleApplication> find_kernel_rule(const Graph& g, const VertexList& separator,
                                                      KernelRule rule) {
  check_structure(g, separator, "find_kernel_rule");
  return find_rule_unchecked(g, separator, rule);
}

KernelInstance apply_kernel_rule(const Graph& g, std::int64_t k, const VertexList& separator,
                                 const KernelRuleApplication& app) {
  check_structure(g, separator, "apply_kernel_rule");
  const SeparatedGraph sg(g, separator);
  std::optional<KernelRuleApplication> fresh;
  switch (app.rule) {
    case KernelRule::kK1:
      fresh = make_k1(sg, app.x, app.block);
      break;
    case KernelRule::kK2:
      fresh = make_k2(sg, app.s, app.x, app.block);
      break;
    case KernelRule::kK3: {
      const BlockDecomposition d = blocks(sg.rest());
      const auto i = std::find(d.blocks.begin(), d.blocks.end(), app.block);
      const auto j = std::find(d.blocks.begin(), d.blocks.end(), app.other_block);
      if (i != d.blocks.end() && j != d.blocks.end()) {
        fresh = make_k3(g, d, static_cast<std::size_t>(i - d.blocks.begin()),
                        static_cast<std::size_t>(j - d.blocks.begin()));
      }
      break;
    }
    case KernelRule::kK4: {
      const BlockDecomposition d = blocks(sg.rest());
      if (app.block_index < d.block_count()) fresh = make_k4(sg, d, app.block_index);
      break;
    }
  }
  if (!fresh || *fresh != app) {
    throw StaleApplicationError(std::string("apply_kernel_rule: ") + std::string(kernel_rule_name(app.rule)) +
                                " application does not match the graph");
  }

  KernelInstance out{g.without(app.removed), k + app.k_delta};
  if (app.rule == KernelRule::kK3) {
    const VertexId u = out.graph.add_vertex();
    const VertexId v = out.graph.add_vertex();
    const VertexId clique[] = {app.x, app.y, app.z, u, v};
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = i + 1; j < 5; ++j) {
        if (!out.graph.adjacent(clique[i], clique[j])) out.graph.add_edge(clique[i], clique[j]);
      }
    }
  }
  if (!is_connected(out.graph) || !is_clique_forest(out.graph.without(separator))) {
    throw InvariantViolation("apply_kernel_rule: result lost connectivity or the clique-forest structure");
  }
  return out;
}

KernelStatistics kernel_statistics(const Graph& g, const VertexList& separator, std::int64_t k) {
  const BlockDecomposition d = blocks(g.without(separator));
  KernelStatistics st;
  st.separator_size = static_cast<std::int64_t>(separator.size());
  st.k = k;
  st.leaf_blocks = static_cast<std::int64_t>(d.leaf_blocks.size());
  st.block_count = static_cast<std::int64_t>(d.block_count());
  st.joints = static_cast<std::int64_t>(d.joints.size());
  for (const VertexList& a : d.private_vertices) {
    st.largest_private = std::max(st.largest_private, static_cast<std::int64_t>(a.size()));
  }
  st.vertex_count = static_cast<std::int64_t>(g.order());
  return st;
}

std::int64_t kernel_vertex_bound(std::int64_t k) {
  const std::int64_t k2 = k * k;
  const std::int64_t k3 = k2 * k;
  return 29160 * k3 * k2 + 6480 * k2 * k2 - 8532 * k3 - 492 * k2 + 731 * k - 80;
}

std::optional<DecisionReason> evaluate_thresholds(const KernelStatistics& st) {
  const std::int64_t s = st.separator_size;
  const std::int64_t k = st.k;
  const std::int64_t l = st.leaf_blocks;
  if (l >= 4 * s * s + 2 * s + 2 * k - 2) return DecisionReason::kLeafBlocks;
  if (st.block_count >= 4 * s * s + 2 * s + 4 * l + 2 * k - 7) return DecisionReason::kBlockCount;
  if (st.block_count > 0 &&
      st.largest_private >= 2 * s * s * s + 5 * s * s + (l + k - 3) * s - 2 * l - st.joints - 2 * k) {
    return DecisionReason::kBlockSize;
  }
  // The total-size bound assumes |S| < 3k.
  if (s < 3 * k && st.vertex_count > kernel_vertex_bound(k)) return DecisionReason::kTotalSize;
  return std::nullopt;
}

std::optional<DecisionReason> threshold_decide(const Graph& g, const VertexList& separator, std::int64_t k) {
  if (separator.size() < 2 || k < 3) {
    throw PreconditionError("threshold_decide: requires |S| >= 2 and k >= 3");
  }
  check_structure(g, separator, "threshold_decide");
  if (find_any_unchecked(g, separator)) throw PreconditionError("threshold_decide: instance is not reduced");
  return evaluate_thresholds(kernel_statistics(g, separator, k));
}

KernelOutcome kernelize(const Graph& g, std::int64_t k) {
  if (k < 0) throw PreconditionError("kernelize: k must be non-negative");
  if (!is_connected(g)) throw PreconditionError("kernelize: graph is disconnected");
  KernelOutcome out;
  auto solve_directly = [&] {
    out.result = KernelDecision{solve_aee(g, k).answer, DecisionReason::kSolvedDirectly};
    return out;
  };
  if (k < 3) return solve_directly();

  FindSResult found = find_separator(g, k);
  if (std::holds_alternative<DecidedYes>(found)) {
    out.separator = std::get<DecidedYes>(found).trace.marked;
    out.result = KernelDecision{Answer::kYes, DecisionReason::kOneWayReduction};
    return out;
  }
  out.separator = std::get<SeparatorFound>(found).separator;
  if (out.separator.size() <= 1) return solve_directly();

  Graph current = g;
  std::int64_t current_k = k;
  while (auto app = find_any_unchecked(current, out.separator)) {
    KernelInstance next = apply_kernel_rule(current, current_k, out.separator, *app);
    current = std::move(next.graph);
    current_k = next.k;
    out.applications.push_back(std::move(*app));
  }

  if (auto reason = evaluate_thresholds(kernel_statistics(current, out.separator, current_k))) {
    out.result = KernelDecision{Answer::kYes, *reason};
    return out;
  }
  if (static_cast<std::int64_t>(current.order()) > kernel_vertex_bound(k)) {
    throw InvariantViolation("kernelize: kernel exceeds the vertex bound");
  }
  out.result = Kernel{std::move(current), current_k, out.separator};
  return out;
}

}  // namespace aee
