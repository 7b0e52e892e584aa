#include "maxcut_aee/reduction.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "maxcut_aee/blocks.hpp"
#include "maxcut_aee/errors.hpp"

namespace aee {

namespace {

std::int64_t incident_edge_count(const Graph& g, const VertexList& removed) {
  const VertexMask in_removed(g.id_bound(), removed);
  std::int64_t count = 0;
  for (VertexId v : removed) {
    for (VertexId w : g.neighbors(v)) {
      // Edges inside the removed set are seen from both ends.
      if (!in_removed[w] || v < w) ++count;
    }
  }
  return count;
}

VertexList sorted_union(VertexList a, std::initializer_list<VertexId> extra) {
  a.insert(a.end(), extra.begin(), extra.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

bool all_present(const Graph& g, std::span<const VertexId> vs) {
  return std::all_of(vs.begin(), vs.end(), [&](VertexId v) { return g.contains(v); });
}

// X nonempty, connected, and with no neighbors outside X + v.
bool is_component_without(const Graph& g, VertexId v, const VertexList& comp) {
  if (comp.empty() || !g.contains(v) || !all_present(g, comp)) return false;
  if (std::binary_search(comp.begin(), comp.end(), v)) return false;
  const VertexMask in_comp(g.id_bound(), comp);
  for (VertexId x : comp) {
    for (VertexId w : g.neighbors(x)) {
      if (w != v && !in_comp[w]) return false;
    }
  }
  std::vector<char> seen(static_cast<std::size_t>(g.id_bound()), 0);
  std::vector<VertexId> stack{comp.front()};
  seen[static_cast<std::size_t>(comp.front())] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    ++reached;
    for (VertexId w : g.neighbors(x)) {
      if (in_comp[w] && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return reached == comp.size();
}

bool adjacent_to_all(const Graph& g, VertexId v, const VertexList& xs) {
  return std::all_of(xs.begin(), xs.end(), [&](VertexId x) { return g.adjacent(v, x); });
}

std::optional<RuleApplication> make_r1(const Graph& g, VertexId v, const VertexList& comp) {
  if (!is_component_without(g, v, comp)) return std::nullopt;
  if (!g.is_clique(comp) || !adjacent_to_all(g, v, comp)) return std::nullopt;
  RuleApplication app;
  app.rule = OneWayRule::kR1;
  app.v = v;
  app.component = comp;
  app.removed = comp;
  app.k_delta = comp.size() % 2 == 1 ? -1 : 0;
  app.removed_vertices = static_cast<std::int64_t>(comp.size());
  app.removed_edges = incident_edge_count(g, comp);
  return app;
}

std::optional<RuleApplication> make_r2(const Graph& g, VertexId v, const VertexList& comp) {
  if (!is_component_without(g, v, comp) || !g.is_clique(comp)) return std::nullopt;
  RuleApplication app;
  app.rule = OneWayRule::kR2;
  app.v = v;
  app.component = comp;
  app.removed = comp;
  app.marked = {v};
  app.k_delta = -2;
  app.removed_vertices = static_cast<std::int64_t>(comp.size());
  app.removed_edges = incident_edge_count(g, comp);
  return app;
}

std::optional<RuleApplication> make_r3(const Graph& g, VertexId a, VertexId b, VertexId c) {
  const VertexId trio[] = {a, b, c};
  if (!all_present(g, trio) || a == c) return std::nullopt;
  if (!g.adjacent(a, b) || !g.adjacent(b, c) || g.adjacent(a, c)) return std::nullopt;
  if (!is_connected_excluding(g, trio)) return std::nullopt;
  RuleApplication app;
  app.rule = OneWayRule::kR3;
  app.a = a;
  app.b = b;
  app.c = c;
  app.removed = sorted_union({}, {a, b, c});
  app.marked = app.removed;
  app.k_delta = -1;
  app.removed_vertices = 3;
  app.removed_edges = incident_edge_count(g, app.removed);
  return app;
}

std::optional<RuleApplication> make_r4(const Graph& g, VertexId x, VertexId y, const VertexList& side) {
  const VertexId pair[] = {x, y};
  if (!all_present(g, pair) || x == y || g.adjacent(x, y)) return std::nullopt;
  const auto comps = components_excluding(g, pair);
  if (comps.size() != 2) return std::nullopt;
  if (side != comps[0] && side != comps[1]) return std::nullopt;
  if (!g.is_clique(side) || !adjacent_to_all(g, x, side) || !adjacent_to_all(g, y, side)) return std::nullopt;
  RuleApplication app;
  app.rule = OneWayRule::kR4;
  app.x = x;
  app.y = y;
  app.component = side;
  app.removed = sorted_union(side, {x, y});
  app.marked = {std::min(x, y), std::max(x, y)};
  app.k_delta = -1;
  app.removed_vertices = static_cast<std::int64_t>(app.removed.size());
  app.removed_edges = incident_edge_count(g, app.removed);
  return app;
}

// (v, X) pairs where X + v is a leaf block with v its attachment vertex, or,
// for a graph that is a single block, every (v, V - v). Sorted by (v, min X).
// In a connected graph these are the only candidates for R1, and for R2 once
// R1 has been ruled out.
std::vector<std::pair<VertexId, VertexList>> leaf_block_candidates(const Graph& g) {
  std::vector<std::pair<VertexId, VertexList>> out;
  const BlockDecomposition d = blocks(g);
  if (d.block_count() == 1) {
    const VertexList& b = d.blocks.front();
    if (b.size() < 2) return out;
    for (VertexId v : b) {
      VertexList rest;
      std::copy_if(b.begin(), b.end(), std::back_inserter(rest), [&](VertexId w) { return w != v; });
      out.emplace_back(v, std::move(rest));
    }
    return out;
  }
  const VertexMask joint(g.id_bound(), d.joints);
  for (std::size_t i : d.leaf_blocks) {
    const VertexList& b = d.blocks[i];
    VertexId attach = kNoVertex;
    VertexList rest;
    for (VertexId w : b) {
      if (joint[w]) {
        attach = w;
      } else {
        rest.push_back(w);
      }
    }
    if (attach == kNoVertex || rest.empty()) continue;
    out.emplace_back(attach, std::move(rest));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<RuleApplication> find_r1(const Graph& g) {
  for (const auto& [v, comp] : leaf_block_candidates(g)) {
    if (g.is_clique(comp) && adjacent_to_all(g, v, comp)) return make_r1(g, v, comp);
  }
  return std::nullopt;
}

std::optional<RuleApplication> find_r2(const Graph& g) {
  for (const auto& [v, comp] : leaf_block_candidates(g)) {
    if (g.is_clique(comp)) return make_r2(g, v, comp);
  }
  return std::nullopt;
}

std::optional<RuleApplication> find_r3(const Graph& g) {
  for (VertexId b : g.vertices()) {
    const auto nbrs = g.neighbors(b);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (g.adjacent(nbrs[i], nbrs[j])) continue;
        if (auto app = make_r3(g, nbrs[i], b, nbrs[j])) return app;
      }
    }
  }
  return std::nullopt;
}

std::optional<RuleApplication> find_r4(const Graph& g) {
  const VertexList vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const VertexId x = vs[i];
      const VertexId y = vs[j];
      if (g.adjacent(x, y)) continue;
      const VertexId pair[] = {x, y};
      const auto comps = components_excluding(g, pair);
      if (comps.size() != 2) continue;
      for (const VertexList& side : comps) {
        if (g.is_clique(side) && adjacent_to_all(g, x, side) && adjacent_to_all(g, y, side)) {
          return make_r4(g, x, y, side);
        }
      }
    }
  }
  return std::nullopt;
}

void require_connected(const Graph& g, const char* op) {
  if (!is_connected(g)) throw PreconditionError(std::string(op) + ": graph is disconnected");
}

}  // namespace

std::string_view rule_name(OneWayRule r) {
  switch (r) {
    case OneWayRule::kR1: return "R1";
    case OneWayRule::kR2: return "R2";
    case OneWayRule::kR3: return "R3";
    case OneWayRule::kR4: return "R4";
  }
  return "?";
}

std::optional<RuleApplication> find_rule(const Graph& g, OneWayRule rule) {
  require_connected(g, "find_rule");
  if (g.size() == 0) return std::nullopt;
  switch (rule) {
    case OneWayRule::kR1: return find_r1(g);
    case OneWayRule::kR2: return find_r2(g);
    case OneWayRule::kR3: return find_r3(g);
    case OneWayRule::kR4: return find_r4(g);
  }
  return std::nullopt;
}

std::optional<RuleApplication> find_next_rule(const Graph& g) {
  require_connected(g, "find_next_rule");
  if (g.size() == 0) return std::nullopt;
  if (auto app = find_r1(g)) return app;
  if (auto app = find_r2(g)) return app;
  if (auto app = find_r3(g)) return app;
  return find_r4(g);
}

ReducedInstance apply_rule(const Graph& g, std::int64_t k, const RuleApplication& app) {
  std::optional<RuleApplication> fresh;
  switch (app.rule) {
    case OneWayRule::kR1:
      fresh = make_r1(g, app.v, app.component);
      break;
    case OneWayRule::kR2:
      // R2 is only defined on graphs already reduced by R1.
      if (is_connected(g) && !find_r1(g)) fresh = make_r2(g, app.v, app.component);
      break;
    case OneWayRule::kR3:
      fresh = make_r3(g, app.a, app.b, app.c);
      break;
    case OneWayRule::kR4:
      fresh = make_r4(g, app.x, app.y, app.component);
      break;
  }
  if (!fresh || *fresh != app) {
    throw StaleApplicationError(std::string("apply_rule: ") + std::string(rule_name(app.rule)) +
                                " application does not match the graph");
  }
  ReducedInstance out{g.without(app.removed), k + app.k_delta};
  if (!is_connected(out.graph)) throw InvariantViolation("apply_rule: reduced graph is disconnected");
  return out;
}

ReductionTrace reduce_exhaustively(const Graph& g, std::int64_t k) {
  require_connected(g, "reduce_exhaustively");
  if (k < 0) throw PreconditionError("reduce_exhaustively: k must be non-negative");
  ReductionTrace trace;
  trace.initial = g;
  trace.initial_k = k;
  Graph current = g;
  std::int64_t current_k = k;
  VertexMask marked(g.id_bound());
  while (auto app = find_next_rule(current)) {
    auto next = apply_rule(current, current_k, *app);
    current = std::move(next.graph);
    current_k = next.k;
    for (VertexId v : app->marked) marked.insert(v);
    trace.steps.push_back(std::move(*app));
  }
  if (current.size() != 0) throw InvariantViolation("reduce_exhaustively: no rule applies but edges remain");
  for (VertexId v : g.vertices()) {
    if (marked[v]) trace.marked.push_back(v);
  }
  trace.final_graph = std::move(current);
  trace.final_k = current_k;
  return trace;
}

namespace {

void write_ids(std::ostream& out, const VertexList& ids) {
  if (ids.empty()) {
    out << '-';
    return;
  }
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? "," : "") << ids[i] + 1;
}

}  // namespace

void write_trace(std::ostream& out, const ReductionTrace& trace) {
  out << "# reduce n=" << trace.initial.order() << " m=" << trace.initial.size() << " k=" << trace.initial_k
      << '\n';
  for (const RuleApplication& s : trace.steps) {
    out << rule_name(s.rule);
    switch (s.rule) {
      case OneWayRule::kR1:
      case OneWayRule::kR2:
        out << " v=" << s.v + 1 << " X=";
        write_ids(out, s.component);
        break;
      case OneWayRule::kR3:
        out << " a=" << s.a + 1 << " b=" << s.b + 1 << " c=" << s.c + 1;
        break;
      case OneWayRule::kR4:
        out << " x=" << s.x + 1 << " y=" << s.y + 1 << " X=";
        write_ids(out, s.component);
        break;
    }
    out << " removed=";
    write_ids(out, s.removed);
    out << " marked=";
    write_ids(out, s.marked);
    out << " k_delta=" << s.k_delta << '\n';
  }
  out << "final k=" << trace.final_k << " vertices=";
  write_ids(out, trace.final_graph.vertices());
  out << " S=";
  write_ids(out, trace.marked);
  out << '\n';
}

std::string format_trace(const ReductionTrace& trace) {
  std::ostringstream out;
  write_trace(out, trace);
  return out.str();
}

namespace {

// Edges of g touching `removed` whose endpoints are both colored and differ.
std::int64_t newly_cut(const Graph& g, const VertexList& removed, const Assignment& a) {
  const VertexMask in_removed(g.id_bound(), removed);
  std::int64_t cut = 0;
  for (VertexId v : removed) {
    for (VertexId w : g.neighbors(v)) {
      if (in_removed[w] && w < v) continue;
      if (a.contains(w) && a.at(w) != a.at(v)) ++cut;
    }
  }
  return cut;
}

// Colored neighbors of `vs` (outside `vs`) by color: {red, blue}.
std::pair<std::int64_t, std::int64_t> colored_neighbor_counts(const Graph& g, std::span<const VertexId> vs,
                                                              const Assignment& a) {
  std::int64_t red = 0;
  std::int64_t blue = 0;
  for (VertexId v : vs) {
    for (VertexId w : g.neighbors(v)) {
      if (!a.contains(w)) continue;
      (a.at(w) == Color::kRed ? red : blue) += 1;
    }
  }
  return {red, blue};
}

void color_prefix_opposite(Assignment& a, const VertexList& ordered, std::size_t count, Color anchor) {
  for (std::size_t j = 0; j < ordered.size(); ++j) a.set(ordered[j], j < count ? opposite(anchor) : anchor);
}

void undo_step(const Graph& g, const RuleApplication& s, Assignment& a) {
  switch (s.rule) {
    case OneWayRule::kR1: {
      const VertexList& xs = s.component;
      color_prefix_opposite(a, xs, (xs.size() + 1) / 2, a.at(s.v));
      break;
    }
    case OneWayRule::kR2: {
      VertexList ordered;
      for (VertexId x : s.component) {
        if (g.adjacent(x, s.v)) ordered.push_back(x);
      }
      for (VertexId x : s.component) {
        if (!g.adjacent(x, s.v)) ordered.push_back(x);
      }
      color_prefix_opposite(a, ordered, (ordered.size() + 1) / 2, a.at(s.v));
      break;
    }
    case OneWayRule::kR3: {
      // Ends red / middle blue, or the reverse; pick whichever cuts more of
      // the edges into the colored remainder.
      const VertexId ends[] = {s.a, s.c};
      const VertexId middle[] = {s.b};
      const auto [end_red, end_blue] = colored_neighbor_counts(g, ends, a);
      const auto [mid_red, mid_blue] = colored_neighbor_counts(g, middle, a);
      const std::int64_t cut_plain = end_blue + mid_red;
      const std::int64_t cut_reversed = end_red + mid_blue;
      const Color end_color = cut_plain >= cut_reversed ? Color::kRed : Color::kBlue;
      a.set(s.a, end_color);
      a.set(s.c, end_color);
      a.set(s.b, opposite(end_color));
      break;
    }
    case OneWayRule::kR4: {
      const VertexId pair[] = {s.x, s.y};
      const auto [red, blue] = colored_neighbor_counts(g, pair, a);
      const Color pair_color = blue >= red ? Color::kRed : Color::kBlue;
      a.set(s.x, pair_color);
      a.set(s.y, pair_color);
      const std::size_t n = s.component.size();
      const std::size_t flipped = n % 2 == 1 ? (n + 1) / 2 : n / 2 + 1;
      color_prefix_opposite(a, s.component, flipped, pair_color);
      break;
    }
  }
}

}  // namespace

Assignment extend_assignment(const ReductionTrace& trace, const Assignment& base,
                             std::vector<ExtensionStepAudit>* audit) {
  if (!base.has_domain(trace.final_graph.vertices())) {
    throw PreconditionError("extend_assignment: base assignment must cover exactly the final graph");
  }
  Assignment a = base;
  const Graph& g = trace.initial;
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    undo_step(g, *it, a);
    ExtensionStepAudit rec{it->rule, newly_cut(g, it->removed, a), it->removed_edges, it->removed_vertices,
                           it->k_delta};
    if (audit) audit->push_back(rec);
    if (!rec.meets_gain_bound()) {
      throw InvariantViolation("extend_assignment: " + std::string(rule_name(it->rule)) +
                               " step cut fewer edges than guaranteed");
    }
  }
  return a;
}

FindSResult find_separator(const Graph& g, std::int64_t k) {
  if (k < 0) throw PreconditionError("find_separator: k must be non-negative");
  ReductionTrace trace = reduce_exhaustively(g, k);
  if (static_cast<std::int64_t>(trace.marked.size()) > 3 * (k - trace.final_k)) {
    throw InvariantViolation("find_separator: more than three vertices marked per unit of k");
  }
  if (trace.final_k <= 0) {
    Assignment base;
    for (VertexId v : trace.final_graph.vertices()) base.set(v, Color::kRed);
    Assignment witness = extend_assignment(trace, base);
    return DecidedYes{std::move(witness), std::move(trace)};
  }
  VertexList separator = trace.marked;
  return SeparatorFound{std::move(separator), std::move(trace)};
}

}  // namespace aee
