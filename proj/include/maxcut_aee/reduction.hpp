#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "maxcut_aee/graph.hpp"

namespace aee {

// One-way reduction rules. Each removes vertices and lowers k; a yes-answer
// for the reduced instance implies a yes-answer for the original.
//
//  R1  v, X: X a component of G-v and X+v a clique.         k -= |X| odd
//  R2  v, X: X a component of G-v and X a clique.           k -= 2, mark v
//  R3  a-b-c induced path with G-{a,b,c} connected.         k -= 1, mark a,b,c
//  R4  x,y non-adjacent, G-{x,y} = X + Y, X+x, X+y cliques.  k -= 1, mark x,y
enum class OneWayRule { kR1, kR2, kR3, kR4 };

std::string_view rule_name(OneWayRule r);

struct RuleApplication {
  OneWayRule rule = OneWayRule::kR1;
  VertexList removed;
  VertexList marked;
  // R1/R2 use v; R3 uses a,b,c; R4 uses x,y. Unused anchors are kNoVertex.
  VertexId v = kNoVertex;
  VertexId a = kNoVertex;
  VertexId b = kNoVertex;
  VertexId c = kNoVertex;
  VertexId x = kNoVertex;
  VertexId y = kNoVertex;
  // R1/R2: the component removed; R4: the clique side X.
  VertexList component;
  int k_delta = 0;
  std::int64_t removed_edges = 0;
  std::int64_t removed_vertices = 0;

  friend bool operator==(const RuleApplication&, const RuleApplication&) = default;
};

/// First applicable application of one specific rule, in ascending-id
/// candidate order. For R2 the caller is responsible for having ruled out R1.
std::optional<RuleApplication> find_rule(const Graph& g, OneWayRule rule);

/// First applicable rule in order R1, R2, R3, R4. None iff g has no edges.
/// Throws PreconditionError on disconnected input.
std::optional<RuleApplication> find_next_rule(const Graph& g);

/// Applies `app` after re-checking it against g. Throws StaleApplicationError
/// if it no longer matches.
struct ReducedInstance {
  Graph graph;
  std::int64_t k = 0;
};
ReducedInstance apply_rule(const Graph& g, std::int64_t k, const RuleApplication& app);

struct ReductionTrace {
  Graph initial;
  std::int64_t initial_k = 0;
  std::vector<RuleApplication> steps;
  Graph final_graph;
  std::int64_t final_k = 0;
  VertexList marked;  // union of all marked sets (the separator S)
};

/// Applies rules until none applies. The final graph is a single vertex
/// (or empty when the input is empty).
ReductionTrace reduce_exhaustively(const Graph& g, std::int64_t k);

/// One line per step: rule name, anchors, removed ids, k_delta. Vertex ids
/// are printed 1-indexed to match the graph file format.
void write_trace(std::ostream& out, const ReductionTrace& trace);
std::string format_trace(const ReductionTrace& trace);

// Per-step record of how many removed-side edges the extension cut.
struct ExtensionStepAudit {
  OneWayRule rule = OneWayRule::kR1;
  std::int64_t newly_cut = 0;
  std::int64_t removed_edges = 0;
  std::int64_t removed_vertices = 0;
  int k_delta = 0;

  // 4q >= 2m' + n' + (k - k'), the gain each rule guarantees.
  bool meets_gain_bound() const { return 4 * newly_cut >= 2 * removed_edges + removed_vertices - k_delta; }
};

/// Lifts an assignment of trace.final_graph to trace.initial by undoing the
/// steps last-to-first, coloring each removed set so that it cuts at least
/// m'/2 + n'/4 + (k-k')/4 of the removed edges. Each step's gain is checked;
/// a shortfall throws InvariantViolation. Per-step records are appended to
/// `audit` when given.
Assignment extend_assignment(const ReductionTrace& trace, const Assignment& base,
                             std::vector<ExtensionStepAudit>* audit = nullptr);

struct DecidedYes {
  Assignment witness;
  ReductionTrace trace;
};
struct SeparatorFound {
  VertexList separator;
  ReductionTrace trace;
};
using FindSResult = std::variant<DecidedYes, SeparatorFound>;

/// Either a witness cut meeting the (g, k) target or a set S with
/// |S| <= 3k such that g - S is a clique-forest.
FindSResult find_separator(const Graph& g, std::int64_t k);

}  // namespace aee
