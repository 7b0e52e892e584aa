#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "maxcut_aee/fpt_solver.hpp"
#include "maxcut_aee/graph.hpp"

namespace aee {

// Two-way rules, applied with a fixed separator S such that G - S is a
// clique-forest. Each preserves the answer exactly.
//
//  K1  x, X: X a component of G-(S+x), |X| > 1, X+x a clique, X avoids S.
//      Remove X; k -= 1 if |X| odd.
//  K2  s, x, X: as K1 but X+s is also a clique and s is X's only S-neighbour.
//      Remove all but one vertex of X; k -= 1 if |X| even.
//  K3  odd blocks X, Y of G-S meeting in z, where only x, z (resp. y, z) have
//      neighbours outside the block. Replace X u Y by a K5 on x,y,z,u,v.
//  K4  more than (|A_i|+|J|+|S|)/2 private vertices of one block with equal
//      S-neighbourhoods. Remove two of them.
enum class KernelRule { kK1, kK2, kK3, kK4 };

std::string_view kernel_rule_name(KernelRule r);

struct KernelRuleApplication {
  KernelRule rule = KernelRule::kK1;
  VertexId x = kNoVertex;
  VertexId s = kNoVertex;  // K2
  VertexId y = kNoVertex;  // K3
  VertexId z = kNoVertex;  // K3
  VertexList block;        // K1/K2: X; K3: the block containing x
  VertexList other_block;  // K3: the block containing y
  std::size_t block_index = 0;  // K4: index into blocks(G - S)
  VertexList removed;
  VertexList added;  // K3: fresh ids u, v
  int k_delta = 0;

  friend bool operator==(const KernelRuleApplication&, const KernelRuleApplication&) = default;
};

/// First applicable rule in order K1..K4. Throws PreconditionError if g is
/// disconnected or g - S is not a clique-forest.
std::optional<KernelRuleApplication> find_kernel_rule(const Graph& g, const VertexList& separator);
std::optional<KernelRuleApplication> find_kernel_rule(const Graph& g, const VertexList& separator, KernelRule rule);

struct KernelInstance {
  Graph graph;
  std::int64_t k = 0;
};

/// Throws StaleApplicationError if `app` no longer matches g.
KernelInstance apply_kernel_rule(const Graph& g, std::int64_t k, const VertexList& separator,
                                 const KernelRuleApplication& app);

enum class DecisionReason {
  kOneWayReduction,  // the one-way reductions produced a witness
  kSolvedDirectly,   // |S| <= 1 or k < 3: answered by the branching solver
  kLeafBlocks,
  kBlockCount,
  kBlockSize,
  kTotalSize,
};

std::string_view reason_name(DecisionReason r);

/// Block statistics of G - S that the yes-thresholds are stated in.
struct KernelStatistics {
  std::int64_t separator_size = 0;  // |S|
  std::int64_t k = 0;
  std::int64_t leaf_blocks = 0;       // |L|
  std::int64_t block_count = 0;       // n*
  std::int64_t joints = 0;            // |J|
  std::int64_t largest_private = 0;   // max_i |A_i|
  std::int64_t vertex_count = 0;      // |V(G)|
};

KernelStatistics kernel_statistics(const Graph& g, const VertexList& separator, std::int64_t k);

/// 29160k^5 + 6480k^4 - 8532k^3 - 492k^2 + 731k - 80.
std::int64_t kernel_vertex_bound(std::int64_t k);

/// Pure threshold evaluation, in order LeafBlocks, BlockCount, BlockSize,
/// TotalSize.
std::optional<DecisionReason> evaluate_thresholds(const KernelStatistics& st);

/// Thresholds on a reduced instance. Requires |S| >= 2, k >= 3 and that no
/// kernel rule applies; throws PreconditionError otherwise.
std::optional<DecisionReason> threshold_decide(const Graph& g, const VertexList& separator, std::int64_t k);

struct KernelDecision {
  Answer answer = Answer::kYes;
  DecisionReason reason = DecisionReason::kOneWayReduction;
};

struct Kernel {
  Graph graph;
  std::int64_t k = 0;
  VertexList separator;
};

struct KernelOutcome {
  std::variant<KernelDecision, Kernel> result;
  // Everything needed to replay the two-way phase.
  VertexList separator;
  std::vector<KernelRuleApplication> applications;

  bool decided() const { return std::holds_alternative<KernelDecision>(result); }
};

/// Shrinks (g, k) to an equivalent instance with O(k^5) vertices or decides it.
KernelOutcome kernelize(const Graph& g, std::int64_t k);

}  // namespace aee
