#pragma once

#include <cstdint>
#include <optional>

#include "maxcut_aee/bounds.hpp"
#include "maxcut_aee/graph.hpp"
#include "maxcut_aee/mcwwv.hpp"

namespace aee {

enum class Answer { kNo, kYes };

/// One coloring of the separator S turned into a weighted instance on G - S.
/// w0(x) counts blue S-neighbours of x, w1(x) red ones, so coloring x red
/// (0) cuts exactly its w0 edges into S.
struct ColoringBranch {
  std::uint64_t mask = 0;  // bit i = color of the i-th smallest vertex of S
  Assignment coloring;
  std::int64_t inner_cut = 0;  // cut edges with both ends in S
  WeightedInstance instance;
};

/// Throws PreconditionError if the coloring's domain is not exactly S.
ColoringBranch build_branch(const Graph& g, const VertexList& separator, const Assignment& coloring);

/// Quarter-unit target left for the weighted instance of a branch.
inline std::int64_t branch_target_quarters(const QuarterTarget& t, const ColoringBranch& b) {
  return t.quarters - 4 * b.inner_cut;
}

struct SolveOutcome {
  Answer answer = Answer::kNo;
  QuarterTarget threshold;
  // Exact maximum cut; absent when the one-way reductions already decided yes.
  std::optional<std::int64_t> best_cut;
  Assignment witness;
  std::uint64_t branches_evaluated = 0;
  std::size_t separator_size = 0;
};

struct SolveOptions {
  unsigned threads = 1;
};

/// Decides whether g has a cut of size >= m/2 + (n-1)/4 + k/4 (k in
/// quarter-units) and returns a witness. When the reductions do not settle
/// the question, all 2^|S| colorings of the separator are tried and the
/// exact maximum cut is reported.
SolveOutcome solve_aee(const Graph& g, std::int64_t k, const SolveOptions& opts = {});

/// Same question with k counted in whole extra edges above the bound.
SolveOutcome solve_aee_whole(const Graph& g, std::int64_t k_edges, const SolveOptions& opts = {});

/// Rewrites "is there a cut of size >= cut_size" as an above-bound query.
struct ConvertedParameter {
  std::int64_t k_quarters = 0;
  bool always_yes = false;  // k_quarters < 0: the bound alone answers yes
};
ConvertedParameter convert_maxcut_param(const Graph& g, std::int64_t cut_size);

/// Max-Cut decision through the converted parameter.
bool has_cut_of_size(const Graph& g, std::int64_t cut_size, const SolveOptions& opts = {});

}  // namespace aee
