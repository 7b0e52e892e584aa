#pragma once

#include <cstdint>

#include "maxcut_aee/graph.hpp"
#include "maxcut_aee/mcwwv.hpp"

namespace aee {

/// Exhaustive maximum cut. Requires at most 26 vertices.
struct OracleCut {
  std::int64_t value = 0;
  Assignment witness;
};

/// The smallest vertex is fixed red; among maximizers the witness with the
/// smallest bitmask over the remaining vertices (ascending id) wins.
OracleCut oracle_max_cut(const Graph& g);

/// Exhaustive weighted optimum over all 2^n assignments. Requires n <= 20.
std::int64_t oracle_mcwwv(const WeightedInstance& inst);

/// Weighted objective: cut edges plus w1 of blue and w0 of red vertices.
std::int64_t mcwwv_value(const WeightedInstance& inst, const Assignment& a);

}  // namespace aee
