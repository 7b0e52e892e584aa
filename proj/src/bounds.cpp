#include "maxcut_aee/bounds.hpp"

#include <cmath>

#include "maxcut_aee/blocks.hpp"
#include "maxcut_aee/errors.hpp"

namespace aee {

std::int64_t edwards_erdos_quarters(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("edwards_erdos_quarters: graph is disconnected");
  return 2 * static_cast<std::int64_t>(g.size()) + static_cast<std::int64_t>(g.order()) - 1;
}

QuarterTarget threshold_quarters(const Graph& g, std::int64_t k) {
  if (!is_connected(g)) throw PreconditionError("threshold_quarters: graph is disconnected");
  return {2 * static_cast<std::int64_t>(g.size()) + static_cast<std::int64_t>(g.order()) - 1 + k};
}

std::int64_t isqrt(std::int64_t x) {
  if (x < 0) throw PreconditionError("isqrt of negative value");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

EighthUnits bollobas_scott_bound(std::int64_t edge_count) {
  if (edge_count < 0) throw PreconditionError("negative edge count");
  const std::int64_t disc = 8 * edge_count + 1;
  const std::int64_t root = isqrt(disc);
  return {4 * edge_count + root - 1, root * root == disc};
}

}  // namespace aee
