#pragma once

#include <cstdint>

#include "maxcut_aee/graph.hpp"

namespace aee {

/// Decision target m/2 + (n-1)/4 + k/4 scaled by four: 2m + n - 1 + k.
struct QuarterTarget {
  std::int64_t quarters = 0;

  bool met_by(std::int64_t cut) const { return 4 * cut >= quarters; }
  friend bool operator==(const QuarterTarget&, const QuarterTarget&) = default;
};

/// Target for the instance (g, k). Throws PreconditionError if g is disconnected.
QuarterTarget threshold_quarters(const Graph& g, std::int64_t k);

/// 2m + n - 1, i.e. four times the Edwards-Erdos lower bound. Connected g only.
std::int64_t edwards_erdos_quarters(const Graph& g);

// m/2 + (sqrt(8m+1) - 1)/8 in eighth-units; floored unless 8m+1 is a square.
struct EighthUnits {
  std::int64_t eighths = 0;
  bool exact = false;
};
EighthUnits bollobas_scott_bound(std::int64_t edge_count);

std::int64_t isqrt(std::int64_t x);

}  // namespace aee
