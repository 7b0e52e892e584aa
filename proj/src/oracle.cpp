#include "maxcut_aee/oracle.hpp"

#include <bit>

#include "maxcut_aee/errors.hpp"

namespace aee {

namespace {

// Adjacency rows as bitmasks over positions in `vs`.
std::vector<std::uint32_t> adjacency_rows(const Graph& g, const VertexList& vs) {
  std::vector<std::int32_t> pos(static_cast<std::size_t>(g.id_bound()), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) pos[static_cast<std::size_t>(vs[i])] = static_cast<std::int32_t>(i);
  std::vector<std::uint32_t> rows(vs.size(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (VertexId w : g.neighbors(vs[i])) rows[i] |= std::uint32_t{1} << pos[static_cast<std::size_t>(w)];
  }
  return rows;
}

std::int64_t masked_cut(const std::vector<std::uint32_t>& rows, std::uint32_t colors) {
  std::int64_t twice = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::uint32_t other = (colors >> i) & 1U ? ~colors : colors;
    twice += std::popcount(rows[i] & other);
  }
  return twice / 2;
}

}  // namespace

OracleCut oracle_max_cut(const Graph& g) {
  if (g.order() > 26) throw PreconditionError("oracle_max_cut: at most 26 vertices");
  const VertexList vs = g.vertices();
  OracleCut best;
  if (vs.empty()) return best;
  const std::vector<std::uint32_t> rows = adjacency_rows(g, vs);
  const std::uint32_t count = std::uint32_t{1} << (vs.size() - 1);
  std::uint32_t best_mask = 0;
  best.value = -1;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    const std::int64_t c = masked_cut(rows, mask << 1);
    if (c > best.value) {
      best.value = c;
      best_mask = mask;
    }
  }
  const std::uint32_t colors = best_mask << 1;
  for (std::size_t i = 0; i < vs.size(); ++i) best.witness.set(vs[i], color_from_int(static_cast<int>((colors >> i) & 1U)));
  return best;
}

std::int64_t mcwwv_value(const WeightedInstance& inst, const Assignment& a) {
  std::int64_t value = cut_value(inst.graph, a);
  for (VertexId v : inst.graph.vertices()) {
    const auto i = static_cast<std::size_t>(v);
    value += a.at(v) == Color::kBlue ? inst.w1.at(i) : inst.w0.at(i);
  }
  return value;
}

std::int64_t oracle_mcwwv(const WeightedInstance& inst) {
  if (inst.graph.order() > 20) throw PreconditionError("oracle_mcwwv: at most 20 vertices");
  const VertexList vs = inst.graph.vertices();
  const auto bound = static_cast<std::size_t>(inst.graph.id_bound());
  if (inst.w0.size() < bound || inst.w1.size() < bound) throw PreconditionError("oracle_mcwwv: missing weights");
  const std::vector<std::uint32_t> rows = adjacency_rows(inst.graph, vs);
  std::int64_t best = 0;
  const std::uint32_t count = std::uint32_t{1} << vs.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    std::int64_t value = masked_cut(rows, mask);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const auto v = static_cast<std::size_t>(vs[i]);
      value += (mask >> i) & 1U ? inst.w1[v] : inst.w0[v];
    }
    if (mask == 0 || value > best) best = value;
  }
  return best;
}

}  // namespace aee
