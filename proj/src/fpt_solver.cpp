#include "maxcut_aee/fpt_solver.hpp"

#include <algorithm>
#include <thread>
#include <variant>

#include "maxcut_aee/blocks.hpp"
#include "maxcut_aee/errors.hpp"
#include "maxcut_aee/reduction.hpp"

namespace aee {

namespace {

constexpr std::size_t kMaxSeparator = 40;

// Weights and inner cut for the coloring encoded by `mask`. `colors` is
// scratch indexed by vertex id (-1 outside S).
struct BranchWeights {
  const Graph& g;
  const VertexList& separator;
  std::vector<std::int8_t> colors;

  BranchWeights(const Graph& graph, const VertexList& sep)
      : g(graph), separator(sep), colors(static_cast<std::size_t>(graph.id_bound()), -1) {}

  std::int64_t fill(std::uint64_t mask, std::vector<std::int64_t>& w0, std::vector<std::int64_t>& w1) {
    for (std::size_t i = 0; i < separator.size(); ++i) {
      colors[static_cast<std::size_t>(separator[i])] = static_cast<std::int8_t>((mask >> i) & 1U);
    }
    std::fill(w0.begin(), w0.end(), 0);
    std::fill(w1.begin(), w1.end(), 0);
    std::int64_t inner = 0;
    for (VertexId s : separator) {
      const std::int8_t cs = colors[static_cast<std::size_t>(s)];
      for (VertexId x : g.neighbors(s)) {
        const std::int8_t cx = colors[static_cast<std::size_t>(x)];
        if (cx >= 0) {
          if (s < x && cx != cs) ++inner;
        } else if (cs == 1) {
          ++w0[static_cast<std::size_t>(x)];
        } else {
          ++w1[static_cast<std::size_t>(x)];
        }
      }
    }
    return inner;
  }
};

struct BranchBest {
  std::int64_t value = -1;
  std::uint64_t mask = 0;

  void offer(std::int64_t v, std::uint64_t m) {
    if (v > value || (v == value && m < mask)) {
      value = v;
      mask = m;
    }
  }
};

BranchBest search_range(const Graph& g, const VertexList& sep, const CliqueForestSolver& solver,
                        std::uint64_t begin, std::uint64_t end) {
  BranchWeights bw(g, sep);
  const auto bound = static_cast<std::size_t>(g.id_bound());
  std::vector<std::int64_t> w0(bound), w1(bound);
  BranchBest best;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    const std::int64_t inner = bw.fill(mask, w0, w1);
    best.offer(inner + solver.max_value(w0, w1), mask);
  }
  return best;
}

Assignment mask_coloring(const VertexList& sep, std::uint64_t mask) {
  Assignment a;
  for (std::size_t i = 0; i < sep.size(); ++i) a.set(sep[i], color_from_int(static_cast<int>((mask >> i) & 1U)));
  return a;
}

}  // namespace

ColoringBranch build_branch(const Graph& g, const VertexList& separator, const Assignment& coloring) {
  if (!coloring.has_domain(separator)) throw PreconditionError("build_branch: coloring domain must equal S");
  if (separator.size() > 63) throw PreconditionError("build_branch: separator too large for a bitmask");
  ColoringBranch b;
  for (std::size_t i = 0; i < separator.size(); ++i) {
    if (coloring.at(separator[i]) == Color::kBlue) b.mask |= std::uint64_t{1} << i;
  }
  b.coloring = coloring;
  b.instance = WeightedInstance::unweighted(g.without(separator));
  BranchWeights bw(g, separator);
  b.inner_cut = bw.fill(b.mask, b.instance.w0, b.instance.w1);
  return b;
}

SolveOutcome solve_aee(const Graph& g, std::int64_t k, const SolveOptions& opts) {
  if (k < 0) throw PreconditionError("solve_aee: k must be non-negative");
  if (!is_connected(g)) throw PreconditionError("solve_aee: graph is disconnected");
  SolveOutcome out;
  out.threshold = threshold_quarters(g, k);

  FindSResult found = find_separator(g, k);
  if (auto* yes = std::get_if<DecidedYes>(&found)) {
    out.answer = Answer::kYes;
    out.witness = std::move(yes->witness);
    out.separator_size = yes->trace.marked.size();
    return out;
  }
  const VertexList& sep = std::get<SeparatorFound>(found).separator;
  if (sep.size() > kMaxSeparator) throw PreconditionError("solve_aee: separator too large to branch over");
  out.separator_size = sep.size();

  const CliqueForestSolver solver(g.without(sep));
  const std::uint64_t total = std::uint64_t{1} << sep.size();
  const unsigned threads = static_cast<unsigned>(std::clamp<std::uint64_t>(opts.threads, 1, total));
  BranchBest best;
  if (threads == 1) {
    best = search_range(g, sep, solver, 0, total);
  } else {
    std::vector<BranchBest> partial(threads);
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = total * t / threads;
      const std::uint64_t hi = total * (t + 1) / threads;
      workers.emplace_back([&, t, lo, hi] { partial[t] = search_range(g, sep, solver, lo, hi); });
    }
    workers.clear();
    for (const BranchBest& p : partial) best.offer(p.value, p.mask);
  }
  out.branches_evaluated = total;

  // Rebuild the winning branch's full assignment.
  BranchWeights bw(g, sep);
  const auto bound = static_cast<std::size_t>(g.id_bound());
  std::vector<std::int64_t> w0(bound), w1(bound);
  const std::int64_t inner = bw.fill(best.mask, w0, w1);
  McwwvSolution sol = solver.solve(w0, w1);
  if (inner + sol.value != best.value) throw InvariantViolation("solve_aee: best branch not reproducible");
  Assignment witness = sol.witness;
  const Assignment sep_colors = mask_coloring(sep, best.mask);
  for (VertexId s : sep) witness.set(s, sep_colors.at(s));

  out.best_cut = best.value;
  out.answer = out.threshold.met_by(best.value) ? Answer::kYes : Answer::kNo;
  out.witness = std::move(witness);
  return out;
}

SolveOutcome solve_aee_whole(const Graph& g, std::int64_t k_edges, const SolveOptions& opts) {
  return solve_aee(g, 4 * k_edges, opts);
}

ConvertedParameter convert_maxcut_param(const Graph& g, std::int64_t cut_size) {
  if (!is_connected(g)) throw PreconditionError("convert_maxcut_param: graph is disconnected");
  const std::int64_t kq =
      4 * cut_size - 2 * static_cast<std::int64_t>(g.size()) - static_cast<std::int64_t>(g.order()) + 1;
  return {kq, kq < 0};
}

bool has_cut_of_size(const Graph& g, std::int64_t cut_size, const SolveOptions& opts) {
  const ConvertedParameter p = convert_maxcut_param(g, cut_size);
  if (p.always_yes) return true;
  return solve_aee(g, p.k_quarters, opts).answer == Answer::kYes;
}

}  // namespace aee
