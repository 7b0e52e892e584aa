#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "maxcut_aee/blocks.hpp"
#include "maxcut_aee/bounds.hpp"
#include "maxcut_aee/errors.hpp"
#include "maxcut_aee/fpt_solver.hpp"
#include "maxcut_aee/generators.hpp"
#include "maxcut_aee/graph_io.hpp"
#include "maxcut_aee/kernel.hpp"
#include "maxcut_aee/oracle.hpp"
#include "test_support.hpp"

namespace aee {
namespace {

using namespace aee::testing;

bool oracle_yes(const Graph& g, std::int64_t k) {
  return 4 * oracle_max_cut(g).value >= 2 * static_cast<std::int64_t>(g.size()) +
                                            static_cast<std::int64_t>(g.order()) - 1 + k;
}

// s=0, x=1, u1=2, u2=3.
Graph pendant_triangle() { return make_graph(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}); }

// s=0, a=1, p=2, q=3, z=4, r=5, t=6, b=7: G-S is the chain of blocks
// {a,p}, {p,q,z}, {z,r,t}, {t,b}, and s closes it into a cycle.
Graph triangle_chain() {
  return make_graph(8, {{0, 1}, {0, 7}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 6}, {6, 7}});
}

TEST(FindKernelRule, PendantTriangleIsRuleOne) {
  const auto app = find_kernel_rule(pendant_triangle(), {0});
  ASSERT_TRUE(app);
  EXPECT_EQ(app->rule, KernelRule::kK1);
  EXPECT_EQ(app->x, 1);
  EXPECT_EQ(app->block, (VertexList{2, 3}));
  EXPECT_EQ(app->k_delta, 0);

  const KernelInstance r = apply_kernel_rule(pendant_triangle(), 1, {0}, *app);
  EXPECT_EQ(r.k, 1);
  EXPECT_EQ(r.graph.vertices(), (VertexList{0, 1}));
  for (std::int64_t k = -2; k <= 4; ++k) {
    EXPECT_EQ(oracle_yes(pendant_triangle(), k), oracle_yes(r.graph, k + app->k_delta));
    EXPECT_EQ(oracle_yes(r.graph, k), k <= 1);
  }
}

TEST(FindKernelRule, BowtieIsCaughtByRuleOneFirst) {
  // Each triangle hangs off z with no separator neighbours, so K1 fires.
  const auto first = find_kernel_rule(bowtie(), {});
  ASSERT_TRUE(first);
  EXPECT_EQ(first->rule, KernelRule::kK1);
  EXPECT_EQ(first->x, 2);
  EXPECT_EQ(first->block, (VertexList{0, 1}));

  const auto k3 = find_kernel_rule(bowtie(), {}, KernelRule::kK3);
  ASSERT_TRUE(k3);
  EXPECT_EQ(k3->z, 2);
  EXPECT_EQ(k3->x, 0);
  EXPECT_EQ(k3->y, 3);
  EXPECT_EQ(k3->removed, (VertexList{1, 4}));
  EXPECT_EQ(k3->added, (VertexList{5, 6}));
  const KernelInstance r = apply_kernel_rule(bowtie(), 0, {}, *k3);
  EXPECT_EQ(r.graph.vertices(), (VertexList{0, 2, 3, 5, 6}));
  EXPECT_EQ(r.graph.size(), 10u);
  for (std::int64_t k = -2; k <= 3; ++k) {
    EXPECT_EQ(oracle_yes(bowtie(), k), k <= 0);
    EXPECT_EQ(oracle_yes(r.graph, k), k <= 0);
  }
}

TEST(FindKernelRule, TriangleWithoutSeparator) {
  const auto app = find_kernel_rule(complete_graph(3), {});
  ASSERT_TRUE(app);
  EXPECT_EQ(app->rule, KernelRule::kK1);
  const KernelInstance r = apply_kernel_rule(complete_graph(3), 1, {}, *app);
  EXPECT_EQ(r.graph.order(), 1u);
  EXPECT_EQ(r.k, 1);
  EXPECT_EQ(oracle_yes(complete_graph(3), 1), oracle_yes(r.graph, 1));
}

TEST(FindKernelRule, RuleTwo) {
  for (bool x_sees_s : {false, true}) {
    Graph g = make_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    if (x_sees_s) g.add_edge(0, 1);
    const auto app = find_kernel_rule(g, {0});
    ASSERT_TRUE(app);
    EXPECT_EQ(app->rule, KernelRule::kK2);
    EXPECT_EQ(app->s, 0);
    EXPECT_EQ(app->x, 1);
    EXPECT_EQ(app->removed, (VertexList{3}));
    EXPECT_EQ(app->k_delta, -1);
    const KernelInstance r = apply_kernel_rule(g, 4, {0}, *app);
    EXPECT_EQ(r.k, 3);
    EXPECT_EQ(r.graph.order(), 3u);
    for (std::int64_t k = 0; k <= 6; ++k) EXPECT_EQ(oracle_yes(g, k), oracle_yes(r.graph, k - 1));
  }
}

TEST(FindKernelRule, RuleThreeOnTriangleChain) {
  const auto app = find_kernel_rule(triangle_chain(), {0});
  ASSERT_TRUE(app);
  EXPECT_EQ(app->rule, KernelRule::kK3);
  EXPECT_EQ(app->x, 2);
  EXPECT_EQ(app->y, 6);
  EXPECT_EQ(app->z, 4);
  EXPECT_EQ(app->removed, (VertexList{3, 5}));
  EXPECT_EQ(app->added, (VertexList{8, 9}));
  const KernelInstance r = apply_kernel_rule(triangle_chain(), 3, {0}, *app);
  EXPECT_TRUE(r.graph.is_clique(std::vector<VertexId>{2, 4, 6, 8, 9}));
  EXPECT_EQ(r.graph.order(), triangle_chain().order());
  for (std::int64_t k = 0; k <= 6; ++k) EXPECT_EQ(oracle_yes(triangle_chain(), k), oracle_yes(r.graph, k));
}

TEST(FindKernelRule, RuleFour) {
  // S = {0, 1} sees all of a K5 on 2..6; every private vertex has the same
  // S-neighbourhood, so K2 never fits.
  const VertexList s{0, 1};
  Graph h(7);
  for (VertexId v = 2; v < 7; ++v) {
    h.add_edge(0, v);
    h.add_edge(1, v);
    for (VertexId w = v + 1; w < 7; ++w) h.add_edge(v, w);
  }
  const auto app = find_kernel_rule(h, s);
  ASSERT_TRUE(app);
  EXPECT_EQ(app->rule, KernelRule::kK4);
  EXPECT_EQ(app->removed, (VertexList{2, 3}));
  const KernelInstance r = apply_kernel_rule(h, 3, s, *app);
  EXPECT_EQ(r.graph.order(), 5u);
  for (std::int64_t k = 0; k <= 6; ++k) EXPECT_EQ(oracle_yes(h, k), oracle_yes(r.graph, k));
}

TEST(FindKernelRule, RejectsBadStructure) {
  EXPECT_THROW(find_kernel_rule(cycle_graph(4), {}), PreconditionError);
  EXPECT_THROW(find_kernel_rule(Graph(2), {}), PreconditionError);
  const auto app = find_kernel_rule(pendant_triangle(), {0});
  Graph changed = pendant_triangle();
  changed.add_edge(0, 2);
  EXPECT_THROW(apply_kernel_rule(changed, 1, {0}, *app), StaleApplicationError);
}

TEST(Thresholds, FormulaExamples) {
  KernelStatistics st;
  st.separator_size = 2;
  st.k = 3;
  st.leaf_blocks = 26;
  EXPECT_EQ(evaluate_thresholds(st), DecisionReason::kLeafBlocks);
  st.leaf_blocks = 23;
  EXPECT_EQ(evaluate_thresholds(st), std::nullopt);
  st.leaf_blocks = 5;
  st.block_count = 48;
  EXPECT_EQ(evaluate_thresholds(st), DecisionReason::kBlockCount);
  st.block_count = 38;
  st.joints = 4;
  // 16 + 20 + (5 + 0) * 2 - 10 - 4 - 6 = 26
  st.largest_private = 26;
  EXPECT_EQ(evaluate_thresholds(st), DecisionReason::kBlockSize);
  st.largest_private = 25;
  EXPECT_EQ(evaluate_thresholds(st), std::nullopt);
  st.vertex_count = kernel_vertex_bound(3) + 1;
  EXPECT_EQ(evaluate_thresholds(st), DecisionReason::kTotalSize);
  EXPECT_EQ(kernel_vertex_bound(1), 27267);
}

TEST(Thresholds, DecideRequiresReducedInstance) {
  EXPECT_THROW(threshold_decide(path_graph(3), {}, 3), PreconditionError);
  const Graph two_s = make_graph(5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {1, 4}});
  EXPECT_THROW(threshold_decide(two_s, {0, 4}, 3), PreconditionError);
  EXPECT_THROW(threshold_decide(cycle_graph(4), {0, 1}, 2), PreconditionError);
  EXPECT_EQ(threshold_decide(cycle_graph(4), {0, 1, 3}, 3), std::nullopt);
}

TEST(Kernelize, Examples) {
  const KernelOutcome p3 = kernelize(path_graph(3), 3);
  ASSERT_TRUE(p3.decided());
  EXPECT_EQ(std::get<KernelDecision>(p3.result).answer, Answer::kNo);
  EXPECT_EQ(std::get<KernelDecision>(p3.result).reason, DecisionReason::kSolvedDirectly);

  // C4 keeps a three-vertex separator, so the outcome is a kernel whose
  // answer is still yes.
  const KernelOutcome c4 = kernelize(cycle_graph(4), 3);
  ASSERT_FALSE(c4.decided());
  const Kernel& kern = std::get<Kernel>(c4.result);
  EXPECT_EQ(solve_aee(kern.graph, kern.k).answer, Answer::kYes);
  EXPECT_TRUE(oracle_yes(cycle_graph(4), 3));

  const KernelOutcome small = kernelize(cycle_graph(4), 1);
  ASSERT_TRUE(small.decided());
  EXPECT_EQ(std::get<KernelDecision>(small.result).answer, Answer::kYes);

  EXPECT_THROW(kernelize(path_graph(3), -1), PreconditionError);
  EXPECT_THROW(kernelize(Graph(2), 3), PreconditionError);

  Rng rng(41);
  for (int t = 0; t < 5; ++t) {
    const Graph g = gen_connected(40, 0.05 + 0.1 * rng.unit(), rng.raw());
    const KernelOutcome out = kernelize(g, 3);
    const Answer direct = solve_aee(g, 3).answer;
    if (const auto* d = std::get_if<KernelDecision>(&out.result)) {
      EXPECT_EQ(d->answer, direct);
    } else {
      const Kernel& k = std::get<Kernel>(out.result);
      EXPECT_EQ(k.k <= 0 ? Answer::kYes : solve_aee(k.graph, k.k).answer, direct);
    }
  }
}

TEST(Kernelize, KernelFileRoundTrip) {
  const KernelOutcome c4 = kernelize(cycle_graph(4), 3);
  const Kernel& k = std::get<Kernel>(c4.result);
  std::stringstream io;
  write_kernel(io, k.graph, k.k, k.separator);
  const KernelFile f = read_kernel(io);
  EXPECT_EQ(f.k, 3);
  EXPECT_EQ(f.separator.size(), k.separator.size());
  EXPECT_EQ(f.graph.size(), k.graph.size());
}

// Random clique-forest with one to three separator vertices attached.
struct SeparatedInstance {
  Graph graph;
  VertexList separator;
};

SeparatedInstance random_separated(Rng& rng) {
  for (;;) {
    const Graph forest = gen_clique_forest(static_cast<int>(rng.between(1, 5)), static_cast<int>(rng.between(2, 4)), rng.raw());
    const auto s = static_cast<VertexId>(rng.between(1, 3));
    if (forest.order() + static_cast<std::size_t>(s) > 12) continue;
    Graph g(forest.id_bound() + s);
    for (const Edge& e : forest.edges()) g.add_edge(e.u, e.v);
    VertexList sep;
    for (VertexId i = 0; i < s; ++i) {
      const VertexId sv = forest.id_bound() + i;
      sep.push_back(sv);
      for (VertexId v = 0; v < sv; ++v) {
        if (rng.unit() < 0.3) g.add_edge(v, sv);
      }
    }
    if (is_connected(g)) return {std::move(g), std::move(sep)};
  }
}

TEST(KernelRules, EachApplicationPreservesTheAnswer) {
  Rng rng(42);
  std::map<KernelRule, int> seen;
  for (int t = 0; t < 300; ++t) {
    SeparatedInstance inst = random_separated(rng);
    Graph g = inst.graph;
    std::int64_t k = rng.between(3, 5);
    while (auto app = find_kernel_rule(g, inst.separator)) {
      const KernelInstance next = apply_kernel_rule(g, k, inst.separator, *app);
      ++seen[app->rule];
      ASSERT_EQ(oracle_yes(g, k), oracle_yes(next.graph, next.k))
          << kernel_rule_name(app->rule) << "\n" << format_graph(g);
      ASSERT_TRUE(is_connected(next.graph));
      ASSERT_TRUE(is_clique_forest(next.graph.without(inst.separator)));
      const auto before = std::make_pair(g.order(), blocks(g.without(inst.separator)).block_count());
      const auto after = std::make_pair(next.graph.order(), blocks(next.graph.without(inst.separator)).block_count());
      EXPECT_LT(after, before);
      g = next.graph;
      k = next.k;
    }
  }
  for (KernelRule r : {KernelRule::kK1, KernelRule::kK2, KernelRule::kK3, KernelRule::kK4}) {
    EXPECT_GT(seen[r], 0) << kernel_rule_name(r);
  }
}

TEST(Kernelize, EndToEndMatchesSolver) {
  Rng rng(43);
  for (int t = 0; t < 150; ++t) {
    const Graph g = gen_connected(static_cast<VertexId>(rng.between(2, 12)), rng.unit() * 0.6, rng.raw());
    const std::int64_t k = rng.between(3, 5);
    const KernelOutcome out = kernelize(g, k);
    const Answer direct = solve_aee(g, k).answer;
    if (const auto* d = std::get_if<KernelDecision>(&out.result)) {
      EXPECT_EQ(d->answer, direct);
      continue;
    }
    const Kernel& kern = std::get<Kernel>(out.result);
    EXPECT_LE(kern.k, k);
    EXPECT_LE(static_cast<std::int64_t>(kern.graph.order()), kernel_vertex_bound(k));
    EXPECT_TRUE(is_connected(kern.graph));
    EXPECT_TRUE(is_clique_forest(kern.graph.without(kern.separator)));
    EXPECT_EQ(kern.k <= 0 ? Answer::kYes : solve_aee(kern.graph, kern.k).answer, direct);
  }
}

}  // namespace
}  // namespace aee
