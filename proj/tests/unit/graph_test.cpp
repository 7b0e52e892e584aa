#include <gtest/gtest.h>

#include <sstream>

#include "maxcut_aee/blocks.hpp"
#include "maxcut_aee/bounds.hpp"
#include "maxcut_aee/errors.hpp"
#include "maxcut_aee/generators.hpp"
#include "maxcut_aee/graph.hpp"
#include "maxcut_aee/graph_io.hpp"
#include "maxcut_aee/oracle.hpp"
#include "test_support.hpp"

namespace aee {
namespace {

using namespace aee::testing;

TEST(Graph, RejectsLoopsAndDuplicates) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), PreconditionError);
  EXPECT_THROW(g.add_edge(2, 2), PreconditionError);
  EXPECT_THROW(g.add_edge(0, 7), PreconditionError);
}

TEST(Graph, AdjacencyStaysSymmetric) {
  Graph g = complete_graph(5);
  g.remove_vertex(2);
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.size(), 6u);
  for (VertexId u : g.vertices()) {
    for (VertexId w : g.neighbors(u)) EXPECT_TRUE(g.adjacent(w, u));
    EXPECT_FALSE(g.adjacent(u, 2));
  }
}

TEST(Graph, FreshIdsAreNeverReused) {
  Graph g = path_graph(3);
  g.remove_vertex(2);
  EXPECT_EQ(g.add_vertex(), 3);
  EXPECT_EQ(g.id_bound(), 4);
}

TEST(Graph, WithoutKeepsIds) {
  const Graph g = complete_graph(4);
  const VertexId drop[] = {1};
  const Graph h = g.without(drop);
  EXPECT_EQ(h.vertices(), (VertexList{0, 2, 3}));
  EXPECT_TRUE(h.adjacent(0, 3));
}

TEST(Connectivity, SmallCases) {
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_FALSE(is_connected(Graph(2)));
  EXPECT_TRUE(is_connected(Graph(0)));
  const Graph p = path_graph(3);
  const VertexId all[] = {0, 1, 2};
  EXPECT_TRUE(is_connected_excluding(p, all));
}

TEST(CutValue, Examples) {
  EXPECT_EQ(cut_value(complete_graph(5), coloring({0, 0, 1, 1, 1})), 6);
  EXPECT_EQ(cut_value(complete_graph(5), coloring({1, 1, 1, 1, 1})), 0);
  EXPECT_EQ(cut_value(path_graph(3), coloring({0, 1, 0})), 2);
  EXPECT_THROW(cut_value(path_graph(3), coloring({0, 1})), PreconditionError);
}

TEST(CutValue, InvariantUnderGlobalFlip) {
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const Graph g = gen_connected(static_cast<VertexId>(rng.between(1, 15)), rng.unit(), rng.raw());
    Assignment a;
    for (VertexId v : g.vertices()) a.set(v, color_from_int(static_cast<int>(rng.between(0, 1))));
    const std::int64_t before = cut_value(g, a);
    a.flip_all();
    EXPECT_EQ(cut_value(g, a), before);
  }
}

TEST(Bounds, Quarters) {
  EXPECT_EQ(threshold_quarters(complete_graph(5), 0).quarters, 24);
  EXPECT_EQ(threshold_quarters(Graph(1), 0).quarters, 0);
  EXPECT_EQ(threshold_quarters(path_graph(3), 2).quarters, 8);
  EXPECT_TRUE(threshold_quarters(path_graph(3), 2).met_by(2));
  EXPECT_FALSE(threshold_quarters(complete_graph(5), 1).met_by(6));
  EXPECT_EQ(edwards_erdos_quarters(complete_graph(5)), 24);
  EXPECT_THROW(threshold_quarters(Graph(2), 0), PreconditionError);
}

TEST(Bounds, BollobasScott) {
  EXPECT_EQ(bollobas_scott_bound(0).eighths, 0);
  EXPECT_TRUE(bollobas_scott_bound(0).exact);
  EXPECT_EQ(bollobas_scott_bound(3).eighths, 16);
  EXPECT_TRUE(bollobas_scott_bound(3).exact);
  // 8*2+1 = 17 is not a square: floor of 8 + sqrt(17) - 1.
  EXPECT_EQ(bollobas_scott_bound(2).eighths, 11);
  EXPECT_FALSE(bollobas_scott_bound(2).exact);
}

TEST(Bounds, EdwardsBoundNeverExceedsMaxCut) {
  Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    const Graph g = gen_connected(static_cast<VertexId>(rng.between(1, 12)), rng.unit(), rng.raw());
    EXPECT_LE(threshold_quarters(g, 0).quarters, 4 * oracle_max_cut(g).value);
  }
}

TEST(Blocks, Triangle) {
  const BlockDecomposition d = blocks(complete_graph(3));
  ASSERT_EQ(d.block_count(), 1u);
  EXPECT_EQ(d.blocks[0], (VertexList{0, 1, 2}));
  EXPECT_TRUE(d.cut_vertices.empty());
  EXPECT_EQ(d.leaf_blocks, (std::vector<std::size_t>{0}));
}

TEST(Blocks, Path) {
  const BlockDecomposition d = blocks(path_graph(3));
  EXPECT_EQ(d.blocks, (std::vector<VertexList>{{0, 1}, {1, 2}}));
  EXPECT_EQ(d.cut_vertices, (VertexList{1}));
  EXPECT_EQ(d.joints, (VertexList{1}));
  EXPECT_EQ(d.leaf_blocks, (std::vector<std::size_t>{0, 1}));
}

TEST(Blocks, Bowtie) {
  const BlockDecomposition d = blocks(bowtie());
  EXPECT_EQ(d.blocks, naive_blocks(bowtie()));
  EXPECT_EQ(d.block_count(), 2u);
  EXPECT_EQ(d.joints, (VertexList{2}));
  EXPECT_EQ(d.private_vertices, (std::vector<VertexList>{{0, 1}, {3, 4}}));
  EXPECT_EQ(d.leaf_blocks, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(d.branching_blocks.empty());
}

TEST(Blocks, IsolatedVerticesAreSingletonBlocks) {
  const BlockDecomposition d = blocks(Graph(2));
  EXPECT_EQ(d.blocks, (std::vector<VertexList>{{0}, {1}}));
}

TEST(Blocks, MatchReferenceOnRandomGraphs) {
  Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    Graph g = gen_connected(static_cast<VertexId>(rng.between(1, 12)), rng.unit() * 0.5, rng.raw());
    // Occasionally knock out vertices to get disconnected inputs too.
    if (t % 3 == 0 && g.order() > 2) g.remove_vertex(static_cast<VertexId>(rng.between(0, g.id_bound() - 1)));
    const BlockDecomposition d = blocks(g);
    ASSERT_EQ(d.blocks, naive_blocks(g));

    // Edges partition across blocks.
    std::size_t edge_total = 0;
    for (const VertexList& b : d.blocks) {
      const Graph h = g.induced(b);
      edge_total += h.size();
    }
    EXPECT_EQ(edge_total, g.size());

    // A_i and J partition V.
    std::size_t covered = d.joints.size();
    for (const VertexList& a : d.private_vertices) covered += a.size();
    EXPECT_EQ(covered, g.order());

    if (is_connected(g) && d.block_count() >= 2) {
      EXPECT_GE(d.leaf_blocks.size(), d.branching_blocks.size() + 2);
    }

    bool all_cliques = true;
    for (const VertexList& b : d.blocks) {
      all_cliques = all_cliques && g.induced(b).size() == b.size() * (b.size() - 1) / 2;
    }
    EXPECT_EQ(is_clique_forest(g), all_cliques);
  }
}

TEST(CliqueForest, Examples) {
  EXPECT_TRUE(is_clique_forest(path_graph(6)));
  EXPECT_FALSE(is_clique_forest(cycle_graph(4)));
  EXPECT_TRUE(is_clique_forest(bowtie()));
  Rng rng(14);
  for (int t = 0; t < 100; ++t) {
    EXPECT_TRUE(is_clique_forest(gen_clique_forest(static_cast<int>(rng.between(0, 8)),
                                                   static_cast<int>(rng.between(2, 5)), rng.raw())));
  }
}

TEST(GraphIo, RoundTrip) {
  const Graph g = parse_graph("c a comment\np edge 4 3\ne 1 2\ne 2 3\ne 1 4\n");
  EXPECT_EQ(g.order(), 4u);
  EXPECT_TRUE(g.adjacent(0, 3));
  EXPECT_EQ(parse_graph(format_graph(g)), g);
}

TEST(GraphIo, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph("p edge 2 1\ne 1 1\n"), FormatError);
  EXPECT_THROW(parse_graph("p edge 2 2\ne 1 2\ne 1 2\n"), FormatError);
  EXPECT_THROW(parse_graph("p edge 2 2\ne 1 2\n"), FormatError);
  EXPECT_THROW(parse_graph("p edge 2 1\ne 2 1\n"), FormatError);
  EXPECT_THROW(parse_graph("p edge 2 1\ne 1 3\n"), FormatError);
  EXPECT_THROW(parse_graph("e 1 2\n"), FormatError);
  EXPECT_THROW(parse_graph("p edge 2 0\np edge 2 0\n"), FormatError);
  EXPECT_THROW(parse_graph("p edge 2 0\nx\n"), FormatError);
}

TEST(GraphIo, RenumbersSparseIds) {
  Graph g = path_graph(4);
  g.remove_vertex(1);
  g.add_edge(0, 2);
  std::ostringstream out;
  const std::vector<VertexId> ids = write_graph(out, g);
  EXPECT_EQ(ids, (std::vector<VertexId>{0, 2, 3}));
  EXPECT_EQ(out.str(), "p edge 3 2\ne 1 2\ne 2 3\n");
}

TEST(GraphIo, KernelTrailerRoundTrip) {
  Graph g = complete_graph(4);
  g.remove_vertex(0);
  std::stringstream io;
  write_kernel(io, g, 7, {2, 3});
  const KernelFile f = read_kernel(io);
  EXPECT_EQ(f.k, 7);
  EXPECT_EQ(f.separator, (VertexList{1, 2}));
  EXPECT_EQ(f.graph.order(), 3u);
  EXPECT_EQ(f.graph.size(), 3u);
}

}  // namespace
}  // namespace aee
