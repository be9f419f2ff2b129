#include <gtest/gtest.h>

#include "oracle.hpp"
#include "stern3/seqcore.hpp"
#include "stern3/subgraph.hpp"

using namespace stern3;

namespace {

// Counts source-to-target paths by walking in-edges backwards.
std::uint64_t dfs_paths(const SubdivisionGraph& g, VertexId v) {
    const auto& parents = g.vertex(v).parents;
    if (parents.empty())
        return 1;
    std::uint64_t total = 0;
    for (VertexId p : parents)
        total += dfs_paths(g, p);
    return total;
}

} // namespace

TEST(Subgraph, SizesByDepth) {
    EXPECT_EQ(SubdivisionGraph::build(0).vertex_count(), 3u);
    EXPECT_EQ(SubdivisionGraph::build(0).edge_count(), 0u);
    EXPECT_EQ(SubdivisionGraph::build(1).vertex_count(), 4u);
    EXPECT_EQ(SubdivisionGraph::build(1).edge_count(), 3u);
    EXPECT_EQ(SubdivisionGraph::build(2).vertex_count(), 7u);
    EXPECT_EQ(SubdivisionGraph::build(2).edge_count(), 12u);
    for (int d = 0; d <= 7; ++d) {
        const auto g = SubdivisionGraph::build(d);
        std::size_t expect = 3;
        for (int j = 0; j < d; ++j)
            expect += static_cast<std::size_t>(pow3(j));
        EXPECT_EQ(g.vertex_count(), expect);
    }
    EXPECT_THROW(SubdivisionGraph::build(-1), std::invalid_argument);
}

TEST(Subgraph, InDegrees) {
    for (int d = 0; d <= 6; ++d) {
        const auto g = SubdivisionGraph::build(d);
        std::vector<int> indeg(g.vertex_count(), 0);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            for (VertexId p : g.vertex(v).parents) {
                ++indeg[v];
                EXPECT_LT(p, v);
            }
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            EXPECT_EQ(indeg[v], g.is_initial(v) ? 0 : 3);
    }
}

TEST(Subgraph, GenealogyRecorded) {
    const auto g = SubdivisionGraph::build(2);
    EXPECT_EQ(g.vertex(3).depth, 1);
    EXPECT_TRUE(g.vertex(3).created_by.empty());
    EXPECT_EQ(g.vertex(5).created_by, (Digits{1}));
    EXPECT_EQ(g.vertex(5).depth, 2);
    // Delta(1) = (v2, v3, centroid)
    EXPECT_EQ(g.triangle({1}), (std::array<VertexId, 3>{1, 2, 3}));
    EXPECT_EQ(g.triangle({2}), (std::array<VertexId, 3>{2, 0, 3}));
}

TEST(Subgraph, DistinctVerticesEvenWithEqualValues) {
    // Level-2 centroids of Delta(00), Delta(10), Delta(20) all have value 5.
    const auto g = SubdivisionGraph::build(3);
    EXPECT_EQ(term(encode({{0, 0}, 3})), term(encode({{1, 0}, 3})));
    EXPECT_NE(g.vertex_of(encode({{0, 0}, 3})), g.vertex_of(encode({{1, 0}, 3})));
}

TEST(PathCount, Examples) {
    const auto g = SubdivisionGraph::build(2);
    EXPECT_EQ(path_count(g, 6), 3);
    EXPECT_EQ(path_count(g, 1), 1);
    EXPECT_EQ(path_count(g, 15), 5);
    EXPECT_THROW(path_count(g, level_range(3).first), vertex_not_built);
}

TEST(PathCount, EqualsTermThroughDepthSix) {
    const auto g = SubdivisionGraph::build(6);
    const auto counts = path_counts(g);
    const auto flat = oracle::flat_sequence(6);
    for (Index N = 1; N <= level_range(6).second; ++N) {
        const VertexId v = g.vertex_of(N);
        if (g.is_initial(v))
            continue;
        ASSERT_EQ(counts[v], flat[static_cast<std::size_t>(N - 1)]) << N;
    }
}

TEST(PathCount, RecurrenceEqualsDfsEnumeration) {
    for (int d = 0; d <= 3; ++d) {
        const auto g = SubdivisionGraph::build(d);
        const auto counts = path_counts(g);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            EXPECT_EQ(counts[v], dfs_paths(g, v));
    }
}

TEST(Subgraph, EdgeListExport) {
    EXPECT_EQ(SubdivisionGraph::build(1).to_edge_list(), "0 -> 3\n1 -> 3\n2 -> 3\n");
    EXPECT_EQ(SubdivisionGraph::build(0).to_edge_list(), "");
    const auto text = SubdivisionGraph::build(3).to_edge_list();
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 39);
}
