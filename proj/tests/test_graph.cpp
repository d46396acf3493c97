#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dbialg/axioms.hpp"
#include "dbialg/graph.hpp"
#include "dbialg/oracles.hpp"

using namespace dbialg;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> e;
    for (auto [i, j] : g.edges()) e.emplace_back(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    return canonicalize(g.vertex_count(), e);
}

Graph g(std::string_view s) { return Graph::parse(s); }

const Graph one{};
const Graph dot = graphs::dot();
const Graph k2 = graphs::complete(2);
const Graph tri = graphs::complete(3);

Tensor2<Graph> t2(std::initializer_list<std::tuple<Graph, Graph, long>> terms) {
    Tensor2<Graph> t;
    for (const auto& [a, b, c] : terms) t.add({a, b}, Scalar(c));
    return t;
}

}  // namespace

TEST(Canonicalize, RelabelingsCollapse) {
    EXPECT_EQ(g("3; 0-1,1-2"), g("3; 0-2,2-1"));
    EXPECT_EQ(g("2; 0-1"), g("2; 1-0"));
    std::vector<int> perm{0, 1, 2};
    const Graph p3 = graphs::path(3);
    do {
        EXPECT_EQ(relabel(p3, perm), p3);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Canonicalize, IsIdempotent) {
    for (int n = 0; n <= 6; ++n)
        for (const Graph& h : all_graphs(n)) EXPECT_EQ(canonical_form(h.labeled()), h);
}

TEST(Canonicalize, RandomRelabelingsUpToEightVertices) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        std::vector<Edge> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) e.emplace_back(i, j);
        const Graph h = canonicalize(n, e);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(relabel(h, perm), h);
    }
}

TEST(Canonicalize, IsomorphismClassCounts) {
    const std::size_t all[] = {1, 1, 2, 4, 11, 34, 156};
    const std::size_t connected[] = {0, 1, 1, 2, 6, 21, 112};
    for (int n = 0; n <= 6; ++n) {
        EXPECT_EQ(all_graphs(n).size(), all[n]) << n;
        EXPECT_EQ(all_connected_graphs(n).size(), connected[n]) << n;
    }
}

TEST(Canonicalize, RejectsMalformedInput) {
    const Edge loop[] = {{1, 1}};
    const Edge out_of_range[] = {{0, 3}};
    const Edge repeated[] = {{0, 1}, {1, 0}};
    EXPECT_THROW(canonicalize(2, loop), MalformedGraph);
    EXPECT_THROW(canonicalize(3, out_of_range), MalformedGraph);
    EXPECT_THROW(canonicalize(2, repeated), MalformedGraph);
    EXPECT_THROW(canonicalize(-1, {}), MalformedGraph);
    EXPECT_THROW(g("x; 0-1"), MalformedGraph);
    EXPECT_THROW(g("3; 0-1,"), MalformedGraph);
    EXPECT_THROW(g("3; 01"), MalformedGraph);
}

TEST(Canonicalize, TextRoundTrip) {
    EXPECT_EQ(g("1;"), dot);
    EXPECT_EQ(g("0;"), one);
    EXPECT_EQ(g(" 4 ; 0-1 , 2-3 "), g("4; 0-3,1-2"));
    for (int n = 0; n <= 5; ++n)
        for (const Graph& h : all_graphs(n)) EXPECT_EQ(g(h.str()), h);
    EXPECT_EQ(tri.str(), "3; 0-1,0-2,1-2");
}

TEST(DisjointUnion, Examples) {
    EXPECT_EQ(disjoint_union(dot, dot), graphs::edgeless(2));
    EXPECT_EQ(disjoint_union(k2, one), k2);
    EXPECT_EQ(disjoint_union(k2, dot), g("3; 0-1"));
}

TEST(CoproductDelta, Examples) {
    EXPECT_EQ(coproduct_Delta(k2), t2({{k2, one, 1}, {one, k2, 1}, {dot, dot, 2}}));
    EXPECT_EQ(coproduct_Delta(dot), t2({{dot, one, 1}, {one, dot, 1}}));
    EXPECT_EQ(coproduct_Delta(tri), t2({{tri, one, 1}, {one, tri, 1}, {dot, k2, 3}, {k2, dot, 3}}));
    EXPECT_EQ(coproduct_Delta(one), t2({{one, one, 1}}));
}

TEST(CoproductDelta, IsCocommutative) {
    for (int n = 0; n <= 5; ++n)
        for (const Graph& h : all_graphs(n)) EXPECT_EQ(flip(coproduct_Delta(h)), coproduct_Delta(h));
}

TEST(ConnectedPartitions, Counts) {
    EXPECT_EQ(connected_partitions(dot).size(), 1U);
    EXPECT_EQ(connected_partitions(k2).size(), 2U);
    EXPECT_EQ(connected_partitions(tri).size(), 5U);
    // Edgeless: only the discrete partition. K4: all Bell(4) = 15.
    EXPECT_EQ(connected_partitions(graphs::edgeless(4)).size(), 1U);
    EXPECT_EQ(connected_partitions(graphs::complete(4)).size(), 15U);
    for (const auto& p : connected_partitions(graphs::path(4)))
        for (std::uint32_t b : p.blocks) EXPECT_TRUE(is_connected(induced_subgraph(graphs::path(4).labeled(), b)));
}

TEST(CoproductInternal, Examples) {
    EXPECT_EQ(coproduct_delta(dot), t2({{dot, dot, 1}}));
    const Graph dot2 = graphs::edgeless(2), dot3 = graphs::edgeless(3);
    EXPECT_EQ(coproduct_delta(k2), t2({{k2, dot2, 1}, {dot, k2, 1}}));
    EXPECT_EQ(coproduct_delta(tri), t2({{tri, dot3, 1}, {k2, disjoint_union(k2, dot), 3}, {dot, tri, 1}}));
    EXPECT_EQ(coproduct_delta(one), t2({{one, one, 1}}));
}

TEST(CoproductInternal, NotCocommutative) {
    EXPECT_NE(flip(coproduct_delta(k2)), coproduct_delta(k2));
}

TEST(Coproducts, AgreeWithDirectExpansion) {
    for (int n = 0; n <= 5; ++n)
        for (const Graph& h : all_graphs(n)) {
            EXPECT_EQ(coproduct_Delta(h), oracle::graph_Delta(h)) << h.str();
            EXPECT_EQ(coproduct_delta(h), oracle::graph_delta(h)) << h.str();
        }
}

TEST(Counits, Examples) {
    EXPECT_EQ(counit_Delta(GraphElem(one)), Scalar(1));
    EXPECT_EQ(counit_Delta(GraphElem(k2)), Scalar(0));
    EXPECT_EQ(counit_Delta(GraphElem(one, 3) + GraphElem(k2, 5)), Scalar(3));
    EXPECT_EQ(counit_delta(GraphElem(graphs::edgeless(3))), Scalar(1));
    EXPECT_EQ(counit_delta(GraphElem(k2)), Scalar(0));
    EXPECT_EQ(counit_delta(GraphElem(graphs::edgeless(2), 2) + GraphElem(tri, 7)), Scalar(2));
}

TEST(Minors, DeleteAndContract) {
    EXPECT_EQ(contract_edge(k2, {0, 1}), dot);
    EXPECT_EQ(delete_edge(tri, {0, 1}), graphs::path(3));
    EXPECT_EQ(contract_edge(tri, {0, 1}), k2);
    EXPECT_EQ(contract_edge(graphs::cycle(4), graphs::cycle(4).edges().front()), tri);
    EXPECT_THROW(delete_edge(graphs::path(3), {1, 2}), std::invalid_argument);
    EXPECT_THROW(contract_edge(graphs::edgeless(2), {0, 1}), std::invalid_argument);
}

TEST(Components, Split) {
    const Graph h = g("6; 0-1,2-3,3-4");
    const auto comps = connected_components(h);
    ASSERT_EQ(comps.size(), 3U);
    EXPECT_EQ(comps[0], dot);
    EXPECT_TRUE(std::find(comps.begin(), comps.end(), graphs::path(3)) != comps.end());
    EXPECT_FALSE(is_connected(one.labeled()));
}

TEST(Axioms, HoldOnGraphsUpToFiveVertices) {
    GraphCarrier c;
    for (const auto& r : check_axioms(c, 5)) EXPECT_TRUE(r.passed) << r.name << ": " << r.counterexample;
}

TEST(Axioms, BialgebraCompatibilityOnRandomPairs) {
    // Pairs with up to four vertices each, beyond the exhaustive bound above.
    std::mt19937 rng(5);
    GraphCarrier c;
    for (int trial = 0; trial < 12; ++trial) {
        const auto& ga = all_graphs(1 + static_cast<int>(rng() % 4));
        const auto& gb = all_graphs(1 + static_cast<int>(rng() % 4));
        const Graph a = ga[rng() % ga.size()], b = gb[rng() % gb.size()];
        const Graph ab = disjoint_union(a, b);
        EXPECT_EQ(coproduct_Delta(ab), detail::tensor_product(c, coproduct_Delta(a), coproduct_Delta(b)));
        EXPECT_EQ(coproduct_delta(ab), detail::tensor_product(c, coproduct_delta(a), coproduct_delta(b)));
    }
}
