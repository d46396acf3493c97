#include <gtest/gtest.h>

#include <bit>

#include "dbialg/graph.hpp"
#include "dbialg/orientations.hpp"

using namespace dbialg;

TEST(Orientations, Counts) {
    EXPECT_EQ(acyclic_orientations(graphs::complete(2)).size(), 2U);
    EXPECT_EQ(acyclic_orientations(graphs::complete(3)).size(), 6U);
    EXPECT_EQ(acyclic_orientations(graphs::edgeless(4)).size(), 1U);
    EXPECT_EQ(acyclic_orientations(graphs::cycle(4)).size(), 14U);
}

TEST(Orientations, Sources) {
    const Orientation o{graphs::complete(2), 0};
    EXPECT_EQ(sources(o), 1U);
    EXPECT_EQ(sources(Orientation{graphs::complete(2), 1}), 2U);
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs(n))
            for (const auto& a : acyclic_orientations(g)) {
                const int s = std::popcount(sources(a));
                EXPECT_GE(s, 1);
                if (!g.is_connected()) EXPECT_GE(s, 2);
            }
}

TEST(Orientations, CyclesAreDetected) {
    const Graph tri = graphs::complete(3);
    int cyclic = 0;
    for (std::uint64_t r = 0; r < 8; ++r) cyclic += is_acyclic(Orientation{tri, r}) ? 0 : 1;
    EXPECT_EQ(cyclic, 2);
}

TEST(PhiTilde, Examples) {
    EXPECT_EQ(phi_tilde(graphs::dot()), 1U);
    EXPECT_EQ(phi_tilde(graphs::complete(2)), 1U);
    EXPECT_EQ(phi_tilde(graphs::complete(3)), 2U);
    EXPECT_EQ(phi_tilde(graphs::complete(4)), 6U);
    EXPECT_EQ(phi_tilde(Graph{}), 0U);
    EXPECT_EQ(phi_tilde(graphs::edgeless(2)), 0U);
}

TEST(PhiTilde, SourceTransferInvariance) {
    EXPECT_TRUE(source_transfer_invariance(graphs::path(3)));
    EXPECT_TRUE(source_transfer_invariance(graphs::dot()));
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_connected_graphs(n)) EXPECT_TRUE(source_transfer_invariance(g)) << g.str();
}

TEST(PhiTilde, GreeneZaslavskyUpToSixVertices) {
    EXPECT_EQ(gz_verify(graphs::complete(2)).phi_chr, Scalar(-1));
    EXPECT_EQ(gz_verify(graphs::complete(3)).phi_chr, Scalar(2));
    const auto k4 = gz_verify(graphs::complete(4));
    EXPECT_EQ(k4.phi_chr, Scalar(-6));
    EXPECT_EQ(k4.phi_tilde, 6U);
    EXPECT_EQ(k4.sign, -1);
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_connected_graphs(n)) EXPECT_TRUE(gz_verify(g).ok) << g.str();
    EXPECT_FALSE(gz_verify(graphs::complete(3), Scalar(-2)).ok);
}

TEST(PhiTilde, AdditiveDeletionContraction) {
    for (const Edge& x : graphs::complete(3).edges()) EXPECT_TRUE(dc_phi_tilde(graphs::complete(3), x));
    EXPECT_TRUE(dc_phi_tilde(graphs::complete(2), {0, 1}));
    for (const Edge& x : graphs::cycle(4).edges()) EXPECT_TRUE(dc_phi_tilde(graphs::cycle(4), x));
    EXPECT_EQ(phi_tilde(graphs::cycle(4)), phi_tilde(graphs::path(4)) + phi_tilde(graphs::complete(3)));
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : all_graphs(n))
            for (const Edge& x : g.edges()) EXPECT_TRUE(dc_phi_tilde(g, x));
    EXPECT_THROW(dc_phi_tilde(graphs::path(3), {1, 2}), std::invalid_argument);
}

TEST(PhiTilde, ParallelKernelMatchesSerial) {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_connected_graphs(n))
            for (int x = 0; x < n; ++x) EXPECT_EQ(count_single_source(g, x), count_single_source_serial(g, x));
    const Graph k6 = graphs::complete(6);
    EXPECT_EQ(count_single_source(k6, 0), 120U);
}
