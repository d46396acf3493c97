#include <gtest/gtest.h>

#include "dbialg/engine.hpp"
#include "dbialg/graph.hpp"
#include "dbialg/morphisms.hpp"
#include "dbialg/oracles.hpp"
#include "dbialg/word.hpp"

using namespace dbialg;

namespace {

using GE = Engine<GraphCarrier>;

const Poly X = Poly::X();
Poly lin(long a) { return X - Poly(Scalar(a)); }

struct Named {
    const char* name;
    Graph g;
    Poly chromatic;
    long phi;
};

std::vector<Named> example_graphs() {
    return {
        {"dot", graphs::dot(), X, 1},
        {"K2", graphs::complete(2), X * lin(1), -1},
        {"triangle", graphs::complete(3), X * lin(1) * lin(2), 2},
        {"P3", graphs::path(3), X * lin(1) * lin(1), 1},
        {"K4", graphs::complete(4), X * lin(1) * lin(2) * lin(3), -6},
        {"diamond", graphs::diamond(), X * lin(1) * lin(2) * lin(2), -4},
        {"paw", graphs::paw(), X * lin(1) * lin(1) * lin(2), -2},
        {"C4", graphs::cycle(4), X * lin(1) * Poly{Scalar(3), Scalar(-3), Scalar(1)}, -3},
        {"star", graphs::star(3), X * lin(1) * lin(1) * lin(1), -1},
        {"P4", graphs::path(4), X * lin(1) * lin(1) * lin(1), -1},
    };
}

struct Morph : ::testing::Test {
    GraphCarrier c;
    GE e{c, 5};
};

}  // namespace

TEST_F(Morph, ChromaticPolynomialsOfSmallGraphs) {
    const auto big_phi = unique_Phi(e);
    for (const auto& x : example_graphs()) EXPECT_EQ(big_phi(x.g), x.chromatic) << x.name << ": " << big_phi(x.g).str();
    EXPECT_EQ(big_phi(Graph{}), Poly(1));
    EXPECT_EQ(big_phi(graphs::complete(3)).str(), "X^3 - 3X^2 + 2X");
}

TEST_F(Morph, InfinitesimalCharacterOfSmallGraphs) {
    const auto phi = phi_inf(e);
    for (const auto& x : example_graphs()) EXPECT_EQ(phi(x.g), Scalar(x.phi)) << x.name;
    EXPECT_TRUE(e.equal(phi, e.phi(), 5));
}

TEST_F(Morph, ThreeRoutesToTheChromaticPolynomialAgree) {
    const auto big_phi = unique_Phi(e);
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : all_graphs(n)) {
            const Poly p = big_phi(g);
            EXPECT_EQ(p, chromatic_dc(g)) << g.str();
            EXPECT_EQ(p, oracle::packed_valid_expansion(g)) << g.str();
            EXPECT_EQ(p, oracle::chromatic_by_interpolation(g)) << g.str();
            for (int k = 0; k <= 4; ++k)
                EXPECT_EQ(p.eval(Scalar(k)), Scalar(static_cast<long>(oracle::count_proper_colorings(g, k))));
        }
}

TEST_F(Morph, DeletionContraction) {
    const auto big_phi = unique_Phi(e);
    const auto phi = e.phi();
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : all_graphs(n))
            for (const Edge& x : g.edges()) {
                EXPECT_EQ(big_phi(g), big_phi(delete_edge(g, x)) - big_phi(contract_edge(g, x)));
                EXPECT_EQ(phi(g), phi(delete_edge(g, x)) - phi(contract_edge(g, x)));
            }
}

TEST_F(Morph, PhiLambdaIntertwinesBothCoproducts) {
    const auto lambda = e.random_character(1);
    const auto pl = phi_lambda(e, lambda);
    const auto big_phi = unique_Phi(e);
    for (int n = 0; n <= 4; ++n)
        for (const Graph& g : all_graphs(n)) {
            const Poly p = pl(g);
            EXPECT_TRUE(bivariate_identity_check(
                n, [&](const Scalar& x, const Scalar& y) { return p.eval(x + y); },
                [&](const Scalar& x, const Scalar& y) {
                    Scalar s(0);
                    for (const auto& [ab, k] : c.coproduct(g)) s += pl(ab.first).eval(x) * pl(ab.second).eval(y) * k;
                    return s;
                }))
                << g.str();
            const Poly q = big_phi(g);
            EXPECT_TRUE(bivariate_identity_check(
                n, [&](const Scalar& x, const Scalar& y) { return q.eval(x * y); },
                [&](const Scalar& x, const Scalar& y) {
                    Scalar s(0);
                    for (const auto& [ab, k] : c.internal_coproduct(g))
                        s += big_phi(ab.first).eval(x) * big_phi(ab.second).eval(y) * k;
                    return s;
                }))
                << g.str();
        }
}

TEST_F(Morph, PhiLambdaEvaluatesToLambdaAndIsMultiplicative) {
    const auto lambda = e.random_character(2);
    const auto pl = phi_lambda(e, lambda);
    EXPECT_TRUE(e.equal(polymorphism_to_character(e, pl), lambda, 5));
    for (int i = 1; i <= 3; ++i)
        for (int j = i; i + j <= 5; ++j)
            for (const Graph& a : all_graphs(i))
                for (const Graph& b : all_graphs(j)) EXPECT_EQ(pl(disjoint_union(a, b)), pl(a) * pl(b));
    EXPECT_THROW(phi_lambda(e, e.zero_form()), PreconditionError);
}

TEST_F(Morph, CharacterBijectionRoundTrip) {
    const auto lambda = e.random_character(3);
    const auto psi = character_to_polymorphism(e, lambda);
    EXPECT_TRUE(e.equal(polymorphism_to_character(e, psi), lambda, 5));
    EXPECT_TRUE(e.equal(psi, phi_lambda(e, lambda), 5));
}

TEST_F(Morph, PsiOfPhiIsTheChromaticMorphism) {
    EXPECT_TRUE(e.equal(psi_mu(e, e.phi()), unique_Phi(e), 5));
    EXPECT_THROW(psi_mu(e, e.counit_delta()), PreconditionError);
}

TEST_F(Morph, HomogeneousPsiAndReconstruction) {
    // mu(•) = 1 and 0 elsewhere; lambda = exp(mu) is the constant character 1.
    const auto mu = e.form([](const Graph& g) { return g.vertex_count() == 1 ? Scalar(1) : Scalar(0); });
    const auto hp = homogeneous_psi(e, mu);
    EXPECT_TRUE(hp.homogeneous);
    EXPECT_FALSE(homogeneous_psi(e, e.phi()).homogeneous);
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : all_graphs(n)) EXPECT_EQ(hp.map(g), Poly::monomial(n)) << g.str();
    const auto lambda = graph_character(e, [](const Graph&) { return Scalar(1); });
    EXPECT_TRUE(e.equal(e.exp_form(mu), lambda, 5));
    const auto inv = circ_inverse(e, lambda);
    EXPECT_TRUE(e.equal(e.circ(lambda, inv), e.counit_delta(), 5));
    EXPECT_TRUE(e.equal(e.circ(inv, lambda), e.counit_delta(), 5));
    EXPECT_TRUE(e.equal(e.coaction(hp.map, inv), unique_Phi(e), 5));
    EXPECT_TRUE(e.equal(e.circ(mu, inv), e.phi(), 5));
}

TEST_F(Morph, CircInverse) {
    const auto lambda = graph_character(e, [](const Graph&) { return Scalar(1); });
    const auto inv = circ_inverse(e, lambda);
    EXPECT_EQ(inv(graphs::dot()), Scalar(1));
    EXPECT_EQ(inv(graphs::complete(2)), Scalar(-1));
    EXPECT_EQ(inv(graphs::complete(3)), Scalar(2));
    EXPECT_TRUE(e.equal(circ_inverse(e, e.counit_delta()), e.counit_delta(), 5));
    const auto rc = e.random_character(4);
    if (!rc(graphs::dot()).is_zero()) {
        const auto ri = circ_inverse(e, rc);
        EXPECT_TRUE(e.equal(e.circ(rc, ri), e.counit_delta(), 5));
    }
    EXPECT_THROW(circ_inverse(e, e.form([](const Graph& g) { return g.vertex_count() == 0 ? Scalar(1) : Scalar(0); })),
                 PreconditionError);
}

TEST_F(Morph, QSymMorphism) {
    const auto abs = abs_qsym(e, e.counit_delta());
    EXPECT_EQ(abs(graphs::complete(2)), WordElem(Word{1, 1}, 2));
    EXPECT_EQ(abs(graphs::dot()), WordElem(Word{1}));
    EXPECT_EQ(abs(Graph{}), WordElem(Word{}));
    for (int n = 0; n <= 4; ++n)
        for (const Graph& g : all_graphs(n)) EXPECT_EQ(qsym_to_poly(abs(g)), unique_Phi(e)(g)) << g.str();
    // Compatible with the products.
    const Semigroup q = Semigroup::qsym();
    for (const Graph& a : all_graphs(2))
        for (const Graph& b : all_graphs(3)) EXPECT_EQ(abs(disjoint_union(a, b)), quasishuffle(abs(a), abs(b), q));
}

TEST(Hypothesis3, WitnessOnK2) {
    const auto r = hypothesis3_witness();
    EXPECT_EQ(r.phi_k2, WordElem(Word{1, 1}, 2));
    Tensor2<Word> lhs, rhs;
    lhs.add({Word{2}, Word{1, 1}}, Scalar(2));
    lhs.add({Word{1, 1}, Word{1, 1}}, Scalar(4));
    lhs.add({Word{1, 1}, Word{2}}, Scalar(2));
    rhs.add({Word{1}, Word{1, 1}}, Scalar(2));
    rhs.add({Word{1, 1}, Word{1, 1}}, Scalar(4));
    rhs.add({Word{1, 1}, Word{2}}, Scalar(2));
    EXPECT_EQ(r.delta_of_phi, lhs);
    EXPECT_EQ(r.phi_of_delta, rhs);
    EXPECT_TRUE(r.differs());
}
