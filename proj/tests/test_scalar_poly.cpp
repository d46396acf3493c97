#include <gtest/gtest.h>

#include <random>

#include "dbialg/poly.hpp"

using namespace dbialg;

TEST(Rational, AlwaysReduced) {
    Rational r(6, -4);
    EXPECT_EQ(r.str(), "-3/2");
    EXPECT_EQ(Rational(0, 7).str(), "0");
    EXPECT_EQ(Rational(0, -7).denominator(), 1);
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_EQ(Rational::parse("10/-4"), Rational(-5, 2));
    EXPECT_THROW(Rational::parse("1/x"), std::invalid_argument);
}

TEST(Rational, FieldAxiomsOnRandomValues) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-50, 50), p(1, 50);
    for (int i = 0; i < 500; ++i) {
        Rational a(d(rng), p(rng)), b(d(rng), p(rng));
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Rational(1));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a - b) + b, a);
    }
    EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}

TEST(Poly, Arithmetic) {
    const Poly x = Poly::X();
    EXPECT_EQ(poly_arith(x, x, PolyOp::mul), Poly::monomial(2));
    EXPECT_EQ(poly_arith(x - Poly(1), Poly(1), PolyOp::add), x);
    EXPECT_EQ(hilbert(2) * Scalar(2), x * (x - Poly(1)));
    EXPECT_EQ(Poly(0).degree(), -1);
    EXPECT_TRUE((x - x).is_zero());
}

TEST(Poly, RandomRingLaws) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> c(-9, 9);
    std::uniform_int_distribution<int> deg(0, 12);
    auto random_poly = [&] {
        std::vector<Scalar> v(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& s : v) s = Scalar(c(rng), 1 + std::abs(c(rng)));
        return Poly(v);
    };
    for (int i = 0; i < 100; ++i) {
        const Poly a = random_poly(), b = random_poly(), d = random_poly();
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + d), a * b + a * d);
    }
}

TEST(Poly, Hilbert) {
    EXPECT_EQ(hilbert(0), Poly(1));
    EXPECT_EQ(hilbert(1), Poly::X());
    EXPECT_EQ(hilbert(3), Poly({Scalar(0), Scalar(2), Scalar(-3), Scalar(1)}) * Scalar(1, 6));
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= 10; ++k) EXPECT_EQ(hilbert(k).eval(n), binomial(n, k)) << n << " " << k;
}

TEST(Poly, Evaluation) {
    const Poly x = Poly::X();
    EXPECT_EQ(poly_eval(x * (x - Poly(1)) * (x - Poly(2)), 3), Scalar(6));
    const Poly p{Scalar(5), Scalar(-1), Scalar(3)};
    EXPECT_EQ(poly_eval(p, 0), Scalar(5));
    EXPECT_EQ(poly_eval(hilbert(2), 2), Scalar(1));
}

TEST(Poly, IdentityCheck) {
    const Poly x = Poly::X();
    EXPECT_TRUE(poly_identity_check(x * x - Poly(1), (x - Poly(1)) * (x + Poly(1))));
    EXPECT_FALSE(poly_identity_check(x, x + Poly(1)));
    EXPECT_TRUE(poly_identity_check(hilbert(1) * hilbert(1), hilbert(1) + hilbert(2) * Scalar(2)));
}

TEST(Poly, BivariateGrid) {
    // (X+Y)^2 = X^2 + 2XY + Y^2, and a false variant
    auto lhs = [](const Scalar& x, const Scalar& y) { return (x + y) * (x + y); };
    auto rhs = [](const Scalar& x, const Scalar& y) { return x * x + Scalar(2) * x * y + y * y; };
    auto wrong = [](const Scalar& x, const Scalar& y) { return x * x + y * y; };
    EXPECT_TRUE(bivariate_identity_check(2, lhs, rhs));
    EXPECT_FALSE(bivariate_identity_check(2, lhs, wrong));
}

TEST(Poly, Rendering) {
    const Poly x = Poly::X();
    EXPECT_EQ((x * (x - Poly(1)) * (x - Poly(2))).str(), "X^3 - 3X^2 + 2X");
    EXPECT_EQ(hilbert(2).str(), "1/2*X^2 - 1/2*X");
    EXPECT_EQ(Poly({Scalar(-1), Scalar(0), Scalar(2)}).str_ascending(), "-1 + 2*X^2");
    EXPECT_EQ(Poly().str(), "0");
}
