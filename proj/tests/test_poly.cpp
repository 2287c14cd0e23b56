#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include <jets.hpp>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace jets;

TEST(Ring, SingleBlockInDeclaredOrder)
{
    auto r = make_ring({"x", "y", "z"});
    EXPECT_EQ(r.size(), 3u);
    ASSERT_EQ(r.blocks().size(), 1u);
    EXPECT_EQ(r.variable(1).name(), "y");
    EXPECT_EQ(r.to_string(), "QQ[x,y,z]");
}

TEST(Ring, SubscriptedVariables)
{
    auto r = fixtures::matrix_ring();
    EXPECT_EQ(r.size(), 9u);
    EXPECT_EQ(r.variable(0).name(), "x_(1,1)");
    EXPECT_EQ(r.variable(8).name(), "x_(3,3)");
    EXPECT_EQ(r.find("x_(2,1)"), 3u);
}

TEST(Ring, RejectsDuplicatesAndDigitSuffixes)
{
    EXPECT_THROW(make_ring({"x", "x"}), algebra_error);
    EXPECT_THROW(make_ring({"x1"}), algebra_error);
    EXPECT_THROW(make_ring({""}), algebra_error);
    EXPECT_THROW(make_ring({"2x"}), algebra_error);
    EXPECT_NO_THROW(make_ring({"x1y"}));
    EXPECT_THROW(PolyRing({Variable("x")}, std::vector<unsigned>{1, 2}), algebra_error);
}

TEST(Poly, AdditionCancels)
{
    auto r = make_ring({"x", "y"});
    auto x = Poly::variable(r, 0);
    auto y = Poly::variable(r, 1);
    EXPECT_EQ((x + y) + (-y), x);
    EXPECT_TRUE((x - x).is_zero());
    EXPECT_EQ((x - x).to_string(), "0");
}

TEST(Poly, BinomialSquare)
{
    auto r = make_ring({"x", "y"});
    auto x = Poly::variable(r, 0);
    auto y = Poly::variable(r, 1);
    auto sq = (x + y).pow(2);
    EXPECT_EQ(sq.to_string(), "x^2+2*x*y+y^2");
    EXPECT_EQ(sq, x * x + Rational(2) * x * y + y * y);
    EXPECT_EQ((x + y).pow(0), Poly::constant(r, Rational(1)));
}

TEST(Poly, RingMismatchThrows)
{
    auto r = make_ring({"x"});
    auto s = make_ring({"y"});
    EXPECT_THROW(Poly::variable(r, 0) + Poly::variable(s, 0), algebra_error);
    EXPECT_THROW(Poly::variable(r, 0) * Poly::variable(s, 0), algebra_error);
    EXPECT_THROW(Poly::variable(r, 3), algebra_error);
}

TEST(Poly, StructurallyEqualRingsInteroperate)
{
    auto r1 = make_ring({"x", "y"});
    auto r2 = make_ring({"x", "y"});
    EXPECT_EQ(Poly::variable(r1, 0) + Poly::variable(r2, 1), parse_poly("x+y", r1));
}

TEST(Poly, MultiplicationMatchesNaiveExpansion)
{
    std::mt19937 rng(20240611);
    auto r = make_ring({"x", "y", "z"});
    for (int i = 0; i < 20; ++i) {
        auto f = oracle::random_naive(rng, 3, 4);
        auto g = oracle::random_naive(rng, 3, 4);
        EXPECT_EQ(f.to_poly(r) * g.to_poly(r), (f * g).to_poly(r));
        EXPECT_EQ(f.to_poly(r) + g.to_poly(r), (f + g).to_poly(r));
    }
}

TEST(Poly, CommutativeRingLaws)
{
    std::mt19937 rng(7);
    auto r = make_ring({"x", "y", "z"});
    for (int i = 0; i < 30; ++i) {
        auto f = oracle::random_poly(rng, r, 4);
        auto g = oracle::random_poly(rng, r, 4);
        auto h = oracle::random_poly(rng, r, 3);
        EXPECT_EQ(f + g, g + f);
        EXPECT_EQ(f * g, g * f);
        EXPECT_EQ(f * (g + h), f * g + f * h);
        EXPECT_EQ((f + g) + h, f + (g + h));
        EXPECT_EQ((f * g) * h, f * (g * h));
    }
}

TEST(Poly, CoefficientsStayNormalised)
{
    std::mt19937 rng(11);
    auto r = make_ring({"x", "y", "z"});
    for (int i = 0; i < 30; ++i) {
        auto p = oracle::random_poly(rng, r, 3) * oracle::random_poly(rng, r, 3) - oracle::random_poly(rng, r, 2);
        for (const auto &t : p.terms()) {
            EXPECT_FALSE(t.coefficient.is_zero());
            EXPECT_GT(t.coefficient.denominator(), 0);
            EXPECT_EQ(boost::multiprecision::gcd(t.coefficient.numerator(), t.coefficient.denominator()), 1);
        }
    }
}

TEST(Poly, CanonicalOrderIsTotalAndStable)
{
    std::mt19937 rng(3);
    auto r = make_ring({"x", "y", "z"});
    for (int i = 0; i < 20; ++i) {
        auto p = oracle::random_poly(rng, r, 4, 10);
        auto terms = p.terms();
        std::shuffle(terms.begin(), terms.end(), rng);
        EXPECT_EQ(Poly::from_terms(r, terms).terms(), p.terms());
        for (std::size_t k = 1; k < p.terms().size(); ++k) {
            EXPECT_GT(compare_monomials(r, p.terms()[k - 1].monomial, p.terms()[k].monomial), 0);
        }
    }
}

TEST(Poly, GrevlexOnPlainRing)
{
    auto r = make_ring({"x", "y", "z"});
    // degree first, then the smaller power of the last variable wins
    EXPECT_EQ(parse_poly("z+x^2*y+x*z+y^2", r).to_string(), "x^2*y+y^2+x*z+z");
}

TEST(Poly, TowerOrderPutsLaterBlocksFirst)
{
    auto jr = jet_ring(make_ring({"x", "y"}), 1);
    // x1 alone beats x0^3: the order-1 block is compared first
    auto p = parse_poly("x0^3+x1+y0*y1+1", jr.ring());
    EXPECT_EQ(p.to_string(), "x1+y0*y1+x0^3+1");
}

TEST(Poly, PrintsCoefficientsAndSigns)
{
    auto r = make_ring({"x", "y", "z"});
    EXPECT_EQ(parse_poly("-x", r).to_string(), "-x");
    EXPECT_EQ(parse_poly("-1/2*x*y+3", r).to_string(), "-1/2*x*y+3");
    EXPECT_EQ(parse_poly("-7", r).to_string(), "-7");
    EXPECT_EQ(Poly(r).to_string(), "0");
}

TEST(Homogeneous, StandardGrading)
{
    auto r = make_ring({"x", "y"});
    std::vector<unsigned> ones{1, 1};
    EXPECT_TRUE(is_homogeneous(parse_poly("x^2+x*y", r), ones));
    EXPECT_FALSE(is_homogeneous(parse_poly("x+x^2", r), ones));
    EXPECT_TRUE(is_homogeneous(Poly(r), ones));
}

TEST(Homogeneous, JetWeights)
{
    auto jr = jet_ring(make_ring({"x", "y"}), 1);
    auto f = parse_poly("x1*y0+x0*y1", jr.ring());
    EXPECT_TRUE(is_homogeneous(f, jr.jet_weights()));
    EXPECT_FALSE(is_homogeneous(parse_poly("x1+x0", jr.ring()), jr.jet_weights()));
}

TEST(Homogeneous, WeightLengthMismatch)
{
    auto r = make_ring({"x", "y"});
    std::vector<unsigned> w{1};
    EXPECT_THROW(is_homogeneous(parse_poly("x", r), w), algebra_error);
}

TEST(Ideal, DropsZeroGenerators)
{
    auto r = make_ring({"x"});
    Ideal i(r, {Poly(r), Poly::variable(r, 0)});
    EXPECT_EQ(i.generators().size(), 1u);
    EXPECT_THROW(Ideal(r, {Poly::variable(make_ring({"y"}), 0)}), algebra_error);
}
