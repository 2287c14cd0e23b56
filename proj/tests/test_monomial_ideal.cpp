#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include <jets.hpp>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace jets;

namespace
{

std::vector<std::string> strings(const MonomialIdeal &m)
{
    std::vector<std::string> out;
    for (const auto &g : m.generators()) {
        out.push_back(monomial_to_string(m.ring(), g));
    }
    return out;
}

Monomial mono(const PolyRing &r, const char *text)
{
    return parse_poly(text, r).terms().at(0).monomial;
}


Rational evaluate(const Poly &p, const std::vector<Rational> &point)
{
    Rational total(0);
    for (const auto &t : p.terms()) {
        Rational v = t.coefficient;
        for (const auto &[i, e] : t.monomial.entries()) {
            for (std::uint32_t k = 0; k < e; ++k) {
                v *= point[i];
            }
        }
        total += v;
    }
    return total;
}

// Radical of J_s(I) from its zero set: the zero set of a monomial-radical
// ideal is a union of coordinate subspaces, found by evaluating the jet
// equations at random points with each possible support. The radical is then
// generated by the minimal squarefree monomials vanishing on all of them.
std::set<IndexSet> radical_by_zero_set(const JetIdeal &ji, std::mt19937 &rng)
{
    const std::size_t n = ji.ring().size();
    std::uniform_int_distribution<int> value(2, 1000);
    std::vector<std::uint64_t> zero_supports;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool vanishes = true;
        for (int trial = 0; trial < 3 && vanishes; ++trial) {
            std::vector<Rational> point(n, Rational(0));
            for (std::size_t i = 0; i < n; ++i) {
                if ((mask >> i) & 1u) {
                    point[i] = Rational(value(rng));
                }
            }
            for (const auto &g : ji.generators()) {
                if (!evaluate(g, point).is_zero()) {
                    vanishes = false;
                    break;
                }
            }
        }
        if (vanishes) {
            zero_supports.push_back(mask);
        }
    }
    std::vector<std::uint64_t> in_radical;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        bool vanishes_everywhere = std::none_of(zero_supports.begin(), zero_supports.end(),
                                                [&](std::uint64_t s) { return (m & s) == m; });
        if (vanishes_everywhere) {
            in_radical.push_back(m);
        }
    }
    std::set<IndexSet> out;
    for (auto m : in_radical) {
        bool minimal = std::none_of(in_radical.begin(), in_radical.end(),
                                    [&](std::uint64_t o) { return o != m && (o & m) == o; });
        if (minimal) {
            IndexSet s;
            for (std::size_t i = 0; i < n; ++i) {
                if ((m >> i) & 1u) {
                    s.push_back(i);
                }
            }
            out.insert(s);
        }
    }
    return out;
}


} // namespace

TEST(IsMonomialIdeal, Examples)
{
    auto r = make_ring({"x", "y", "z"});
    EXPECT_TRUE(is_monomial_ideal(fixtures::xyz_ideal()));
    EXPECT_FALSE(is_monomial_ideal(Ideal(r, {parse_poly("x+y", r)})));
    EXPECT_TRUE(is_monomial_ideal(Ideal(r)));
    EXPECT_TRUE(is_monomial_ideal(Ideal(r, {parse_poly("-3*x^2", r)})));
}

TEST(Minimalize, DropsMultiples)
{
    auto r = make_ring({"x", "y"});
    auto kept = minimalize(r, {mono(r, "x"), mono(r, "x*y"), mono(r, "y^2"), mono(r, "x")});
    ASSERT_EQ(kept.size(), 2u);
    EXPECT_EQ(kept[0], mono(r, "y^2"));
    EXPECT_EQ(kept[1], mono(r, "x"));
    EXPECT_TRUE(minimalize(r, {}).empty());
}

TEST(Minimalize, RandomAgainstDivisibilityScan)
{
    std::mt19937 rng(77);
    auto r = make_ring({"a", "b", "c", "d"});
    for (int round = 0; round < 10; ++round) {
        std::vector<Monomial> gens;
        std::uniform_int_distribution<std::uint32_t> e(0, 3);
        for (int i = 0; i < 30; ++i) {
            std::vector<std::uint32_t> dense{e(rng), e(rng), e(rng), e(rng)};
            gens.push_back(Monomial::from_dense(dense));
        }
        auto kept = minimalize(r, gens);
        for (std::size_t i = 0; i < kept.size(); ++i) {
            for (std::size_t j = 0; j < kept.size(); ++j) {
                if (i != j) {
                    EXPECT_FALSE(kept[i].divides(kept[j]));
                }
            }
            if (i > 0) {
                EXPECT_GT(compare_monomials(r, kept[i - 1], kept[i]), 0);
            }
        }
        for (const auto &g : gens) {
            EXPECT_TRUE(std::any_of(kept.begin(), kept.end(), [&](const Monomial &k) { return k.divides(g); }));
        }
        // every kept generator is one of the inputs
        for (const auto &k : kept) {
            EXPECT_NE(std::find(gens.begin(), gens.end(), k), gens.end());
        }
    }
}

TEST(JetsRadical, MonomialHypersurface)
{
    auto rad = jets_radical(2, fixtures::xyz_ideal());
    EXPECT_EQ(strings(rad), (std::vector<std::string>{"y0*z0*x2", "x0*z0*y2", "x0*y0*z2", "z0*x1*y1", "y0*x1*z1",
                                                      "x0*y1*z1", "y0*z0*x1", "x0*z0*y1", "x0*y0*z1", "x0*y0*z0"}));
    EXPECT_TRUE(rad.is_squarefree());
}

TEST(JetsRadical, NonSquarefreeInputUsesSupports)
{
    auto r = make_ring({"x"});
    auto rad = jets_radical(0, Ideal(r, {parse_poly("x^2", r)}));
    EXPECT_EQ(strings(rad), std::vector<std::string>{"x0"});
    auto rad1 = jets_radical(1, Ideal(r, {parse_poly("x^2", r)}));
    EXPECT_EQ(strings(rad1), std::vector<std::string>{"x0"});
}

TEST(JetsRadical, RejectsNonMonomialIdeals)
{
    auto r = make_ring({"x", "y"});
    EXPECT_THROW(jets_radical(1, Ideal(r, {parse_poly("x+y", r)})), algebra_error);
}

TEST(JetsRadical, MatchesZeroSetOracle)
{
    std::mt19937 rng(2718);
    auto r = make_ring({"x", "y", "z"});
    for (int i = 0; i < 15; ++i) {
        auto ideal = oracle::random_squarefree(rng, r, 3).to_ideal();
        auto rad = jets_radical(1, ideal);
        std::set<IndexSet> got;
        for (const auto &g : rad.generators()) {
            got.insert(g.support_indices());
        }
        EXPECT_EQ(got, radical_by_zero_set(jets_ideal(1, ideal), rng));
    }
}

TEST(JetsRadical, Properties)
{
    std::mt19937 rng(1618);
    auto r = make_ring({"x", "y", "z"});
    for (int i = 0; i < 20; ++i) {
        unsigned s = static_cast<unsigned>(i % 3);
        auto ideal = oracle::random_squarefree(rng, r, 3).to_ideal();
        auto rad = jets_radical(s, ideal);
        auto ji = jets_ideal(s, ideal);
        for (const auto &g : ji.generators()) {
            for (const auto &t : g.terms()) {
                EXPECT_TRUE(rad.contains(t.monomial));
            }
        }
        EXPECT_TRUE(rad.is_squarefree());
        EXPECT_EQ(minimalize(rad.ring(), rad.generators()), rad.generators());
    }
}

TEST(MinimalPrimes, MonomialHypersurfaceSecondJets)
{
    auto rad = jets_radical(2, fixtures::xyz_ideal());
    auto primes = minimal_primes_squarefree(rad);
    std::set<std::set<std::string>> expected{
        {"z0", "y0", "x0"}, {"z0", "y0", "z1"}, {"z0", "y0", "y1"}, {"z0", "x0", "z1"}, {"z0", "x0", "x1"},
        {"z0", "z1", "z2"}, {"y0", "x0", "y1"}, {"y0", "x0", "x1"}, {"y0", "y1", "y2"}, {"x0", "x1", "x2"}};
    EXPECT_EQ(primes.size(), 10u);
    EXPECT_EQ(fixtures::name_sets(rad.ring(), primes), expected);
}

TEST(MinimalPrimes, EdgeCases)
{
    auto r = make_ring({"x", "y"});
    auto principal = MonomialIdeal(r, {mono(r, "x")});
    EXPECT_EQ(minimal_primes_squarefree(principal), std::vector<IndexSet>{{0}});
    // zero ideal is prime
    EXPECT_EQ(minimal_primes_squarefree(MonomialIdeal(r)), std::vector<IndexSet>{{}});
    // unit ideal has none
    EXPECT_TRUE(minimal_primes_squarefree(MonomialIdeal(r, {Monomial{}})).empty());
    EXPECT_THROW(minimal_primes_squarefree(MonomialIdeal(r, {mono(r, "x^2")})), algebra_error);
}

TEST(MinimalPrimes, MatchesSubsetScan)
{
    std::mt19937 rng(141);
    auto r = make_ring({"a", "b", "c", "d", "e", "f"});
    for (int i = 0; i < 40; ++i) {
        auto ideal = oracle::random_squarefree(rng, r, 4);
        std::vector<IndexSet> edges;
        for (const auto &g : ideal.generators()) {
            edges.push_back(g.support_indices());
        }
        EXPECT_EQ(minimal_primes_squarefree(ideal), oracle::minimal_covers_by_scan(r.size(), edges));
    }
}

TEST(MinimalPrimes, IntersectionRecoversIdeal)
{
    std::mt19937 rng(1729);
    auto r = make_ring({"a", "b", "c", "d", "e", "f"});
    for (int i = 0; i < 25; ++i) {
        auto ideal = oracle::random_squarefree(rng, r, 4);
        auto primes = minimal_primes_squarefree(ideal);
        for (const auto &p : primes) {
            // each prime covers every generator and is minimal
            for (const auto &g : ideal.generators()) {
                auto sup = g.support_indices();
                EXPECT_TRUE(std::any_of(p.begin(), p.end(), [&](std::size_t v) {
                    return std::find(sup.begin(), sup.end(), v) != sup.end();
                }));
            }
        }
        EXPECT_EQ(oracle::intersect_primes(r, primes), ideal);
    }
}

TEST(MinimalTransversals, EmptyEdgeAndNoEdges)
{
    EXPECT_EQ(minimal_transversals(3, {}), std::vector<IndexSet>{{}});
    EXPECT_TRUE(minimal_transversals(3, {{}}).empty());
    EXPECT_EQ(minimal_transversals(3, {{0, 1}, {1, 2}}), (std::vector<IndexSet>{{1}, {0, 2}}));
}
