#include <gtest/gtest.h>

#include <jets/rational.hpp>

using jets::Integer;
using jets::Rational;

TEST(Rational, NormalisesSignAndGcd)
{
    Rational r(Integer(6), Integer(-4));
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(r.to_string(), "-3/2");
}

TEST(Rational, ZeroIsZeroOverOne)
{
    Rational z = Rational(3) - Rational(3);
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.denominator(), 1);
    EXPECT_EQ(Rational(Integer(0), Integer(-7)).to_string(), "0");
}

TEST(Rational, Arithmetic)
{
    Rational a(Integer(1), Integer(3));
    Rational b(Integer(1), Integer(6));
    EXPECT_EQ(a + b, Rational(Integer(1), Integer(2)));
    EXPECT_EQ(a * b, Rational(Integer(1), Integer(18)));
    EXPECT_EQ(a / b, Rational(2));
    EXPECT_LT(b, a);
    EXPECT_EQ((-a).to_string(), "-1/3");
}

TEST(Rational, BigValuesStayExact)
{
    Rational r(1);
    for (int i = 0; i < 40; ++i) {
        r *= Rational(Integer(1000000007), Integer(3));
    }
    for (int i = 0; i < 40; ++i) {
        r /= Rational(Integer(1000000007), Integer(3));
    }
    EXPECT_TRUE(r.is_one());
}

TEST(Rational, ErrorsOnZeroDenominator)
{
    EXPECT_THROW(Rational(Integer(1), Integer(0)), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}
