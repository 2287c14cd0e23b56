#ifndef JETS_RATIONAL_HPP
#define JETS_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace jets
{

using Integer = boost::multiprecision::cpp_int;

// Exact rational number in lowest terms with a positive denominator.
// Zero is always 0/1.
class Rational
{
public:
    Rational() = default;
    Rational(std::int64_t n) : m_value(n) {}
    explicit Rational(Integer n) : m_value(std::move(n)) {}
    Rational(Integer num, Integer den)
    {
        if (den == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        m_value = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
    }

    Integer numerator() const
    {
        return boost::multiprecision::numerator(m_value);
    }
    Integer denominator() const
    {
        return boost::multiprecision::denominator(m_value);
    }

    bool is_zero() const
    {
        return m_value == 0;
    }
    bool is_one() const
    {
        return m_value == 1;
    }
    bool is_integer() const
    {
        return denominator() == 1;
    }
    int sign() const
    {
        return m_value.sign();
    }

    Rational abs() const
    {
        return Rational(boost::multiprecision::abs(m_value));
    }

    Rational &operator+=(const Rational &o)
    {
        m_value += o.m_value;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        m_value -= o.m_value;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        m_value *= o.m_value;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw std::domain_error("division by zero");
        }
        m_value /= o.m_value;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }
    friend Rational operator-(const Rational &a)
    {
        return Rational(-a.m_value);
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.m_value == b.m_value;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        if (a.m_value < b.m_value) {
            return std::strong_ordering::less;
        }
        if (b.m_value < a.m_value) {
            return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    // "n" or "n/d".
    std::string to_string() const
    {
        std::string out = numerator().str();
        if (!is_integer()) {
            out += '/';
            out += denominator().str();
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r)
    {
        return os << r.to_string();
    }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : m_value(std::move(v)) {}

    boost::multiprecision::cpp_rational m_value;
};

} // namespace jets

#endif
