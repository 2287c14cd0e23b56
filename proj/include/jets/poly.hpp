#ifndef JETS_POLY_HPP
#define JETS_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <jets/rational.hpp>
#include <jets/ring.hpp>

namespace jets
{

struct Term {
    Monomial monomial;
    Rational coefficient;

    friend bool operator==(const Term &, const Term &) = default;
};

/// Sparse polynomial over QQ. Terms are kept in descending term order with
/// no zero coefficients, so structural equality is polynomial equality.
class Poly
{
public:
    Poly() = default;
    explicit Poly(PolyRing ring) : m_ring(std::move(ring)) {}

    static Poly constant(const PolyRing &ring, const Rational &c)
    {
        Poly p(ring);
        if (!c.is_zero()) {
            p.m_terms.push_back({Monomial{}, c});
        }
        return p;
    }

    static Poly variable(const PolyRing &ring, std::size_t index)
    {
        if (index >= ring.size()) {
            throw algebra_error("variable index out of range");
        }
        Poly p(ring);
        p.m_terms.push_back({Monomial::variable(index), Rational(1)});
        return p;
    }

    static Poly monomial(const PolyRing &ring, const Monomial &m, const Rational &c = Rational(1))
    {
        return from_terms(ring, {Term{m, c}});
    }

    /// Builds a polynomial from arbitrary terms; like terms are combined.
    static Poly from_terms(const PolyRing &ring, std::vector<Term> terms)
    {
        std::map<Monomial, Rational> acc;
        for (auto &t : terms) {
            check_indices(ring, t.monomial);
            acc[t.monomial] += t.coefficient;
        }
        return from_map(ring, std::move(acc));
    }

    const PolyRing &ring() const
    {
        return m_ring;
    }
    const std::vector<Term> &terms() const
    {
        return m_terms;
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }
    std::size_t size() const
    {
        return m_terms.size();
    }
    bool is_monomial() const
    {
        return m_terms.size() == 1;
    }

    /// Total degree; -1 for the zero polynomial.
    std::int64_t degree() const
    {
        std::int64_t d = -1;
        for (const auto &t : m_terms) {
            d = std::max<std::int64_t>(d, static_cast<std::int64_t>(t.monomial.degree()));
        }
        return d;
    }

    Poly &operator+=(const Poly &o)
    {
        return *this = *this + o;
    }
    Poly &operator-=(const Poly &o)
    {
        return *this = *this - o;
    }
    Poly &operator*=(const Poly &o)
    {
        return *this = *this * o;
    }

    friend Poly operator+(const Poly &a, const Poly &b)
    {
        check_same_ring(a, b);
        std::map<Monomial, Rational> acc;
        for (const auto &t : a.m_terms) {
            acc[t.monomial] += t.coefficient;
        }
        for (const auto &t : b.m_terms) {
            acc[t.monomial] += t.coefficient;
        }
        return from_map(a.m_ring, std::move(acc));
    }

    friend Poly operator-(const Poly &a)
    {
        Poly p = a;
        for (auto &t : p.m_terms) {
            t.coefficient = -t.coefficient;
        }
        return p;
    }

    friend Poly operator-(const Poly &a, const Poly &b)
    {
        return a + (-b);
    }

    friend Poly operator*(const Poly &a, const Poly &b)
    {
        check_same_ring(a, b);
        std::map<Monomial, Rational> acc;
        for (const auto &s : a.m_terms) {
            for (const auto &t : b.m_terms) {
                acc[s.monomial * t.monomial] += s.coefficient * t.coefficient;
            }
        }
        return from_map(a.m_ring, std::move(acc));
    }

    friend Poly operator*(const Rational &c, const Poly &p)
    {
        if (c.is_zero()) {
            return Poly(p.m_ring);
        }
        Poly out = p;
        for (auto &t : out.m_terms) {
            t.coefficient *= c;
        }
        return out;
    }

    Poly pow(std::uint32_t e) const
    {
        Poly result = constant(m_ring, Rational(1));
        Poly base = *this;
        while (e != 0) {
            if (e & 1u) {
                result = result * base;
            }
            e >>= 1;
            if (e != 0) {
                base = base * base;
            }
        }
        return result;
    }

    friend bool operator==(const Poly &a, const Poly &b)
    {
        return a.m_ring == b.m_ring && a.m_terms == b.m_terms;
    }

    /// Canonical text form, parseable back with parse_poly.
    std::string to_string() const;

    friend std::ostream &operator<<(std::ostream &os, const Poly &p)
    {
        return os << p.to_string();
    }

private:
    static void check_indices(const PolyRing &ring, const Monomial &m)
    {
        for (const auto &e : m.entries()) {
            if (e.first >= ring.size()) {
                throw algebra_error("monomial refers to a variable outside the ring");
            }
        }
    }

    static void check_same_ring(const Poly &a, const Poly &b)
    {
        if (!(a.m_ring == b.m_ring)) {
            throw algebra_error("polynomials live in different rings: " + a.m_ring.to_string() + " vs "
                                + b.m_ring.to_string());
        }
    }

    static Poly from_map(const PolyRing &ring, std::map<Monomial, Rational> acc)
    {
        Poly p(ring);
        p.m_terms.reserve(acc.size());
        for (auto &[m, c] : acc) {
            if (!c.is_zero()) {
                p.m_terms.push_back({m, std::move(c)});
            }
        }
        TermOrderGreater greater{&p.m_ring};
        std::sort(p.m_terms.begin(), p.m_terms.end(),
                  [&](const Term &x, const Term &y) { return greater(x.monomial, y.monomial); });
        return p;
    }

    PolyRing m_ring;
    std::vector<Term> m_terms;
};

inline std::string Poly::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &t : m_terms) {
        const bool negative = t.coefficient.sign() < 0;
        if (negative) {
            out += '-';
        } else if (!first) {
            out += '+';
        }
        first = false;
        const Rational mag = t.coefficient.abs();
        if (t.monomial.is_one()) {
            out += mag.to_string();
            continue;
        }
        if (!mag.is_one()) {
            out += mag.to_string();
            out += '*';
        }
        out += monomial_to_string(m_ring, t.monomial);
    }
    return out;
}

/// Weighted homogeneity test; `weights` has one entry per ring variable.
/// The zero polynomial is homogeneous.
inline bool is_homogeneous(const Poly &f, std::span<const unsigned> weights)
{
    if (weights.size() != f.ring().size()) {
        throw algebra_error("weight vector length does not match the number of variables");
    }
    bool have = false;
    std::uint64_t deg = 0;
    for (const auto &t : f.terms()) {
        std::uint64_t d = 0;
        for (const auto &[v, e] : t.monomial.entries()) {
            d += static_cast<std::uint64_t>(weights[v]) * e;
        }
        if (have && d != deg) {
            return false;
        }
        have = true;
        deg = d;
    }
    return true;
}

/// Standard grading, all weights 1.
inline bool is_homogeneous(const Poly &f)
{
    std::vector<unsigned> ones(f.ring().size(), 1);
    return is_homogeneous(f, ones);
}

/// Ideal given by an ordered generator list; zero generators are dropped.
class Ideal
{
public:
    explicit Ideal(PolyRing ring) : m_ring(std::move(ring)) {}

    Ideal(PolyRing ring, std::vector<Poly> gens) : m_ring(std::move(ring))
    {
        for (auto &g : gens) {
            if (!(g.ring() == m_ring)) {
                throw algebra_error("ideal generator does not live in " + m_ring.to_string());
            }
            if (!g.is_zero()) {
                m_generators.push_back(std::move(g));
            }
        }
    }

    const PolyRing &ring() const
    {
        return m_ring;
    }
    const std::vector<Poly> &generators() const
    {
        return m_generators;
    }
    bool is_zero() const
    {
        return m_generators.empty();
    }

    friend bool operator==(const Ideal &, const Ideal &) = default;

private:
    PolyRing m_ring;
    std::vector<Poly> m_generators;
};

} // namespace jets

#endif
