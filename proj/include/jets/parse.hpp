#ifndef JETS_PARSE_HPP
#define JETS_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <jets/poly.hpp>
#include <jets/rational.hpp>
#include <jets/ring.hpp>

namespace jets
{

/// Syntax error at a byte offset of the parsed text.
class parse_error : public std::runtime_error
{
public:
    parse_error(std::size_t offset, const std::string &what)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), m_offset(offset), m_message(what)
    {
    }
    std::size_t offset() const
    {
        return m_offset;
    }
    const std::string &message() const
    {
        return m_message;
    }

private:
    std::size_t m_offset;
    std::string m_message;
};

/// Identifier that does not name a ring variable.
class unknown_variable_error : public algebra_error
{
public:
    unknown_variable_error(std::size_t offset, const std::string &name)
        : algebra_error("unknown variable '" + name + "'"), m_offset(offset), m_name(name)
    {
    }
    std::size_t offset() const
    {
        return m_offset;
    }
    const std::string &name() const
    {
        return m_name;
    }

private:
    std::size_t m_offset;
    std::string m_name;
};

namespace detail
{

// Recursive descent over
//   poly   := ['-'] term { ('+'|'-') term }
//   term   := coeff { '*' factor } | factor { '*' factor }
//   factor := var [ '^' nat ]
//   coeff  := int [ '/' nat ]
//   var    := ident [ '_' '(' nat { ',' nat } ')' ]
class PolyParser
{
public:
    PolyParser(std::string_view text, const PolyRing &ring) : m_text(text), m_ring(ring) {}

    Poly parse_all()
    {
        Poly p = parse_poly();
        skip_ws();
        if (m_pos != m_text.size()) {
            fail("unexpected '" + std::string(1, m_text[m_pos]) + "'");
        }
        return p;
    }

private:
    Poly parse_poly()
    {
        std::vector<Term> terms;
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            ++m_pos;
            negate = true;
        }
        terms.push_back(parse_term(negate));
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') {
                break;
            }
            ++m_pos;
            terms.push_back(parse_term(c == '-'));
        }
        return Poly::from_terms(m_ring, std::move(terms));
    }

    Term parse_term(bool negate)
    {
        skip_ws();
        Rational coeff(1);
        std::vector<Monomial::Entry> entries;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_coeff();
        } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
            parse_factor(entries);
        } else {
            fail(m_pos < m_text.size() ? "expected a term" : "unexpected end of input, expected a term");
        }
        for (;;) {
            skip_ws();
            if (peek() != '*') {
                break;
            }
            ++m_pos;
            skip_ws();
            if (!std::isalpha(static_cast<unsigned char>(peek()))) {
                fail("expected a variable after '*'");
            }
            parse_factor(entries);
        }
        if (negate) {
            coeff = -coeff;
        }
        return Term{Monomial::from_entries(std::move(entries)), coeff};
    }

    Rational parse_coeff()
    {
        Integer num(parse_digits());
        skip_ws();
        if (peek() == '/') {
            ++m_pos;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                fail("expected a denominator");
            }
            std::size_t at = m_pos;
            Integer den(parse_digits());
            if (den == 0) {
                fail_at(at, "zero denominator");
            }
            return Rational(num, den);
        }
        return Rational(num);
    }

    void parse_factor(std::vector<Monomial::Entry> &entries)
    {
        std::size_t start = m_pos;
        std::string name = parse_ident();
        skip_ws();
        if (peek() == '_') {
            ++m_pos;
            skip_ws();
            expect('(');
            name += "_(";
            bool first = true;
            for (;;) {
                skip_ws();
                if (!first) {
                    name += ',';
                }
                first = false;
                name += std::to_string(parse_small_nat());
                skip_ws();
                if (peek() == ',') {
                    ++m_pos;
                    continue;
                }
                expect(')');
                break;
            }
            name += ')';
        }
        auto index = m_ring.find(name);
        if (!index) {
            throw unknown_variable_error(start, name);
        }
        std::uint32_t exponent = 1;
        skip_ws();
        if (peek() == '^') {
            ++m_pos;
            skip_ws();
            exponent = parse_small_nat();
        }
        entries.emplace_back(static_cast<std::uint32_t>(*index), exponent);
    }

    std::string parse_ident()
    {
        std::size_t start = m_pos;
        while (m_pos < m_text.size() && std::isalnum(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
        return std::string(m_text.substr(start, m_pos - start));
    }

    std::string parse_digits()
    {
        std::size_t start = m_pos;
        while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
        if (start == m_pos) {
            fail("expected a number");
        }
        return std::string(m_text.substr(start, m_pos - start));
    }

    std::uint32_t parse_small_nat()
    {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("expected a natural number");
        }
        std::size_t at = m_pos;
        std::string digits = parse_digits();
        if (digits.size() > 9) {
            fail_at(at, "number too large");
        }
        return static_cast<std::uint32_t>(std::stoul(digits));
    }

    void expect(char c)
    {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++m_pos;
    }

    char peek() const
    {
        return m_pos < m_text.size() ? m_text[m_pos] : '\0';
    }

    void skip_ws()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }

    [[noreturn]] void fail(const std::string &msg) const
    {
        fail_at(m_pos, msg);
    }
    [[noreturn]] void fail_at(std::size_t at, const std::string &msg) const
    {
        throw parse_error(at, msg);
    }

    std::string_view m_text;
    const PolyRing &m_ring;
    std::size_t m_pos = 0;
};

} // namespace detail

/// Parses `text` as a polynomial of `ring`. Throws parse_error on malformed
/// input and unknown_variable_error for identifiers not in the ring.
inline Poly parse_poly(std::string_view text, const PolyRing &ring)
{
    return detail::PolyParser(text, ring).parse_all();
}

/// Splits at top-level commas (commas inside "_(...)" subscripts are kept).
/// Returns (offset, piece) pairs.
inline std::vector<std::pair<std::size_t, std::string_view>> split_top_level(std::string_view text, char sep = ',')
{
    std::vector<std::pair<std::size_t, std::string_view>> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            --depth;
        } else if (c == sep && depth == 0) {
            out.emplace_back(start, text.substr(start, i - start));
            start = i + 1;
        }
    }
    out.emplace_back(start, text.substr(start));
    return out;
}

} // namespace jets

#endif
