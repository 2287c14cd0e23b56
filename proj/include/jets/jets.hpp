#ifndef JETS_JETS_HPP
#define JETS_JETS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <jets/poly.hpp>
#include <jets/ring.hpp>

namespace jets
{

/// The ring J_s(R): for every base variable x_k the jet variables
/// x_{k,0}, ..., x_{k,s}. Laid out as blocks of equal jet order,
/// order 0 first, so that variable x_{k,j} sits at index j * n + k.
class JetRing
{
public:
    JetRing(PolyRing base, unsigned order) : m_base(std::move(base)), m_order(order)
    {
        if (m_base.is_jet_ring() || m_base.blocks().size() > 1) {
            throw algebra_error("cannot take jets of " + m_base.to_string() + ": iterated jets are not supported");
        }
        const std::size_t n = m_base.size();
        std::vector<Variable> vars;
        std::vector<Block> blocks;
        std::vector<unsigned> weights;
        vars.reserve((order + 1) * n);
        for (unsigned j = 0; j <= order; ++j) {
            if (n != 0) {
                blocks.push_back(Block{j * n, (j + 1) * n, j});
            }
            for (const auto &v : m_base.variables()) {
                vars.push_back(v.with_jet_order(j));
                weights.push_back(j);
            }
        }
        m_ring = PolyRing(std::move(vars), std::move(blocks), std::move(weights));
    }

    const PolyRing &base() const
    {
        return m_base;
    }
    const PolyRing &ring() const
    {
        return m_ring;
    }
    unsigned order() const
    {
        return m_order;
    }

    std::size_t jet_index(std::size_t base_var, unsigned j) const
    {
        return static_cast<std::size_t>(j) * m_base.size() + base_var;
    }

    Poly jet_variable(std::size_t base_var, unsigned j) const
    {
        return Poly::variable(m_ring, jet_index(base_var, j));
    }

    /// Weight vector with wt(x_{k,j}) = j.
    const std::vector<unsigned> &jet_weights() const
    {
        return *m_ring.weights();
    }

    friend bool operator==(const JetRing &a, const JetRing &b)
    {
        return a.m_order == b.m_order && a.m_base == b.m_base;
    }

private:
    PolyRing m_base;
    unsigned m_order;
    PolyRing m_ring;
};

inline JetRing jet_ring(const PolyRing &base, unsigned order)
{
    return JetRing(base, order);
}

/// c_0 + c_1 t + ... + c_s t^s modulo t^{s+1}, coefficients in a jet ring.
class TruncatedSeries
{
public:
    TruncatedSeries(const JetRing &ring, std::vector<Poly> coeffs) : m_ring(&ring), m_coeffs(std::move(coeffs))
    {
        if (m_coeffs.size() != ring.order() + 1) {
            throw algebra_error("truncated series needs exactly order+1 coefficients");
        }
    }

    static TruncatedSeries constant(const JetRing &ring, const Rational &c)
    {
        std::vector<Poly> coeffs(ring.order() + 1, Poly(ring.ring()));
        coeffs[0] = Poly::constant(ring.ring(), c);
        return TruncatedSeries(ring, std::move(coeffs));
    }

    /// x_k -> sum_j x_{k,j} t^j.
    static TruncatedSeries of_variable(const JetRing &ring, std::size_t base_var)
    {
        std::vector<Poly> coeffs;
        coeffs.reserve(ring.order() + 1);
        for (unsigned j = 0; j <= ring.order(); ++j) {
            coeffs.push_back(ring.jet_variable(base_var, j));
        }
        return TruncatedSeries(ring, std::move(coeffs));
    }

    const JetRing &jet_ring() const
    {
        return *m_ring;
    }
    unsigned order() const
    {
        return m_ring->order();
    }
    const std::vector<Poly> &coefficients() const &
    {
        return m_coeffs;
    }
    std::vector<Poly> coefficients() &&
    {
        return std::move(m_coeffs);
    }
    const Poly &operator[](std::size_t j) const
    {
        return m_coeffs.at(j);
    }

    friend TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        std::vector<Poly> out;
        out.reserve(a.m_coeffs.size());
        for (std::size_t j = 0; j < a.m_coeffs.size(); ++j) {
            out.push_back(a.m_coeffs[j] + b.m_coeffs.at(j));
        }
        return TruncatedSeries(*a.m_ring, std::move(out));
    }

    // Cauchy product, discarding t^k for k > s.
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        const std::size_t len = a.m_coeffs.size();
        std::vector<Poly> out(len, Poly(a.m_ring->ring()));
        for (std::size_t i = 0; i < len; ++i) {
            if (a.m_coeffs[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; i + j < len; ++j) {
                if (!b.m_coeffs.at(j).is_zero()) {
                    out[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
                }
            }
        }
        return TruncatedSeries(*a.m_ring, std::move(out));
    }

    friend TruncatedSeries operator*(const Rational &c, const TruncatedSeries &s)
    {
        std::vector<Poly> out;
        out.reserve(s.m_coeffs.size());
        for (const auto &p : s.m_coeffs) {
            out.push_back(c * p);
        }
        return TruncatedSeries(*s.m_ring, std::move(out));
    }

    TruncatedSeries pow(std::uint32_t e) const
    {
        TruncatedSeries result = constant(*m_ring, Rational(1));
        TruncatedSeries base = *this;
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

private:
    const JetRing *m_ring;
    std::vector<Poly> m_coeffs;
};

/// Evaluates f at x_k = sum_j x_{k,j} t^j modulo t^{s+1}; coefficient j of the
/// result is the jet equation f_j. The series refers to `jr`, which must
/// outlive it.
inline TruncatedSeries series_substitute(const Poly &f, const JetRing &jr)
{
    if (!(f.ring() == jr.base())) {
        throw algebra_error("polynomial ring " + f.ring().to_string() + " is not the base of the jet ring "
                            + jr.ring().to_string());
    }
    std::vector<TruncatedSeries> var_series;
    var_series.reserve(jr.base().size());
    for (std::size_t k = 0; k < jr.base().size(); ++k) {
        var_series.push_back(TruncatedSeries::of_variable(jr, k));
    }
    TruncatedSeries total = TruncatedSeries::constant(jr, Rational(0));
    for (const auto &t : f.terms()) {
        TruncatedSeries term = TruncatedSeries::constant(jr, t.coefficient);
        for (const auto &[v, e] : t.monomial.entries()) {
            term = term * var_series[v].pow(e);
        }
        total = total + term;
    }
    return total;
}

/// The ideal of s-jets. Generators are the nonzero coefficients f_{i,j},
/// grouped by source generator with j descending inside each group.
class JetIdeal
{
public:
    JetIdeal(JetRing ring, Ideal source)
        : m_ring(std::move(ring)), m_source(std::move(source)), m_ideal(m_ring.ring())
    {
        if (!(m_source.ring() == m_ring.base())) {
            throw algebra_error("ideal does not live in the base of the jet ring");
        }
        std::vector<Poly> gens;
        for (std::size_t i = 0; i < m_source.generators().size(); ++i) {
            TruncatedSeries series = series_substitute(m_source.generators()[i], m_ring);
            for (unsigned j = m_ring.order() + 1; j-- > 0;) {
                if (!series[j].is_zero()) {
                    gens.push_back(series[j]);
                    m_origin.emplace_back(i, j);
                }
            }
        }
        m_ideal = Ideal(m_ring.ring(), std::move(gens));
    }

    const JetRing &jet_ring() const
    {
        return m_ring;
    }
    const PolyRing &ring() const
    {
        return m_ring.ring();
    }
    const Ideal &source() const
    {
        return m_source;
    }
    const Ideal &ideal() const
    {
        return m_ideal;
    }
    const std::vector<Poly> &generators() const
    {
        return m_ideal.generators();
    }
    /// (source generator index, jet order) of each generator.
    const std::vector<std::pair<std::size_t, unsigned>> &origins() const
    {
        return m_origin;
    }

private:
    JetRing m_ring;
    Ideal m_source;
    Ideal m_ideal;
    std::vector<std::pair<std::size_t, unsigned>> m_origin;
};

inline JetIdeal jets_ideal(unsigned s, const Ideal &ideal)
{
    return JetIdeal(JetRing(ideal.ring(), s), ideal);
}

/// J_s(R)/J_s(I) as a (jet ring, jet ideal) pair.
struct JetQuotient {
    JetRing ring;
    JetIdeal ideal;
};

inline JetQuotient jets_quotient(unsigned s, const PolyRing &ring, const Ideal &ideal)
{
    if (!(ideal.ring() == ring)) {
        throw algebra_error("ideal does not live in " + ring.to_string());
    }
    JetRing jr(ring, s);
    return JetQuotient{jr, JetIdeal(jr, ideal)};
}

/// Ring homomorphism given by the images of the source variables.
class RingMap
{
public:
    RingMap(PolyRing source, PolyRing target, std::vector<Poly> images)
        : m_source(std::move(source)), m_target(std::move(target)), m_images(std::move(images))
    {
        if (m_images.size() != m_source.size()) {
            throw algebra_error("ring map needs one image per source variable");
        }
        for (const auto &img : m_images) {
            if (!(img.ring() == m_target)) {
                throw algebra_error("ring map image does not live in the target ring");
            }
        }
    }

    static RingMap identity(const PolyRing &ring)
    {
        std::vector<Poly> images;
        for (std::size_t i = 0; i < ring.size(); ++i) {
            images.push_back(Poly::variable(ring, i));
        }
        return RingMap(ring, ring, std::move(images));
    }

    const PolyRing &source() const
    {
        return m_source;
    }
    const PolyRing &target() const
    {
        return m_target;
    }
    const std::vector<Poly> &images() const
    {
        return m_images;
    }

    Poly operator()(const Poly &f) const
    {
        if (!(f.ring() == m_source)) {
            throw algebra_error("polynomial is not in the source of the ring map");
        }
        Poly out(m_target);
        for (const auto &t : f.terms()) {
            Poly term = Poly::constant(m_target, t.coefficient);
            for (const auto &[v, e] : t.monomial.entries()) {
                term = term * m_images[v].pow(e);
            }
            out += term;
        }
        return out;
    }

    friend bool operator==(const RingMap &, const RingMap &) = default;

private:
    PolyRing m_source;
    PolyRing m_target;
    std::vector<Poly> m_images;
};

/// outer after inner: x -> outer(inner(x)).
inline RingMap compose(const RingMap &outer, const RingMap &inner)
{
    if (!(inner.target() == outer.source())) {
        throw algebra_error("ring maps are not composable");
    }
    std::vector<Poly> images;
    for (const auto &img : inner.images()) {
        images.push_back(outer(img));
    }
    return RingMap(inner.source(), outer.target(), std::move(images));
}

/// J_s(phi): J_s(source) -> J_s(target), x_{k,j} -> t^j coefficient of
/// phi(x_k) evaluated at the target's truncated series.
struct RingMapJets {
    JetRing source;
    JetRing target;
    RingMap map;

    Poly operator()(const Poly &f) const
    {
        return map(f);
    }
};

inline RingMapJets jets_ring_map(unsigned s, const RingMap &phi)
{
    JetRing src(phi.source(), s);
    JetRing tgt(phi.target(), s);
    std::vector<Poly> images(src.ring().size(), Poly(tgt.ring()));
    for (std::size_t k = 0; k < phi.source().size(); ++k) {
        TruncatedSeries series = series_substitute(phi.images()[k], tgt);
        for (unsigned j = 0; j <= s; ++j) {
            images[src.jet_index(k, j)] = series[j];
        }
    }
    RingMap map(src.ring(), tgt.ring(), std::move(images));
    return RingMapJets{std::move(src), std::move(tgt), std::move(map)};
}

} // namespace jets

#endif
