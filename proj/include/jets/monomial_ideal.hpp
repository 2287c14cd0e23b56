#ifndef JETS_MONOMIAL_IDEAL_HPP
#define JETS_MONOMIAL_IDEAL_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include <jets/jets.hpp>
#include <jets/poly.hpp>
#include <jets/ring.hpp>

namespace jets
{

/// Sorted list of variable (or vertex) indices.
using IndexSet = std::vector<std::size_t>;

/// Removes duplicates and multiples of other generators; the survivors are
/// sorted descending in the term order of `ring`.
inline std::vector<Monomial> minimalize(const PolyRing &ring, std::vector<Monomial> gens)
{
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // Fewer variables/lower degree first so any divisor is seen before its multiples.
    std::stable_sort(gens.begin(), gens.end(),
                     [](const Monomial &a, const Monomial &b) { return a.degree() < b.degree(); });
    std::vector<Monomial> kept;
    for (auto &g : gens) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial &k) { return k.divides(g); });
        if (!redundant) {
            kept.push_back(std::move(g));
        }
    }
    std::sort(kept.begin(), kept.end(), TermOrderGreater{&ring});
    return kept;
}

/// Ideal generated by monomials, stored minimally.
class MonomialIdeal
{
public:
    explicit MonomialIdeal(PolyRing ring) : m_ring(std::move(ring)) {}

    MonomialIdeal(PolyRing ring, std::vector<Monomial> gens) : m_ring(std::move(ring))
    {
        for (const auto &g : gens) {
            for (const auto &e : g.entries()) {
                if (e.first >= m_ring.size()) {
                    throw algebra_error("monomial refers to a variable outside the ring");
                }
            }
        }
        m_generators = minimalize(m_ring, std::move(gens));
        m_squarefree = std::all_of(m_generators.begin(), m_generators.end(),
                                   [](const Monomial &m) { return m.is_squarefree(); });
    }

    const PolyRing &ring() const
    {
        return m_ring;
    }
    const std::vector<Monomial> &generators() const
    {
        return m_generators;
    }
    bool is_squarefree() const
    {
        return m_squarefree;
    }
    bool is_zero() const
    {
        return m_generators.empty();
    }

    bool contains(const Monomial &m) const
    {
        return std::any_of(m_generators.begin(), m_generators.end(), [&](const Monomial &g) { return g.divides(m); });
    }

    Ideal to_ideal() const
    {
        std::vector<Poly> polys;
        for (const auto &g : m_generators) {
            polys.push_back(Poly::monomial(m_ring, g));
        }
        return Ideal(m_ring, std::move(polys));
    }

    friend bool operator==(const MonomialIdeal &, const MonomialIdeal &) = default;

private:
    PolyRing m_ring;
    std::vector<Monomial> m_generators;
    bool m_squarefree = true;
};

inline bool is_monomial_ideal(const Ideal &ideal)
{
    return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                       [](const Poly &g) { return g.is_monomial(); });
}

inline MonomialIdeal to_monomial_ideal(const Ideal &ideal)
{
    if (!is_monomial_ideal(ideal)) {
        throw algebra_error("not a monomial ideal");
    }
    std::vector<Monomial> gens;
    for (const auto &g : ideal.generators()) {
        gens.push_back(g.terms().front().monomial);
    }
    return MonomialIdeal(ideal.ring(), std::move(gens));
}

/// Radical of the ideal of s-jets of a monomial ideal: generated by the
/// supports of the terms of the jet equations.
inline MonomialIdeal jets_radical(unsigned s, const Ideal &ideal)
{
    if (!is_monomial_ideal(ideal)) {
        throw algebra_error("jets radical requires a monomial ideal");
    }
    JetIdeal jets = jets_ideal(s, ideal);
    std::vector<Monomial> supports;
    for (const auto &g : jets.generators()) {
        for (const auto &t : g.terms()) {
            supports.push_back(t.monomial.support());
        }
    }
    return MonomialIdeal(jets.ring(), std::move(supports));
}

inline MonomialIdeal jets_radical(unsigned s, const MonomialIdeal &ideal)
{
    return jets_radical(s, ideal.to_ideal());
}

namespace detail
{

inline bool index_set_less(const IndexSet &a, const IndexSet &b)
{
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a < b;
}

} // namespace detail

/// Orders sets by size, then lexicographically.
inline void sort_index_sets(std::vector<IndexSet> &sets)
{
    std::sort(sets.begin(), sets.end(), detail::index_set_less);
}

/// All inclusion-minimal transversals of the hypergraph with `edges` over
/// `n` vertices, by Berge's incremental product-and-minimalize. No edges
/// yields the single empty transversal; an empty edge yields none.
inline std::vector<IndexSet> minimal_transversals(std::size_t n, const std::vector<IndexSet> &edges)
{
    using Bits = boost::dynamic_bitset<>;
    std::vector<Bits> current{Bits(n)};
    for (const auto &edge : edges) {
        Bits e(n);
        for (auto v : edge) {
            e.set(v);
        }
        std::vector<Bits> hit, extended;
        for (const auto &t : current) {
            if (t.intersects(e)) {
                hit.push_back(t);
            } else {
                for (auto v = e.find_first(); v != Bits::npos; v = e.find_next(v)) {
                    Bits u = t;
                    u.set(v);
                    extended.push_back(std::move(u));
                }
            }
        }
        // Sets in `hit` are already pairwise incomparable; only the
        // extensions can be non-minimal.
        std::vector<Bits> next = hit;
        std::sort(extended.begin(), extended.end(),
                  [](const Bits &a, const Bits &b) { return a.count() < b.count(); });
        std::vector<Bits> kept_ext;
        for (auto &x : extended) {
            auto covers = [&](const Bits &y) { return y.is_subset_of(x); };
            if (std::any_of(hit.begin(), hit.end(), covers) || std::any_of(kept_ext.begin(), kept_ext.end(), covers)) {
                continue;
            }
            kept_ext.push_back(std::move(x));
        }
        next.insert(next.end(), kept_ext.begin(), kept_ext.end());
        current = std::move(next);
    }
    std::vector<IndexSet> out;
    out.reserve(current.size());
    for (const auto &t : current) {
        IndexSet s;
        for (auto v = t.find_first(); v != Bits::npos; v = t.find_next(v)) {
            s.push_back(v);
        }
        out.push_back(std::move(s));
    }
    sort_index_sets(out);
    return out;
}

/// Minimal primes of a squarefree monomial ideal, each given by the indices
/// of the variables generating it. Sorted by size, then lexicographically.
inline std::vector<IndexSet> minimal_primes_squarefree(const MonomialIdeal &ideal)
{
    if (!ideal.is_squarefree()) {
        throw algebra_error("minimal primes are only computed for squarefree monomial ideals");
    }
    std::vector<IndexSet> edges;
    for (const auto &g : ideal.generators()) {
        edges.push_back(g.support_indices());
    }
    return minimal_transversals(ideal.ring().size(), edges);
}

/// "(x0, y0, z0)"-style rendering of a variable set.
inline std::string index_set_to_string(const PolyRing &ring, const IndexSet &set, const std::string &sep = ", ")
{
    std::string out;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i != 0) {
            out += sep;
        }
        out += ring.variable(set[i]).name();
    }
    return out;
}

} // namespace jets

#endif
