#ifndef JETS_TESTS_FIXTURES_HPP
#define JETS_TESTS_FIXTURES_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include <jets.hpp>

namespace fixtures
{

// Five-vertex graph with edges ac, ad, ae, bc, bd, be, ce.
inline jets::Graph pentagon_graph()
{
    return jets::Graph::from_names({"a", "b", "c", "d", "e"}, {{"a", "c"},
                                                               {"a", "d"},
                                                               {"a", "e"},
                                                               {"b", "c"},
                                                               {"b", "d"},
                                                               {"b", "e"},
                                                               {"c", "e"}});
}

inline jets::Ideal xyz_ideal()
{
    auto r = jets::make_ring({"x", "y", "z"});
    return jets::Ideal(r, {jets::parse_poly("x*y*z", r)});
}

// Ring x_(1,1), x_(1,2), ..., x_(3,3).
inline jets::PolyRing matrix_ring(unsigned m = 3, unsigned n = 3)
{
    std::vector<jets::Variable> vars;
    for (unsigned i = 1; i <= m; ++i) {
        for (unsigned j = 1; j <= n; ++j) {
            vars.emplace_back("x", std::vector<unsigned>{i, j});
        }
    }
    return jets::PolyRing(std::move(vars));
}

inline std::vector<std::string> edge_strings(const jets::Graph &g)
{
    std::vector<std::string> out;
    for (const auto &e : g.edges()) {
        out.push_back(g.edge_to_string(e));
    }
    return out;
}

// Unordered edge {u, v} as a sorted name pair.
inline std::set<std::pair<std::string, std::string>> edge_name_set(const jets::Graph &g)
{
    std::set<std::pair<std::string, std::string>> out;
    for (auto [u, v] : g.edge_set()) {
        auto a = g.ring().variable(u).name();
        auto b = g.ring().variable(v).name();
        if (b < a) {
            std::swap(a, b);
        }
        out.emplace(a, b);
    }
    return out;
}

inline std::set<std::set<std::string>> name_sets(const jets::PolyRing &ring, const std::vector<jets::IndexSet> &sets)
{
    std::set<std::set<std::string>> out;
    for (const auto &s : sets) {
        std::set<std::string> names;
        for (auto i : s) {
            names.insert(ring.variable(i).name());
        }
        out.insert(names);
    }
    return out;
}

} // namespace fixtures

#endif
