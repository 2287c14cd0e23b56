#ifndef JETS_GRAPH_HPP
#define JETS_GRAPH_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <jets/monomial_ideal.hpp>
#include <jets/ring.hpp>

namespace jets
{

/// Finite simple graph whose vertices are the variables of a ring, so the
/// edge ideal lives in that ring.
class Graph
{
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    Graph() = default;

    Graph(PolyRing ring, const std::vector<Edge> &edges) : m_ring(std::move(ring)), m_adj(m_ring.size())
    {
        for (auto [u, v] : edges) {
            add_edge(u, v);
        }
    }

    /// Graph on named vertices, e.g. from_names({"a","b"}, {{"a","b"}}).
    static Graph from_names(const std::vector<std::string> &vertices,
                            const std::vector<std::pair<std::string, std::string>> &edges)
    {
        std::vector<Variable> vars;
        for (const auto &v : vertices) {
            vars.emplace_back(v);
        }
        PolyRing ring(std::move(vars));
        std::vector<Edge> es;
        for (const auto &[a, b] : edges) {
            auto ia = ring.find(a);
            auto ib = ring.find(b);
            if (!ia || !ib) {
                throw algebra_error("edge endpoint is not a vertex: " + (ia ? b : a));
            }
            es.emplace_back(*ia, *ib);
        }
        return Graph(std::move(ring), es);
    }

    const PolyRing &ring() const
    {
        return m_ring;
    }
    const std::vector<Variable> &vertices() const
    {
        return m_ring.variables();
    }
    std::size_t vertex_count() const
    {
        return m_ring.size();
    }
    std::size_t edge_count() const
    {
        return m_edges.size();
    }
    /// Edges as (u, v) with u < v, lexicographically sorted.
    const std::set<Edge> &edge_set() const
    {
        return m_edges;
    }
    bool adjacent(std::size_t u, std::size_t v) const
    {
        return m_adj.at(u).count(v) != 0;
    }
    const std::set<std::size_t> &neighbours(std::size_t v) const
    {
        return m_adj.at(v);
    }

    std::size_t display_rank(std::size_t v) const
    {
        return tower_display_rank(m_ring, v);
    }

    /// Edges oriented and ordered for display: each edge {u, v} has u before
    /// v in display rank, and edges are sorted by (rank v, rank u).
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (auto [u, v] : m_edges) {
            if (display_rank(u) > display_rank(v)) {
                std::swap(u, v);
            }
            out.emplace_back(u, v);
        }
        std::sort(out.begin(), out.end(), [&](const Edge &a, const Edge &b) {
            auto ka = std::pair(display_rank(a.second), display_rank(a.first));
            auto kb = std::pair(display_rank(b.second), display_rank(b.first));
            return ka < kb;
        });
        return out;
    }

    std::string edge_to_string(const Edge &e) const
    {
        return "{" + m_ring.variable(e.first).name() + ", " + m_ring.variable(e.second).name() + "}";
    }

    friend bool operator==(const Graph &a, const Graph &b)
    {
        return a.m_ring == b.m_ring && a.m_edges == b.m_edges;
    }

private:
    void add_edge(std::size_t u, std::size_t v)
    {
        if (u >= m_ring.size() || v >= m_ring.size()) {
            throw algebra_error("edge endpoint out of range");
        }
        if (u == v) {
            throw algebra_error("loops are not allowed in a simple graph");
        }
        if (u > v) {
            std::swap(u, v);
        }
        m_edges.emplace(u, v);
        m_adj[u].insert(v);
        m_adj[v].insert(u);
    }

    PolyRing m_ring;
    std::set<Edge> m_edges;
    std::vector<std::set<std::size_t>> m_adj;
};

/// Hypergraph on the variables of a ring; edges form an antichain.
class HyperGraph
{
public:
    HyperGraph() = default;

    HyperGraph(PolyRing ring, std::vector<IndexSet> edges) : m_ring(std::move(ring))
    {
        for (auto &e : edges) {
            std::sort(e.begin(), e.end());
            e.erase(std::unique(e.begin(), e.end()), e.end());
            if (e.empty()) {
                throw algebra_error("hypergraph edges must be nonempty");
            }
            if (e.back() >= m_ring.size()) {
                throw algebra_error("hyperedge endpoint out of range");
            }
        }
        sort_index_sets(edges);
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        for (auto &e : edges) {
            bool contains_other = std::any_of(m_edges.begin(), m_edges.end(), [&](const IndexSet &k) {
                return std::includes(e.begin(), e.end(), k.begin(), k.end());
            });
            if (!contains_other) {
                m_edges.push_back(std::move(e));
            }
        }
    }

    const PolyRing &ring() const
    {
        return m_ring;
    }
    const std::vector<Variable> &vertices() const
    {
        return m_ring.variables();
    }
    /// Sorted by size, then lexicographically.
    const std::vector<IndexSet> &edges() const
    {
        return m_edges;
    }

    friend bool operator==(const HyperGraph &, const HyperGraph &) = default;

private:
    PolyRing m_ring;
    std::vector<IndexSet> m_edges;
};

inline Monomial product_of(const IndexSet &vertices)
{
    std::vector<Monomial::Entry> entries;
    for (auto v : vertices) {
        entries.emplace_back(static_cast<std::uint32_t>(v), 1);
    }
    return Monomial::from_entries(std::move(entries));
}

inline MonomialIdeal edge_ideal(const Graph &g)
{
    std::vector<Monomial> gens;
    for (auto [u, v] : g.edge_set()) {
        gens.push_back(product_of({u, v}));
    }
    return MonomialIdeal(g.ring(), std::move(gens));
}

inline MonomialIdeal edge_ideal(const HyperGraph &h)
{
    std::vector<Monomial> gens;
    for (const auto &e : h.edges()) {
        gens.push_back(product_of(e));
    }
    return MonomialIdeal(h.ring(), std::move(gens));
}

/// Inverse of edge_ideal for quadratic squarefree monomial ideals.
inline Graph graph_from_edge_ideal(const MonomialIdeal &ideal)
{
    std::vector<Graph::Edge> edges;
    for (const auto &g : ideal.generators()) {
        if (g.degree() != 2 || !g.is_squarefree()) {
            throw algebra_error("generator " + monomial_to_string(ideal.ring(), g)
                                + " is not a squarefree quadratic monomial");
        }
        const auto &e = g.entries();
        edges.emplace_back(e[0].first, e[1].first);
    }
    return Graph(ideal.ring(), edges);
}

inline HyperGraph hypergraph_from_edge_ideal(const MonomialIdeal &ideal)
{
    if (!ideal.is_squarefree()) {
        throw algebra_error("hypergraph requires a squarefree monomial ideal");
    }
    std::vector<IndexSet> edges;
    for (const auto &g : ideal.generators()) {
        edges.push_back(g.support_indices());
    }
    return HyperGraph(ideal.ring(), std::move(edges));
}

namespace detail
{

// Iterated jets are not supported; only plain vertex sets can be jetted.
inline void require_plain(const PolyRing &ring)
{
    if (ring.is_jet_ring()) {
        throw algebra_error("jets of a jet graph are not supported");
    }
}

} // namespace detail

/// Graph of s-jets: the graph of the radical of J_s(I(G)), on the (s+1)|V|
/// jet vertices (order 0 block first).
inline Graph jets_graph(unsigned s, const Graph &g)
{
    detail::require_plain(g.ring());
    return graph_from_edge_ideal(jets_radical(s, edge_ideal(g)));
}

inline HyperGraph jets_hypergraph(unsigned s, const HyperGraph &h)
{
    detail::require_plain(h.ring());
    return hypergraph_from_edge_ideal(jets_radical(s, edge_ideal(h)));
}

inline Graph complement_graph(const Graph &g)
{
    std::vector<Graph::Edge> edges;
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
            if (!g.adjacent(u, v)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(g.ring(), edges);
}

/// Chordality via maximum cardinality search followed by a perfect
/// elimination ordering check.
inline bool is_chordal(const Graph &g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> weight(n, 0);
    std::vector<bool> numbered(n, false);
    std::vector<std::size_t> order; // visit order; reversed it is a PEO
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (!numbered[v] && (best == n || weight[v] > weight[best])) {
                best = v;
            }
        }
        numbered[best] = true;
        order.push_back(best);
        for (auto w : g.neighbours(best)) {
            if (!numbered[w]) {
                ++weight[w];
            }
        }
    }
    // position in the elimination ordering (reverse of visit order)
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) {
        pos[order[i]] = n - 1 - i;
    }
    // For each v, its later neighbours minus the earliest one must all be
    // adjacent to that earliest later neighbour.
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::size_t> later;
        for (auto w : g.neighbours(v)) {
            if (pos[w] > pos[v]) {
                later.push_back(w);
            }
        }
        if (later.empty()) {
            continue;
        }
        auto parent = *std::min_element(later.begin(), later.end(),
                                        [&](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });
        for (auto w : later) {
            if (w != parent && !g.adjacent(parent, w)) {
                return false;
            }
        }
    }
    return true;
}

namespace detail
{

class ColouringSearch
{
public:
    explicit ColouringSearch(const Graph &g) : m_graph(g), m_colour(g.vertex_count(), -1) {}

    // DSATUR-ordered backtracking: can the graph be coloured with k colours?
    bool colourable(int k)
    {
        std::fill(m_colour.begin(), m_colour.end(), -1);
        m_k = k;
        return extend(0);
    }

private:
    bool extend(std::size_t coloured)
    {
        const std::size_t n = m_graph.vertex_count();
        if (coloured == n) {
            return true;
        }
        // uncoloured vertex with most distinct neighbour colours, ties by degree
        std::size_t pick = n;
        std::size_t pick_sat = 0, pick_deg = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (m_colour[v] >= 0) {
                continue;
            }
            std::set<int> seen;
            for (auto w : m_graph.neighbours(v)) {
                if (m_colour[w] >= 0) {
                    seen.insert(m_colour[w]);
                }
            }
            std::size_t sat = seen.size();
            std::size_t deg = m_graph.neighbours(v).size();
            if (pick == n || sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int used = 0;
        for (auto c : m_colour) {
            used = std::max(used, c + 1);
        }
        // new colours are interchangeable: try at most one unused colour
        const int limit = std::min(m_k, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool clash = false;
            for (auto w : m_graph.neighbours(pick)) {
                if (m_colour[w] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) {
                continue;
            }
            m_colour[pick] = c;
            if (extend(coloured + 1)) {
                return true;
            }
            m_colour[pick] = -1;
        }
        return false;
    }

    const Graph &m_graph;
    std::vector<int> m_colour;
    int m_k = 0;
};

inline std::size_t greedy_clique_size(const Graph &g)
{
    std::size_t best = 0;
    for (std::size_t start = 0; start < g.vertex_count(); ++start) {
        std::vector<std::size_t> clique{start};
        std::vector<std::size_t> candidates(g.neighbours(start).begin(), g.neighbours(start).end());
        std::sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
            return g.neighbours(a).size() > g.neighbours(b).size();
        });
        for (auto c : candidates) {
            if (std::all_of(clique.begin(), clique.end(), [&](std::size_t q) { return g.adjacent(q, c); })) {
                clique.push_back(c);
            }
        }
        best = std::max(best, clique.size());
    }
    return best;
}

inline std::size_t greedy_colour_count(const Graph &g)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return g.neighbours(a).size() > g.neighbours(b).size();
    });
    std::vector<int> colour(n, -1);
    int used = 0;
    for (auto v : order) {
        std::vector<bool> taken(n + 1, false);
        for (auto w : g.neighbours(v)) {
            if (colour[w] >= 0) {
                taken[colour[w]] = true;
            }
        }
        int c = 0;
        while (taken[c]) {
            ++c;
        }
        colour[v] = c;
        used = std::max(used, c + 1);
    }
    return static_cast<std::size_t>(used);
}

} // namespace detail

inline constexpr std::size_t default_chromatic_vertex_bound = 32;

/// Exact chromatic number: tries k from a clique lower bound up to one
/// below a greedy upper bound.
inline std::size_t chromatic_number(const Graph &g, std::size_t vertex_bound = default_chromatic_vertex_bound)
{
    if (g.vertex_count() > vertex_bound) {
        throw algebra_error("chromatic number limited to " + std::to_string(vertex_bound) + " vertices, graph has "
                            + std::to_string(g.vertex_count()));
    }
    if (g.vertex_count() == 0) {
        return 0;
    }
    const std::size_t lower = std::max<std::size_t>(1, detail::greedy_clique_size(g));
    const std::size_t upper = detail::greedy_colour_count(g);
    detail::ColouringSearch search(g);
    for (std::size_t k = lower; k < upper; ++k) {
        if (search.colourable(static_cast<int>(k))) {
            return k;
        }
    }
    return upper;
}

/// Inclusion-minimal vertex covers, sorted by size then lexicographically.
inline std::vector<IndexSet> minimal_vertex_covers(const Graph &g)
{
    return minimal_primes_squarefree(edge_ideal(g));
}

inline std::vector<IndexSet> minimal_vertex_covers(const HyperGraph &h)
{
    return minimal_primes_squarefree(edge_ideal(h));
}

/// Parses the edge-list format: one "u-v" (or "u-v-w" for hyperedges) per
/// line or comma-separated, optional "vertices a,b,c" header, '#' comments.
/// Header vertices keep their order; other vertices follow sorted by name.
struct EdgeList {
    std::vector<std::string> vertices;
    std::vector<std::vector<std::string>> edges;
};

inline EdgeList parse_edge_list(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
            s.remove_prefix(1);
        }
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
            s.remove_suffix(1);
        }
        return s;
    };
    auto split = [](std::string_view s, char sep) {
        std::vector<std::string_view> parts;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= s.size(); ++i) {
            if (i == s.size() || s[i] == sep) {
                parts.push_back(s.substr(start, i - start));
                start = i + 1;
            }
        }
        return parts;
    };

    EdgeList out;
    std::set<std::string> known;
    std::size_t declared = 0;
    auto declare = [&](const std::string &v) {
        if (!valid_base_name(v)) {
            throw algebra_error("invalid vertex name '" + v + "'");
        }
        if (known.insert(v).second) {
            out.vertices.push_back(v);
        }
    };

    for (auto raw_line : split(text, '\n')) {
        auto line = raw_line.substr(0, raw_line.find('#'));
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.substr(0, 8) == "vertices" && (line.size() == 8 || std::isspace(static_cast<unsigned char>(line[8])))) {
            for (auto v : split(line.substr(8), ',')) {
                v = trim(v);
                if (!v.empty()) {
                    declare(std::string(v));
                }
            }
            declared = out.vertices.size();
            continue;
        }
        for (auto item : split(line, ',')) {
            item = trim(item);
            if (item.empty()) {
                continue;
            }
            std::vector<std::string> edge;
            for (auto v : split(item, '-')) {
                v = trim(v);
                declare(std::string(v));
                edge.emplace_back(v);
            }
            out.edges.push_back(std::move(edge));
        }
    }
    std::sort(out.vertices.begin() + static_cast<std::ptrdiff_t>(declared), out.vertices.end());
    return out;
}

inline Graph graph_from_edge_list(const EdgeList &list)
{
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto &e : list.edges) {
        if (e.size() != 2) {
            throw algebra_error("graph edges must have exactly two endpoints");
        }
        edges.emplace_back(e[0], e[1]);
    }
    return Graph::from_names(list.vertices, edges);
}

inline HyperGraph hypergraph_from_edge_list(const EdgeList &list)
{
    std::vector<Variable> vars;
    for (const auto &v : list.vertices) {
        vars.emplace_back(v);
    }
    PolyRing ring(std::move(vars));
    std::vector<IndexSet> edges;
    for (const auto &e : list.edges) {
        IndexSet set;
        for (const auto &v : e) {
            set.push_back(*ring.find(v));
        }
        edges.push_back(std::move(set));
    }
    return HyperGraph(std::move(ring), std::move(edges));
}

} // namespace jets

#endif
