#ifndef JETS_SCRIPT_HPP
#define JETS_SCRIPT_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include <jets/graph.hpp>
#include <jets/jets.hpp>
#include <jets/matrix.hpp>
#include <jets/monomial_ideal.hpp>
#include <jets/parse.hpp>
#include <jets/poly.hpp>
#include <jets/ring.hpp>

// Batch front end: a small statement language over the library.
//
//   ring R = [x, y, z];            ring R = [a..e];   ring R = [x_(1,1)..x_(3,3)];
//   ideal I = x*y*z, x^2-y;        (in the most recently bound ring)
//   graph G = a-c, a-d, b-c;       graph G = load "edges.txt";
//   hypergraph H = x-y-z;
//   matrix M = generic(R, 3, 3);
//   let J = <command>;             binds a command result
//   <command>;                     prints a labelled result block
//
// Commands: jets s NAME, jetsradical s NAME, minimalprimes NAME,
// graphjets s NAME, chromatic NAME, covers NAME, complement NAME,
// chordal NAME, minors r NAME, print NAME.

namespace jets::script
{

/// Sets of variables (minimal primes) or vertices (covers).
struct VariableSets {
    PolyRing ring;
    std::vector<IndexSet> sets;
    bool is_cover = false;
    // Print members in tower display order (graph covers).
    bool display_order = false;
};

using Value = std::variant<PolyRing, Ideal, MonomialIdeal, Graph, HyperGraph, PolyMatrix, VariableSets, std::size_t, bool>;

/// Error raised while running a script; `syntax` selects exit code 2
/// instead of 1.
class script_error : public std::runtime_error
{
public:
    script_error(bool syntax, std::size_t line, std::size_t column, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          m_syntax(syntax), m_line(line), m_column(column)
    {
    }
    bool is_syntax() const
    {
        return m_syntax;
    }
    std::size_t line() const
    {
        return m_line;
    }
    std::size_t column() const
    {
        return m_column;
    }

private:
    bool m_syntax;
    std::size_t m_line;
    std::size_t m_column;
};

struct Transcript {
    std::string output;
    int exit_code = 0;
    std::string error;
};

namespace detail
{

inline std::vector<std::string> variable_names(const PolyRing &ring)
{
    std::vector<std::string> out;
    for (const auto &v : ring.variables()) {
        out.push_back(v.name());
    }
    return out;
}

inline IndexSet display_members(const VariableSets &vs, IndexSet set)
{
    if (vs.display_order) {
        std::sort(set.begin(), set.end(), [&](std::size_t a, std::size_t b) {
            return tower_display_rank(vs.ring, a) < tower_display_rank(vs.ring, b);
        });
    }
    return set;
}

} // namespace detail

/// Stable JSON rendering of a result: object keys sorted, arrays in
/// canonical order.
inline nlohmann::json to_json(const Value &value)
{
    using nlohmann::json;
    return std::visit(
        [](const auto &v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PolyRing>) {
                return json{{"kind", "ring"}, {"ring", detail::variable_names(v)}};
            } else if constexpr (std::is_same_v<T, Ideal>) {
                std::vector<std::string> gens;
                for (const auto &g : v.generators()) {
                    gens.push_back(g.to_string());
                }
                return json{{"kind", "ideal"}, {"ring", detail::variable_names(v.ring())}, {"generators", gens}};
            } else if constexpr (std::is_same_v<T, MonomialIdeal>) {
                std::vector<std::string> gens;
                for (const auto &g : v.generators()) {
                    gens.push_back(monomial_to_string(v.ring(), g));
                }
                return json{{"kind", "monomialideal"}, {"ring", detail::variable_names(v.ring())}, {"generators", gens}};
            } else if constexpr (std::is_same_v<T, Graph>) {
                json edges = json::array();
                for (const auto &e : v.edges()) {
                    edges.push_back({v.ring().variable(e.first).name(), v.ring().variable(e.second).name()});
                }
                return json{{"kind", "graph"}, {"vertices", detail::variable_names(v.ring())}, {"edges", edges}};
            } else if constexpr (std::is_same_v<T, HyperGraph>) {
                json edges = json::array();
                for (const auto &e : v.edges()) {
                    json edge = json::array();
                    for (auto i : e) {
                        edge.push_back(v.ring().variable(i).name());
                    }
                    edges.push_back(edge);
                }
                return json{{"kind", "hypergraph"}, {"vertices", detail::variable_names(v.ring())}, {"edges", edges}};
            } else if constexpr (std::is_same_v<T, PolyMatrix>) {
                json rows = json::array();
                for (std::size_t i = 0; i < v.rows(); ++i) {
                    json row = json::array();
                    for (std::size_t j = 0; j < v.cols(); ++j) {
                        row.push_back(v(i, j).to_string());
                    }
                    rows.push_back(row);
                }
                return json{{"kind", "matrix"}, {"ring", detail::variable_names(v.ring())}, {"entries", rows}};
            } else if constexpr (std::is_same_v<T, VariableSets>) {
                json sets = json::array();
                for (const auto &s : v.sets) {
                    json set = json::array();
                    for (auto i : detail::display_members(v, s)) {
                        set.push_back(v.ring.variable(i).name());
                    }
                    sets.push_back(set);
                }
                const char *kind = v.is_cover ? "covers" : "primes";
                return json{{"kind", kind}, {kind, sets}};
            } else if constexpr (std::is_same_v<T, std::size_t>) {
                return json{{"kind", "number"}, {"value", v}};
            } else {
                return json{{"kind", "boolean"}, {"value", v}};
            }
        },
        value);
}

inline std::string emit_json(const Value &value)
{
    return to_json(value).dump();
}

/// Text rendering: a one-line type header followed by the body lines.
inline std::string emit_text(const Value &value)
{
    return std::visit(
        [](const auto &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            std::string out;
            if constexpr (std::is_same_v<T, PolyRing>) {
                out = "Ring\n" + v.to_string() + "\n";
            } else if constexpr (std::is_same_v<T, Ideal>) {
                out = "Ideal of " + v.ring().to_string() + "\n";
                for (const auto &g : v.generators()) {
                    out += g.to_string() + "\n";
                }
            } else if constexpr (std::is_same_v<T, MonomialIdeal>) {
                out = "MonomialIdeal of " + v.ring().to_string() + "\n";
                for (const auto &g : v.generators()) {
                    out += monomial_to_string(v.ring(), g) + "\n";
                }
            } else if constexpr (std::is_same_v<T, Graph>) {
                out = "Graph with " + std::to_string(v.vertex_count()) + " vertices and "
                      + std::to_string(v.edge_count()) + " edges\n";
                for (const auto &e : v.edges()) {
                    out += v.edge_to_string(e) + "\n";
                }
            } else if constexpr (std::is_same_v<T, HyperGraph>) {
                out = "HyperGraph with " + std::to_string(v.vertices().size()) + " vertices and "
                      + std::to_string(v.edges().size()) + " edges\n";
                for (const auto &e : v.edges()) {
                    out += "{" + index_set_to_string(v.ring(), e) + "}\n";
                }
            } else if constexpr (std::is_same_v<T, PolyMatrix>) {
                out = "Matrix " + std::to_string(v.rows()) + "x" + std::to_string(v.cols()) + " over "
                      + v.ring().to_string() + "\n" + v.to_string();
            } else if constexpr (std::is_same_v<T, VariableSets>) {
                out = std::string(v.is_cover ? "Covers" : "MinimalPrimes") + " (" + std::to_string(v.sets.size())
                      + ")\n";
                for (const auto &s : v.sets) {
                    auto members = detail::display_members(v, s);
                    if (v.is_cover) {
                        out += index_set_to_string(v.ring, members, "*") + "\n";
                    } else {
                        out += "ideal (" + index_set_to_string(v.ring, members) + ")\n";
                    }
                }
            } else if constexpr (std::is_same_v<T, std::size_t>) {
                out = "Number\n" + std::to_string(v) + "\n";
            } else {
                out = std::string("Boolean\n") + (v ? "true" : "false") + "\n";
            }
            return out;
        },
        value);
}

/// Executes scripts; holds the named bindings of one session.
class Session
{
public:
    struct Options {
        bool json = false;
    };

    Session() = default;
    explicit Session(Options options) : m_options(options) {}

    /// Runs every statement, collecting output until the first error.
    Transcript run(std::string_view text)
    {
        Transcript transcript;
        m_text = text;
        std::ostringstream out;
        try {
            auto statements = split_statements();
            for (std::size_t i = 0; i < statements.size(); ++i) {
                auto result = execute(statements[i]);
                if (result) {
                    if (m_options.json) {
                        out << emit_json(*result) << "\n";
                    } else {
                        out << "o" << (i + 1) << " : " << emit_text(*result);
                    }
                }
            }
        } catch (const script_error &e) {
            transcript.exit_code = e.is_syntax() ? 2 : 1;
            transcript.error = e.what();
        }
        transcript.output = out.str();
        return transcript;
    }

    const std::map<std::string, Value> &bindings() const
    {
        return m_bindings;
    }

private:
    struct Statement {
        std::size_t offset;
        std::string_view text;
    };

    // Cursor over one statement; offsets are absolute within the script.
    class Cursor
    {
    public:
        Cursor(const Session &session, Statement st) : m_session(session), m_st(st) {}

        void skip_ws()
        {
            while (m_pos < m_st.text.size() && std::isspace(static_cast<unsigned char>(m_st.text[m_pos]))) {
                ++m_pos;
            }
        }
        bool at_end()
        {
            skip_ws();
            return m_pos >= m_st.text.size();
        }
        char peek()
        {
            skip_ws();
            return m_pos < m_st.text.size() ? m_st.text[m_pos] : '\0';
        }
        std::size_t offset() const
        {
            return m_st.offset + m_pos;
        }
        bool accept(char c)
        {
            if (peek() == c) {
                ++m_pos;
                return true;
            }
            return false;
        }
        bool accept(std::string_view word)
        {
            skip_ws();
            if (m_st.text.substr(m_pos, word.size()) == word) {
                m_pos += word.size();
                return true;
            }
            return false;
        }
        void expect(char c)
        {
            if (!accept(c)) {
                syntax(std::string("expected '") + c + "'");
            }
        }
        void expect_end()
        {
            if (!at_end()) {
                syntax("unexpected '" + std::string(1, m_st.text[m_pos]) + "'");
            }
        }
        std::string ident()
        {
            skip_ws();
            std::size_t start = m_pos;
            if (m_pos < m_st.text.size() && std::isalpha(static_cast<unsigned char>(m_st.text[m_pos]))) {
                while (m_pos < m_st.text.size() && std::isalnum(static_cast<unsigned char>(m_st.text[m_pos]))) {
                    ++m_pos;
                }
            }
            if (start == m_pos) {
                syntax("expected a name");
            }
            return std::string(m_st.text.substr(start, m_pos - start));
        }
        unsigned number()
        {
            skip_ws();
            std::size_t start = m_pos;
            while (m_pos < m_st.text.size() && std::isdigit(static_cast<unsigned char>(m_st.text[m_pos]))) {
                ++m_pos;
            }
            if (start == m_pos) {
                syntax("expected a number");
            }
            if (m_pos - start > 9) {
                m_pos = start;
                syntax("number too large");
            }
            return static_cast<unsigned>(std::stoul(std::string(m_st.text.substr(start, m_pos - start))));
        }
        std::string quoted()
        {
            expect('"');
            std::size_t start = m_pos;
            while (m_pos < m_st.text.size() && m_st.text[m_pos] != '"') {
                ++m_pos;
            }
            if (m_pos >= m_st.text.size()) {
                syntax("unterminated string");
            }
            std::string s(m_st.text.substr(start, m_pos - start));
            ++m_pos;
            return s;
        }
        // Remaining text of the statement, with its absolute offset.
        std::pair<std::size_t, std::string_view> rest()
        {
            skip_ws();
            auto r = std::pair(offset(), m_st.text.substr(m_pos));
            m_pos = m_st.text.size();
            return r;
        }
        [[noreturn]] void syntax(const std::string &msg) const
        {
            m_session.fail(true, offset(), msg);
        }
        [[noreturn]] void semantic(const std::string &msg, std::size_t at) const
        {
            m_session.fail(false, at, msg);
        }

    private:
        const Session &m_session;
        Statement m_st;
        std::size_t m_pos = 0;
    };

    [[noreturn]] void fail(bool syntax, std::size_t offset, const std::string &msg) const
    {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < offset && i < m_text.size(); ++i) {
            if (m_text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw script_error(syntax, line, column, msg);
    }

    // Splits on ';' outside string literals; '#' starts a comment.
    std::vector<Statement> split_statements()
    {
        std::vector<Statement> out;
        std::size_t start = 0;
        bool in_string = false;
        std::string cleaned(m_text);
        for (std::size_t i = 0; i < cleaned.size(); ++i) {
            if (cleaned[i] == '"') {
                in_string = !in_string;
            } else if (!in_string && cleaned[i] == '#') {
                while (i < cleaned.size() && cleaned[i] != '\n') {
                    cleaned[i++] = ' ';
                }
            }
        }
        m_clean = std::move(cleaned);
        std::string_view text = m_clean;
        in_string = false;
        for (std::size_t i = 0; i <= text.size(); ++i) {
            if (i < text.size() && text[i] == '"') {
                in_string = !in_string;
            }
            if (i == text.size() || (!in_string && text[i] == ';')) {
                auto piece = text.substr(start, i - start);
                bool blank = std::all_of(piece.begin(), piece.end(),
                                         [](unsigned char c) { return std::isspace(c) != 0; });
                if (!blank) {
                    out.push_back({start, piece});
                }
                start = i + 1;
            }
        }
        return out;
    }

    std::optional<Value> execute(const Statement &st)
    {
        Cursor cur(*this, st);
        std::string keyword = cur.ident();
        if (keyword == "ring" || keyword == "ideal" || keyword == "graph" || keyword == "hypergraph"
            || keyword == "matrix" || keyword == "let") {
            std::size_t name_at = cur.offset();
            std::string name = cur.ident();
            cur.expect('=');
            Value v = define(keyword, cur);
            bind(name, std::move(v), name_at);
            return std::nullopt;
        }
        return command(keyword, cur);
    }

    void bind(const std::string &name, Value v, std::size_t at)
    {
        if (m_bindings.count(name) != 0) {
            fail(false, at, "name '" + name + "' is already defined");
        }
        if (auto *ring = std::get_if<PolyRing>(&v)) {
            m_current_ring = *ring;
        }
        m_bindings.emplace(name, std::move(v));
    }

    Value define(const std::string &keyword, Cursor &cur)
    {
        if (keyword == "ring") {
            return define_ring(cur);
        }
        if (keyword == "ideal") {
            if (!m_current_ring) {
                cur.semantic("no ring has been defined", cur.offset());
            }
            auto [at, text] = cur.rest();
            std::vector<Poly> gens;
            for (auto [off, piece] : split_top_level(text)) {
                gens.push_back(parse(piece, at + off));
            }
            return Ideal(*m_current_ring, std::move(gens));
        }
        if (keyword == "graph" || keyword == "hypergraph") {
            std::size_t at = cur.offset();
            EdgeList list;
            if (cur.accept("load")) {
                std::string path = cur.quoted();
                cur.expect_end();
                std::ifstream in(path);
                if (!in) {
                    cur.semantic("cannot read '" + path + "'", at);
                }
                std::stringstream buf;
                buf << in.rdbuf();
                list = guarded(at, [&] { return parse_edge_list(buf.str()); });
            } else {
                auto [off, text] = cur.rest();
                list = guarded(off, [&] { return parse_edge_list(text); });
            }
            if (keyword == "graph") {
                return guarded(at, [&] { return Value(graph_from_edge_list(list)); });
            }
            return guarded(at, [&] { return Value(hypergraph_from_edge_list(list)); });
        }
        if (keyword == "matrix") {
            if (!cur.accept("generic")) {
                cur.syntax("expected 'generic'");
            }
            cur.expect('(');
            std::size_t at = cur.offset();
            std::string ring_name = cur.ident();
            cur.expect(',');
            unsigned m = cur.number();
            cur.expect(',');
            unsigned n = cur.number();
            cur.expect(')');
            cur.expect_end();
            const auto &ring = lookup<PolyRing>(ring_name, at, "ring");
            return guarded(at, [&] { return Value(generic_matrix(ring, m, n)); });
        }
        // let
        std::size_t at = cur.offset();
        std::string cmd = cur.ident();
        auto v = command(cmd, cur);
        if (!v) {
            cur.semantic("'" + cmd + "' does not produce a value", at);
        }
        return *v;
    }

    Value define_ring(Cursor &cur)
    {
        cur.expect('[');
        std::vector<Variable> vars;
        if (!cur.accept(']')) {
            for (;;) {
                std::size_t at = cur.offset();
                Variable first = ring_variable(cur);
                if (cur.accept("..")) {
                    Variable last = ring_variable(cur);
                    expand_range(first, last, vars, at, cur);
                } else {
                    vars.push_back(std::move(first));
                }
                if (cur.accept(']')) {
                    break;
                }
                cur.expect(',');
            }
        }
        cur.expect_end();
        std::size_t at = cur.offset();
        return guarded(at, [&] { return Value(PolyRing(std::move(vars))); });
    }

    static Variable ring_variable(Cursor &cur)
    {
        Variable v(cur.ident());
        if (cur.accept('_')) {
            cur.expect('(');
            do {
                v.subscripts.push_back(cur.number());
            } while (cur.accept(','));
            cur.expect(')');
        }
        return v;
    }

    static void expand_range(const Variable &first, const Variable &last, std::vector<Variable> &vars, std::size_t at,
                             Cursor &cur)
    {
        if (first.subscripts.empty() && last.subscripts.empty()) {
            if (first.base.size() != 1 || last.base.size() != 1 || first.base[0] > last.base[0]) {
                cur.semantic("ranges of plain names must run between single letters, e.g. a..e", at);
            }
            for (char c = first.base[0]; c <= last.base[0]; ++c) {
                vars.emplace_back(std::string(1, c));
            }
            return;
        }
        if (first.base != last.base || first.subscripts.size() != last.subscripts.size()) {
            cur.semantic("range endpoints must share a name and subscript count", at);
        }
        std::vector<unsigned> idx = first.subscripts;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (first.subscripts[i] > last.subscripts[i]) {
                cur.semantic("empty subscript range", at);
            }
        }
        for (;;) {
            vars.emplace_back(first.base, idx);
            std::size_t k = idx.size();
            while (k-- > 0) {
                if (idx[k] < last.subscripts[k]) {
                    ++idx[k];
                    break;
                }
                idx[k] = first.subscripts[k];
            }
            if (k == static_cast<std::size_t>(-1)) {
                return;
            }
        }
    }

    std::optional<Value> command(const std::string &cmd, Cursor &cur)
    {
        std::size_t at = cur.offset();
        auto needs_order = [&] { return cur.number(); };
        if (cmd == "jets" || cmd == "graphjets") {
            unsigned s = needs_order();
            at = cur.offset();
            std::string name = cur.ident();
            cur.expect_end();
            const Value &v = lookup_any(name, at);
            return guarded(at, [&]() -> Value {
                if (const auto *g = std::get_if<Graph>(&v)) {
                    return jets_graph(s, *g);
                }
                if (const auto *h = std::get_if<HyperGraph>(&v)) {
                    return jets_hypergraph(s, *h);
                }
                if (cmd == "graphjets") {
                    throw algebra_error("'" + name + "' is not a graph or hypergraph");
                }
                if (const auto *r = std::get_if<PolyRing>(&v)) {
                    return jet_ring(*r, s).ring();
                }
                if (const auto *i = std::get_if<Ideal>(&v)) {
                    return jets_ideal(s, *i).ideal();
                }
                if (const auto *m = std::get_if<MonomialIdeal>(&v)) {
                    return jets_ideal(s, m->to_ideal()).ideal();
                }
                throw algebra_error("cannot take jets of '" + name + "'");
            });
        }
        if (cmd == "jetsradical") {
            unsigned s = needs_order();
            at = cur.offset();
            std::string name = cur.ident();
            cur.expect_end();
            const Value &v = lookup_any(name, at);
            return guarded(at, [&]() -> Value {
                if (const auto *i = std::get_if<Ideal>(&v)) {
                    return jets_radical(s, *i);
                }
                if (const auto *m = std::get_if<MonomialIdeal>(&v)) {
                    return jets_radical(s, *m);
                }
                throw algebra_error("'" + name + "' is not an ideal");
            });
        }
        if (cmd == "minors") {
            unsigned r = needs_order();
            at = cur.offset();
            std::string name = cur.ident();
            cur.expect_end();
            const auto &m = lookup<PolyMatrix>(name, at, "matrix");
            return guarded(at, [&] { return Value(minors(r, m)); });
        }
        if (cmd == "minimalprimes" || cmd == "covers" || cmd == "chromatic" || cmd == "complement"
            || cmd == "chordal" || cmd == "print") {
            at = cur.offset();
            std::string name = cur.ident();
            cur.expect_end();
            const Value &v = lookup_any(name, at);
            if (cmd == "print") {
                return v;
            }
            return guarded(at, [&]() -> Value { return unary(cmd, name, v); });
        }
        fail(true, at, "unknown statement '" + cmd + "'");
    }

    static Value unary(const std::string &cmd, const std::string &name, const Value &v)
    {
        const auto *g = std::get_if<Graph>(&v);
        if (cmd == "minimalprimes") {
            if (const auto *m = std::get_if<MonomialIdeal>(&v)) {
                return VariableSets{m->ring(), minimal_primes_squarefree(*m), false, false};
            }
            if (const auto *i = std::get_if<Ideal>(&v)) {
                return VariableSets{i->ring(), minimal_primes_squarefree(to_monomial_ideal(*i)), false, false};
            }
            throw algebra_error("'" + name + "' is not an ideal");
        }
        if (cmd == "covers") {
            if (g != nullptr) {
                return VariableSets{g->ring(), minimal_vertex_covers(*g), true, true};
            }
            if (const auto *h = std::get_if<HyperGraph>(&v)) {
                return VariableSets{h->ring(), minimal_vertex_covers(*h), true, true};
            }
            throw algebra_error("'" + name + "' is not a graph or hypergraph");
        }
        if (g == nullptr) {
            throw algebra_error("'" + name + "' is not a graph");
        }
        if (cmd == "chromatic") {
            return chromatic_number(*g);
        }
        if (cmd == "complement") {
            return complement_graph(*g);
        }
        return is_chordal(*g);
    }

    Poly parse(std::string_view text, std::size_t at)
    {
        try {
            return parse_poly(text, *m_current_ring);
        } catch (const parse_error &e) {
            fail(true, at + e.offset(), e.message());
        } catch (const unknown_variable_error &e) {
            fail(false, at + e.offset(), e.what());
        }
    }

    template <typename F>
    auto guarded(std::size_t at, F &&f) -> decltype(f())
    {
        try {
            return f();
        } catch (const algebra_error &e) {
            fail(false, at, e.what());
        }
    }

    const Value &lookup_any(const std::string &name, std::size_t at) const
    {
        auto it = m_bindings.find(name);
        if (it == m_bindings.end()) {
            fail(false, at, "unknown name '" + name + "'");
        }
        return it->second;
    }

    template <typename T>
    const T &lookup(const std::string &name, std::size_t at, const char *what) const
    {
        const Value &v = lookup_any(name, at);
        if (const auto *p = std::get_if<T>(&v)) {
            return *p;
        }
        fail(false, at, "'" + name + "' is not a " + std::string(what));
    }

    Options m_options;
    std::string_view m_text;
    std::string m_clean;
    std::map<std::string, Value> m_bindings;
    std::optional<PolyRing> m_current_ring;
};

/// Runs `text` in a fresh session.
inline Transcript run_script(std::string_view text, bool json = false)
{
    Session session(Session::Options{json});
    return session.run(text);
}

} // namespace jets::script

#endif
