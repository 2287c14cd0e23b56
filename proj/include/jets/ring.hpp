#ifndef JETS_RING_HPP
#define JETS_RING_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jets
{

// Thrown when an operation receives values that violate its preconditions
// (mismatched rings, malformed names, out-of-range arguments).
class algebra_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A ring variable: a base name, optional integer subscripts and an optional
/// jet order. Printed as base, then jet order, then "_(i,j,...)".
struct Variable {
    std::string base;
    std::vector<unsigned> subscripts;
    std::optional<unsigned> jet_order;

    Variable() = default;
    Variable(std::string b, std::vector<unsigned> subs = {}, std::optional<unsigned> order = std::nullopt)
        : base(std::move(b)), subscripts(std::move(subs)), jet_order(order)
    {
    }

    std::string name() const
    {
        std::string out = base;
        if (jet_order) {
            out += std::to_string(*jet_order);
        }
        if (!subscripts.empty()) {
            out += "_(";
            for (std::size_t i = 0; i < subscripts.size(); ++i) {
                if (i != 0) {
                    out += ',';
                }
                out += std::to_string(subscripts[i]);
            }
            out += ')';
        }
        return out;
    }

    Variable with_jet_order(unsigned j) const
    {
        return Variable(base, subscripts, j);
    }

    friend bool operator==(const Variable &, const Variable &) = default;

    friend std::ostream &operator<<(std::ostream &os, const Variable &v)
    {
        return os << v.name();
    }
};

inline bool valid_base_name(const std::string &base)
{
    if (base.empty() || !std::isalpha(static_cast<unsigned char>(base.front()))) {
        return false;
    }
    if (!std::all_of(base.begin(), base.end(), [](unsigned char c) { return std::isalnum(c); })) {
        return false;
    }
    return !std::isdigit(static_cast<unsigned char>(base.back()));
}

/// Consecutive run of ring variables [begin, end). Jet rings carry one block
/// per jet order; a plain ring is a single untagged block.
struct Block {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::optional<unsigned> jet_order;

    friend bool operator==(const Block &, const Block &) = default;
};

/// Polynomial ring over QQ on an ordered list of variables. Immutable and
/// cheap to copy; copies share their storage.
class PolyRing
{
    struct Data {
        std::vector<Variable> variables;
        std::vector<Block> blocks;
        std::vector<std::size_t> block_of;
        std::optional<std::vector<unsigned>> weights;
        std::map<std::string, std::size_t> by_name;
    };

public:
    PolyRing() : PolyRing(std::vector<Variable>{}) {}

    /// Single-block ring on `vars`.
    explicit PolyRing(std::vector<Variable> vars, std::optional<std::vector<unsigned>> weights = std::nullopt)
    {
        std::vector<Block> blocks;
        if (!vars.empty()) {
            blocks.push_back(Block{0, vars.size(), std::nullopt});
        }
        init(std::move(vars), std::move(blocks), std::move(weights));
    }

    PolyRing(std::vector<Variable> vars, std::vector<Block> blocks, std::optional<std::vector<unsigned>> weights)
    {
        init(std::move(vars), std::move(blocks), std::move(weights));
    }

    std::size_t size() const
    {
        return m_data->variables.size();
    }
    const std::vector<Variable> &variables() const
    {
        return m_data->variables;
    }
    const Variable &variable(std::size_t i) const
    {
        return m_data->variables.at(i);
    }
    const std::vector<Block> &blocks() const
    {
        return m_data->blocks;
    }
    std::size_t block_of(std::size_t var) const
    {
        return m_data->block_of.at(var);
    }
    const std::optional<std::vector<unsigned>> &weights() const
    {
        return m_data->weights;
    }

    std::optional<std::size_t> find(const std::string &name) const
    {
        auto it = m_data->by_name.find(name);
        if (it == m_data->by_name.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    bool is_jet_ring() const
    {
        return std::any_of(m_data->variables.begin(), m_data->variables.end(),
                           [](const Variable &v) { return v.jet_order.has_value(); });
    }

    bool same_data(const PolyRing &o) const
    {
        return m_data == o.m_data;
    }

    friend bool operator==(const PolyRing &a, const PolyRing &b)
    {
        if (a.m_data == b.m_data) {
            return true;
        }
        return a.m_data->variables == b.m_data->variables && a.m_data->blocks == b.m_data->blocks
               && a.m_data->weights == b.m_data->weights;
    }

    /// Tower display, e.g. "QQ[x0,y0,z0][x1,y1,z1]".
    std::string to_string() const
    {
        std::string out = "QQ";
        if (m_data->blocks.empty()) {
            return out + "[]";
        }
        for (const auto &b : m_data->blocks) {
            out += '[';
            for (std::size_t i = b.begin; i < b.end; ++i) {
                if (i != b.begin) {
                    out += ',';
                }
                out += m_data->variables[i].name();
            }
            out += ']';
        }
        return out;
    }

private:
    void init(std::vector<Variable> vars, std::vector<Block> blocks, std::optional<std::vector<unsigned>> weights)
    {
        auto data = std::make_shared<Data>();
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (!valid_base_name(vars[i].base)) {
                throw algebra_error("invalid variable base name '" + vars[i].base
                                    + "' (must be alphanumeric, start with a letter and not end in a digit)");
            }
            auto [it, inserted] = data->by_name.emplace(vars[i].name(), i);
            if (!inserted) {
                throw algebra_error("duplicate variable '" + vars[i].name() + "'");
            }
        }
        std::size_t expect = 0;
        data->block_of.resize(vars.size());
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].begin != expect || blocks[b].end <= blocks[b].begin || blocks[b].end > vars.size()) {
                throw algebra_error("ring blocks must partition the variable list");
            }
            for (std::size_t i = blocks[b].begin; i < blocks[b].end; ++i) {
                data->block_of[i] = b;
            }
            expect = blocks[b].end;
        }
        if (expect != vars.size()) {
            throw algebra_error("ring blocks must partition the variable list");
        }
        if (weights && weights->size() != vars.size()) {
            throw algebra_error("weight vector length does not match the number of variables");
        }
        data->variables = std::move(vars);
        data->blocks = std::move(blocks);
        data->weights = std::move(weights);
        m_data = std::move(data);
    }

    std::shared_ptr<const Data> m_data;
};

inline PolyRing make_ring(std::vector<Variable> vars, std::optional<std::vector<unsigned>> weights = std::nullopt)
{
    return PolyRing(std::move(vars), std::move(weights));
}

/// Convenience: ring on plain names, e.g. make_ring({"x", "y", "z"}).
inline PolyRing make_ring(std::initializer_list<const char *> names)
{
    std::vector<Variable> vars;
    for (const char *n : names) {
        vars.emplace_back(n);
    }
    return PolyRing(std::move(vars));
}

/// Sparse exponent vector: (variable index, exponent) pairs sorted by index,
/// exponents strictly positive. The empty monomial is 1.
class Monomial
{
public:
    using Entry = std::pair<std::uint32_t, std::uint32_t>;

    Monomial() = default;

    static Monomial variable(std::size_t index, std::uint32_t exponent = 1)
    {
        Monomial m;
        if (exponent != 0) {
            m.m_entries.emplace_back(static_cast<std::uint32_t>(index), exponent);
        }
        return m;
    }

    static Monomial from_dense(std::span<const std::uint32_t> exponents)
    {
        Monomial m;
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] != 0) {
                m.m_entries.emplace_back(static_cast<std::uint32_t>(i), exponents[i]);
            }
        }
        return m;
    }

    static Monomial from_entries(std::vector<Entry> entries)
    {
        std::sort(entries.begin(), entries.end());
        Monomial m;
        for (const auto &[var, e] : entries) {
            if (e == 0) {
                continue;
            }
            if (!m.m_entries.empty() && m.m_entries.back().first == var) {
                m.m_entries.back().second += e;
            } else {
                m.m_entries.emplace_back(var, e);
            }
        }
        return m;
    }

    const std::vector<Entry> &entries() const
    {
        return m_entries;
    }
    bool is_one() const
    {
        return m_entries.empty();
    }

    std::uint32_t exponent(std::size_t var) const
    {
        auto it = std::lower_bound(m_entries.begin(), m_entries.end(), Entry{static_cast<std::uint32_t>(var), 0});
        return (it != m_entries.end() && it->first == var) ? it->second : 0;
    }

    std::uint64_t degree() const
    {
        std::uint64_t d = 0;
        for (const auto &e : m_entries) {
            d += e.second;
        }
        return d;
    }

    bool is_squarefree() const
    {
        return std::all_of(m_entries.begin(), m_entries.end(), [](const Entry &e) { return e.second == 1; });
    }

    /// Product of the variables appearing in this monomial.
    Monomial support() const
    {
        Monomial m;
        for (const auto &e : m_entries) {
            m.m_entries.emplace_back(e.first, 1);
        }
        return m;
    }

    std::vector<std::size_t> support_indices() const
    {
        std::vector<std::size_t> out;
        out.reserve(m_entries.size());
        for (const auto &e : m_entries) {
            out.push_back(e.first);
        }
        return out;
    }

    bool divides(const Monomial &o) const
    {
        auto it = o.m_entries.begin();
        for (const auto &[var, e] : m_entries) {
            while (it != o.m_entries.end() && it->first < var) {
                ++it;
            }
            if (it == o.m_entries.end() || it->first != var || it->second < e) {
                return false;
            }
        }
        return true;
    }

    friend Monomial operator*(const Monomial &a, const Monomial &b)
    {
        Monomial m;
        m.m_entries.reserve(a.m_entries.size() + b.m_entries.size());
        auto i = a.m_entries.begin();
        auto j = b.m_entries.begin();
        while (i != a.m_entries.end() || j != b.m_entries.end()) {
            if (j == b.m_entries.end() || (i != a.m_entries.end() && i->first < j->first)) {
                m.m_entries.push_back(*i++);
            } else if (i == a.m_entries.end() || j->first < i->first) {
                m.m_entries.push_back(*j++);
            } else {
                m.m_entries.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        return m;
    }

    Monomial pow(std::uint32_t e) const
    {
        if (e == 0) {
            return {};
        }
        Monomial m = *this;
        for (auto &entry : m.m_entries) {
            entry.second *= e;
        }
        return m;
    }

    friend Monomial lcm(const Monomial &a, const Monomial &b)
    {
        std::vector<Entry> all = a.m_entries;
        all.insert(all.end(), b.m_entries.begin(), b.m_entries.end());
        std::sort(all.begin(), all.end());
        Monomial m;
        for (const auto &[var, e] : all) {
            if (!m.m_entries.empty() && m.m_entries.back().first == var) {
                m.m_entries.back().second = std::max(m.m_entries.back().second, e);
            } else {
                m.m_entries.emplace_back(var, e);
            }
        }
        return m;
    }

    // Structural order used for keyed containers; not a term order.
    friend auto operator<=>(const Monomial &, const Monomial &) = default;
    friend bool operator==(const Monomial &, const Monomial &) = default;

private:
    std::vector<Entry> m_entries;
};

/// Term order of a ring: blocks compared from the last to the first (later
/// jet blocks dominate, as in the tower QQ[x0..][x1..][x2..]); inside a block,
/// graded reverse lexicographic with the block's variables in ring order.
/// Returns <0, 0 or >0.
inline int compare_monomials(const PolyRing &ring, const Monomial &a, const Monomial &b)
{
    const auto &blocks = ring.blocks();
    for (std::size_t bi = blocks.size(); bi-- > 0;) {
        const Block &blk = blocks[bi];
        std::uint64_t da = 0, db = 0;
        for (const auto &[v, e] : a.entries()) {
            if (v >= blk.begin && v < blk.end) {
                da += e;
            }
        }
        for (const auto &[v, e] : b.entries()) {
            if (v >= blk.begin && v < blk.end) {
                db += e;
            }
        }
        if (da != db) {
            return da > db ? 1 : -1;
        }
        for (std::size_t v = blk.end; v-- > blk.begin;) {
            auto ea = a.exponent(v);
            auto eb = b.exponent(v);
            if (ea != eb) {
                return ea < eb ? 1 : -1;
            }
        }
    }
    return 0;
}

/// Position of a variable when the tower is read outermost block first
/// (x2.., x1.., x0..), ring order inside a block. Used for graph displays.
inline std::size_t tower_display_rank(const PolyRing &ring, std::size_t v)
{
    const auto &blocks = ring.blocks();
    std::size_t b = ring.block_of(v);
    std::size_t before = 0;
    for (std::size_t i = b + 1; i < blocks.size(); ++i) {
        before += blocks[i].end - blocks[i].begin;
    }
    return before + (v - blocks[b].begin);
}

/// Strict "greater in the term order" predicate, for sorting descending.
struct TermOrderGreater {
    const PolyRing *ring;
    bool operator()(const Monomial &a, const Monomial &b) const
    {
        return compare_monomials(*ring, a, b) > 0;
    }
};

/// "x^2*y" style rendering; "1" for the empty monomial.
inline std::string monomial_to_string(const PolyRing &ring, const Monomial &m)
{
    if (m.is_one()) {
        return "1";
    }
    std::string out;
    for (const auto &[v, e] : m.entries()) {
        if (!out.empty()) {
            out += '*';
        }
        out += ring.variable(v).name();
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

} // namespace jets

#endif
