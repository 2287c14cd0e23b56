#ifndef JETS_MATRIX_HPP
#define JETS_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <jets/poly.hpp>
#include <jets/ring.hpp>

namespace jets
{

/// m x n matrix of polynomials, row-major storage.
class PolyMatrix
{
public:
    PolyMatrix(PolyRing ring, std::size_t rows, std::size_t cols)
        : m_ring(std::move(ring)), m_rows(rows), m_cols(cols), m_entries(rows * cols, Poly(m_ring))
    {
    }

    const PolyRing &ring() const
    {
        return m_ring;
    }
    std::size_t rows() const
    {
        return m_rows;
    }
    std::size_t cols() const
    {
        return m_cols;
    }

    const Poly &operator()(std::size_t i, std::size_t j) const
    {
        return m_entries.at(i * m_cols + j);
    }
    Poly &operator()(std::size_t i, std::size_t j)
    {
        return m_entries.at(i * m_cols + j);
    }

    PolyMatrix submatrix(const std::vector<std::size_t> &row_set, const std::vector<std::size_t> &col_set) const
    {
        PolyMatrix out(m_ring, row_set.size(), col_set.size());
        for (std::size_t i = 0; i < row_set.size(); ++i) {
            for (std::size_t j = 0; j < col_set.size(); ++j) {
                out(i, j) = (*this)(row_set[i], col_set[j]);
            }
        }
        return out;
    }

    /// One line per row, entries separated by a space, like "| a b |".
    std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i < m_rows; ++i) {
            out += '|';
            for (std::size_t j = 0; j < m_cols; ++j) {
                out += ' ';
                out += (*this)(i, j).to_string();
            }
            out += " |\n";
        }
        return out;
    }

private:
    PolyRing m_ring;
    std::size_t m_rows;
    std::size_t m_cols;
    std::vector<Poly> m_entries;
};

using GenericMatrix = PolyMatrix;

/// Matrix whose (i, j) entry is variable number j*m + i (column-major fill).
inline PolyMatrix generic_matrix(const PolyRing &ring, std::size_t m, std::size_t n)
{
    if (ring.size() < m * n) {
        throw algebra_error("generic " + std::to_string(m) + "x" + std::to_string(n) + " matrix needs "
                            + std::to_string(m * n) + " variables, ring has " + std::to_string(ring.size()));
    }
    PolyMatrix out(ring, m, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            out(i, j) = Poly::variable(ring, j * m + i);
        }
    }
    return out;
}

/// Determinant by cofactor expansion along the first row.
inline Poly determinant(const PolyMatrix &a)
{
    if (a.rows() != a.cols()) {
        throw algebra_error("determinant of a non-square matrix");
    }
    const std::size_t n = a.rows();
    if (n == 0) {
        return Poly::constant(a.ring(), Rational(1));
    }
    if (n == 1) {
        return a(0, 0);
    }
    std::vector<std::size_t> rest_rows;
    for (std::size_t i = 1; i < n; ++i) {
        rest_rows.push_back(i);
    }
    Poly det(a.ring());
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j).is_zero()) {
            continue;
        }
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < n; ++c) {
            if (c != j) {
                cols.push_back(c);
            }
        }
        Poly cofactor = a(0, j) * determinant(a.submatrix(rest_rows, cols));
        det = (j % 2 == 0) ? det + cofactor : det - cofactor;
    }
    return det;
}

namespace detail
{

inline void k_subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t> &cur,
                      std::vector<std::vector<std::size_t>> &out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        k_subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

/// All k-element subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    detail::k_subsets(n, k, 0, cur, out);
    return out;
}

/// Ideal of r x r minors, row sets then column sets in lexicographic order.
inline Ideal minors(std::size_t r, const PolyMatrix &m)
{
    if (r < 1 || r > std::min(m.rows(), m.cols())) {
        throw algebra_error("minor size " + std::to_string(r) + " out of range for a " + std::to_string(m.rows())
                            + "x" + std::to_string(m.cols()) + " matrix");
    }
    std::vector<Poly> gens;
    for (const auto &rows : k_subsets(m.rows(), r)) {
        for (const auto &cols : k_subsets(m.cols(), r)) {
            gens.push_back(determinant(m.submatrix(rows, cols)));
        }
    }
    return Ideal(m.ring(), std::move(gens));
}

} // namespace jets

#endif
