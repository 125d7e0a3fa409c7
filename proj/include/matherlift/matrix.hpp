#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "matherlift/errors.hpp"
#include "matherlift/rational.hpp"

namespace matherlift {

/// Dense matrix over the rationals, row major. Small and exact; all the
/// linear algebra in this project is on matrices with a handful of rows.
struct RationalMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> entries;

    RationalMatrix() = default;
    RationalMatrix(std::size_t r, std::size_t c)
        : rows(r), cols(c), entries(r * c) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Rational& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    std::vector<Rational> row(std::size_t r) const {
        return std::vector<Rational>(entries.begin() + static_cast<long>(r * cols),
                                     entries.begin() + static_cast<long>((r + 1) * cols));
    }

    bool operator==(const RationalMatrix&) const = default;
};

inline RationalMatrix matrix_from_rows(const std::vector<std::vector<Rational>>& rows) {
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols)
            throw precondition_error("ragged row list in matrix construction");
        for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

/// Stacks a on top of b. Column counts must agree.
inline RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols != b.cols && a.rows != 0 && b.rows != 0)
        throw precondition_error("vstack: column count mismatch");
    std::size_t cols = a.rows != 0 ? a.cols : b.cols;
    RationalMatrix m(a.rows + b.rows, cols);
    m.entries = a.entries;
    m.entries.insert(m.entries.end(), b.entries.begin(), b.entries.end());
    return m;
}

/// Exact rank by fraction-free (Bareiss) elimination. Rows are first scaled
/// to integers; every intermediate entry is then a minor of the scaled
/// matrix, so the divisions below are exact.
inline std::size_t matrix_rank(const RationalMatrix& mat) {
    if (mat.rows == 0 || mat.cols == 0) return 0;
    std::vector<std::vector<BigInt>> m(mat.rows, std::vector<BigInt>(mat.cols));
    for (std::size_t r = 0; r < mat.rows; ++r) {
        BigInt scale = 1;
        for (std::size_t c = 0; c < mat.cols; ++c) {
            const BigInt d = rat_den(mat.at(r, c));
            scale = scale / gcd(scale, d) * d;
        }
        for (std::size_t c = 0; c < mat.cols; ++c) {
            const Rational v = mat.at(r, c) * Rational(scale);
            m[r][c] = rat_num(v);
        }
    }
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < mat.cols && rank < mat.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < mat.rows && m[pivot][col] == 0) ++pivot;
        if (pivot == mat.rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t i = rank + 1; i < mat.rows; ++i) {
            for (std::size_t j = col + 1; j < mat.cols; ++j)
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows) continue;
        for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(r, c));
        const Rational inv = Rational(1) / m.at(r, col);
        for (std::size_t c = col; c < m.cols; ++c) m.at(r, c) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, col) == 0) continue;
            const Rational f = m.at(i, col);
            for (std::size_t c = col; c < m.cols; ++c) m.at(i, c) -= f * m.at(r, c);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

/// Basis of the right null space { x : M x = 0 }, in a fixed deterministic
/// order (one vector per free column).
inline std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& mat) {
    RationalMatrix m = mat;
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(mat.cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < mat.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(mat.cols);
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves A x = b for square A; nullopt when A is singular.
inline std::optional<std::vector<Rational>> solve_square(const RationalMatrix& a,
                                                         const std::vector<Rational>& b) {
    if (a.rows != a.cols || b.size() != a.rows)
        throw precondition_error("solve_square: shape mismatch");
    RationalMatrix aug(a.rows, a.cols + 1);
    for (std::size_t r = 0; r < a.rows; ++r) {
        for (std::size_t c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols) = b[r];
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() != a.cols) return std::nullopt;
    std::vector<Rational> x(a.cols);
    for (std::size_t r = 0; r < a.cols; ++r) x[r] = aug.at(r, a.cols);
    return x;
}

} // namespace matherlift
