#pragma once

// Exact dense linear algebra over GaussRat: Gaussian elimination for rank,
// span membership, and coordinate solves. Sizes here are tiny (<= ~40 rows).

#include <optional>
#include <vector>

#include "qhx/rational.hpp"

namespace qhx {

using GVec = std::vector<GaussRat>;
using GMat = std::vector<GVec>; // row-major

inline GMat gmat_zero(size_t n, size_t m) { return GMat(n, GVec(m)); }

inline GMat gmat_mul(const GMat& a, const GMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    GMat out = gmat_zero(n, m);
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

inline GMat gmat_sub(const GMat& a, const GMat& b) {
    GMat out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
    return out;
}

inline bool gmat_is_zero(const GMat& a) {
    for (const auto& row : a)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

// Solve A x = rhs exactly, where A is (rows x cols) with cols <= rows typical.
// Returns nullopt if the system is inconsistent; if the solution is
// underdetermined, free variables are set to zero.
inline std::optional<GVec> solve_exact(GMat a, GVec rhs) {
    size_t rows = a.size();
    size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<int> pivot_col_of_row(rows, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(rhs[p], rhs[r]);
        GaussRat inv = GaussRat(1) / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        rhs[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            GaussRat f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col_of_row[r] = static_cast<int>(c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (!rhs[i].is_zero()) return std::nullopt;
    GVec x(cols);
    for (size_t i = 0; i < r; ++i) x[pivot_col_of_row[i]] = rhs[i];
    return x;
}

// Rank of the column set (columns given as vectors of equal length).
inline size_t column_rank(const std::vector<GVec>& columns) {
    if (columns.empty()) return 0;
    size_t rows = columns[0].size(), cols = columns.size();
    GMat a = gmat_zero(rows, cols);
    for (size_t j = 0; j < cols; ++j)
        for (size_t i = 0; i < rows; ++i) a[i][j] = columns[j][i];
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        GaussRat inv = GaussRat(1) / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            GaussRat f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

// Coordinates of target in the span of the given columns, if any.
inline std::optional<GVec> express_in_span(const std::vector<GVec>& columns, const GVec& target) {
    size_t rows = target.size();
    GMat a = gmat_zero(rows, columns.size());
    for (size_t j = 0; j < columns.size(); ++j)
        for (size_t i = 0; i < rows; ++i) a[i][j] = columns[j][i];
    return solve_exact(std::move(a), target);
}

} // namespace qhx
