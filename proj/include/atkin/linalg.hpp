#ifndef ATKIN_LINALG_HPP
#define ATKIN_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include <atkin/errors.hpp>
#include <atkin/rational.hpp>

namespace atkin
{

using matrix = std::vector<std::vector<rat>>;

// Solve A x = b exactly. A may have more rows than columns; the system must be
// consistent and of full column rank, otherwise nullopt.
inline std::optional<std::vector<rat>> solve(matrix a, std::vector<rat> b)
{
    const std::size_t rows = a.size();
    if (rows != b.size()) {
        throw domain_error("row count mismatch in linear solve");
    }
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(a[p][c]) == 0) {
            ++p;
        }
        if (p == rows) {
            return std::nullopt;
        }
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const rat inv = rat(1) / a[r][c];
        for (std::size_t k = c; k < cols; ++k) {
            a[r][k] *= inv;
        }
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0) {
                continue;
            }
            const rat f = a[i][c];
            for (std::size_t k = c; k < cols; ++k) {
                a[i][k] -= f * a[r][k];
            }
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (pivot_col.size() != cols) {
        return std::nullopt;
    }
    for (std::size_t i = r; i < rows; ++i) {
        if (sgn(b[i]) != 0) {
            return std::nullopt;
        }
    }
    std::vector<rat> x(cols);
    for (std::size_t i = 0; i < r; ++i) {
        x[pivot_col[i]] = b[i];
    }
    return x;
}

inline rat determinant(matrix a)
{
    const std::size_t n = a.size();
    rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) {
            ++p;
        }
        if (p == n) {
            return 0;
        }
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        const rat inv = rat(1) / a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(a[i][c]) == 0) {
                continue;
            }
            const rat f = a[i][c] * inv;
            for (std::size_t k = c; k < n; ++k) {
                a[i][k] -= f * a[c][k];
            }
        }
    }
    return det;
}

} // namespace atkin

#endif
