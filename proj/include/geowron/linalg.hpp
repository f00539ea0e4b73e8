#pragma once

#include <optional>
#include <vector>

#include "geowron/rational.hpp"

namespace gwron {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Exact Gaussian elimination over the rationals.

inline int matrix_rank(RationalMatrix a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[row][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

inline Rational matrix_determinant(RationalMatrix a) {
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

enum class SolveStatus { unique, underdetermined, inconsistent };

struct SolveResult {
    SolveStatus status;
    std::vector<Rational> solution;  // filled only when unique
};

// Solves A x = b; reports whether the solution is unique over the rationals.
inline SolveResult solve_linear(RationalMatrix a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        std::swap(b[piv], b[row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[row][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
            b[r] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (b[r] != 0) return {SolveStatus::inconsistent, {}};
    if (pivot_col.size() < cols) return {SolveStatus::underdetermined, {}};
    std::vector<Rational> x(cols);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r] / a[r][pivot_col[r]];
    return {SolveStatus::unique, std::move(x)};
}

}  // namespace gwron
