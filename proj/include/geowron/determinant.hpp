#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "geowron/rational.hpp"

namespace gwron {

template <class T>
bool ring_is_zero(const T& t) {
    return t.is_zero();
}
inline bool ring_is_zero(const Rational& q) {
    return q == 0;
}

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Laplace expansion with minors memoized per column subset; O(2^n * n) ring
// multiplications, no division required.
template <class T>
T det_laplace(const Matrix<T>& m, const T& zero, const T& one) {
    const std::size_t n = m.size();
    std::vector<T> minors((std::size_t)1 << n, zero);
    minors[0] = one;
    for (std::uint32_t mask = 1; mask < ((std::uint32_t)1 << n); ++mask) {
        const int r = std::popcount(mask) - 1;
        T acc = zero;
        int pos = 0;
        for (std::uint32_t bits = mask; bits; bits &= bits - 1, ++pos) {
            const int j = std::countr_zero(bits);
            if (!ring_is_zero(m[r][j])) {
                T contrib = m[r][j] * minors[mask ^ ((std::uint32_t)1 << j)];
                if (pos % 2 == 0) acc += contrib;
                else acc -= contrib;
            }
        }
        minors[mask] = std::move(acc);
    }
    return minors[((std::uint32_t)1 << n) - 1];
}

// Fraction-free elimination; Div(a, b) must implement the exact division the
// Sylvester identity guarantees. Row pivoting only.
template <class T, class Div>
T det_bareiss(Matrix<T> m, const T& zero, const T& one, Div div) {
    const std::size_t n = m.size();
    T prev = one;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && ring_is_zero(m[piv][k])) ++piv;
        if (piv == n) return zero;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = zero;
        }
        prev = m[k][k];
    }
    return negate ? zero - m[n - 1][n - 1] : m[n - 1][n - 1];
}

template <class T>
bool has_zero_row_or_column(const Matrix<T>& m) {
    const std::size_t n = m.size();
    for (std::size_t r = 0; r < n; ++r) {
        bool all = true;
        for (std::size_t c = 0; c < n && all; ++c) all = ring_is_zero(m[r][c]);
        if (all) return true;
    }
    for (std::size_t c = 0; c < n; ++c) {
        bool all = true;
        for (std::size_t r = 0; r < n && all; ++r) all = ring_is_zero(m[r][c]);
        if (all) return true;
    }
    return false;
}

// Determinant over a ring without exact division: memoized Laplace only.
template <class T>
T determinant(const Matrix<T>& m, const T& zero, const T& one) {
    if (m.empty()) return one;
    if (has_zero_row_or_column(m)) return zero;
    return det_laplace(m, zero, one);
}

// Determinant with a division policy: small sizes go through the memoized
// Laplace expansion, larger ones through fraction-free elimination.
template <class T, class Div>
T determinant(const Matrix<T>& m, const T& zero, const T& one, Div div,
              std::size_t laplace_limit = 8) {
    if (m.empty()) return one;
    if (has_zero_row_or_column(m)) return zero;
    if (m.size() <= laplace_limit) return det_laplace(m, zero, one);
    return det_bareiss(m, zero, one, div);
}

}  // namespace gwron
