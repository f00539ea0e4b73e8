#pragma once

// Test-only oracles, deliberately independent of the library's algorithm
// choices: a permutation-sum determinant, a level-by-level order-ideal
// enumerator, and an exhaustive admissibility search.

#include <algorithm>
#include <set>
#include <vector>

#include "geowron/determinant.hpp"
#include "geowron/word.hpp"

namespace gwron::oracle {

template <class T>
T det_permutation(const Matrix<T>& m, T zero) {
    const int n = (int)m.size();
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    T acc = std::move(zero);
    std::sort(idx.begin(), idx.end());
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (idx[i] > idx[j]) ++inversions;
        T prod = m[0][idx[0]];
        for (int r = 1; r < n; ++r) prod = prod * m[r][idx[r]];
        if (inversions % 2 == 0) acc += prod;
        else acc -= prod;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return acc;
}

inline std::vector<std::vector<int>> all_exponents_up_to_length(int p, int max_len) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(p, 0);
    for (;;) {
        int len = 0;
        for (int x : e) len += x;
        if (len >= 1 && len <= max_len) out.push_back(e);
        int i = 0;
        for (; i < p; ++i) {
            if (e[i] < max_len) {
                ++e[i];
                std::fill(e.begin(), e.begin() + i, 0);
                break;
            }
            e[i] = 0;
        }
        if (i == p) break;
    }
    return out;
}

// Grows ideals one element at a time from the singletons, deduplicating via
// plain sorted keys; no canonical-extension rule involved.
inline std::vector<WordSet> full_sets_by_levels(int p, int m) {
    using Key = std::vector<std::vector<int>>;
    auto universe = all_exponents_up_to_length(p, m);
    std::set<Key> level;
    for (const auto& e : universe) {
        int len = 0;
        for (int x : e) len += x;
        if (len == 1) level.insert({e});
    }
    auto closed_under_covers = [&](const Key& ideal, const std::vector<int>& w) {
        for (int i = 0; i < p; ++i) {
            if (w[i] == 0) continue;
            std::vector<int> sub = w;
            sub[i] -= 1;
            int len = 0;
            for (int x : sub) len += x;
            if (len == 0) continue;
            if (!std::binary_search(ideal.begin(), ideal.end(), sub)) return false;
        }
        return true;
    };
    for (int step = 2; step <= m; ++step) {
        std::set<Key> next;
        for (const Key& ideal : level) {
            for (const auto& w : universe) {
                if (std::binary_search(ideal.begin(), ideal.end(), w)) continue;
                if (!closed_under_covers(ideal, w)) continue;
                Key grown = ideal;
                grown.insert(std::lower_bound(grown.begin(), grown.end(), w), w);
                next.insert(std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<WordSet> out;
    for (const Key& ideal : level) {
        std::vector<Word> words;
        for (const auto& e : ideal) words.emplace_back(e);
        out.emplace_back(std::move(words));
    }
    std::sort(out.begin(), out.end(), canonical_set_less);
    return out;
}

inline bool admissible_by_permutation_search(const WordSet& ws) {
    std::vector<int> lens;
    for (const Word& w : ws.words()) lens.push_back(w.length());
    std::sort(lens.begin(), lens.end());
    do {
        bool ok = true;
        for (std::size_t i = 0; i < lens.size(); ++i)
            if (lens[i] > (int)i + 1) ok = false;
        if (ok) return true;
    } while (std::next_permutation(lens.begin(), lens.end()));
    return false;
}

}  // namespace gwron::oracle
