#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "geowron/word.hpp"

namespace gwron {

// True iff some ordering u_1..u_m has length(u_i) <= i for all i.
bool is_admissible(const WordSet& ws);

// True iff the set is downward closed: every nonzero subword of a member is
// a member.
bool is_full(const WordSet& ws);

struct EnumLimit {
    std::size_t max_sets = 2000000;
};

// All full sets of size m over the alphabet {1..p}, in canonical set order.
std::vector<WordSet> enumerate_full_sets(int p, int m, const EnumLimit& limit = {});

// The full set of all words of length <= n.
WordSet canonical_full_set(int p, int n);

// Closed forms for the size and weight of canonical_full_set(p, n):
//   sum_{i=1..n} C(p+i-1, p-1)  and  sum_{i=1..n} i*C(p+i-1, p-1).
Integer count_words_upto(int p, int n);
Integer weight_words_upto(int p, int n);

// Number of words of a given length.
Integer count_words_of_length(int p, int length);

// Least possible weight of a characteristic sequence of size m: fill each
// n_j greedily with the largest feasible count, shortest lengths first.
std::pair<CharSequence, Integer> min_weight_for_size(int p, const Integer& m);

// The quotient r(n)*(m(n)+1)/w_min(n) with m(n) = |full set of words of
// length <= n| and r(n) the least integer with C*r^(p+1) > m(n).
Rational foliation_ratio(int p, int C, int n);

}  // namespace gwron
