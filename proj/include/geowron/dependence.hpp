#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geowron/linalg.hpp"
#include "geowron/polynomial.hpp"
#include "geowron/word.hpp"
#include "geowron/wordcomb.hpp"

namespace gwron {

// Exact rank of the coefficient matrix over the rationals; the independent
// ground truth the Wronskian route is measured against.
int rank_oracle(const std::vector<Polynomial>& fs);

struct ReductionStep {
    enum class Kind { swap, transvection } kind;
    int i = 0;
    int j = 0;
    Rational lambda;  // transvections only: t_j <- t_j - lambda * t_i

    std::string str() const;
};

struct ReductionResult {
    std::vector<Polynomial> ts;     // pairwise distinct series orders
    RationalMatrix A;               // (t_0..t_m) = (f_0..f_m) * A, invertible
    std::vector<ReductionStep> steps;
};

// Column permutations plus transvections with the exact leading-coefficient
// ratio, iterated until the series orders are pairwise distinct. Requires a
// linearly independent family.
ReductionResult distinct_order_reduction(const std::vector<Polynomial>& fs);

// Scans the full sets of size m in canonical order and returns the first one
// whose Wronskian is not the zero polynomial; nullopt iff fs are dependent.
std::optional<WordSet> independence_witness(const std::vector<Polynomial>& fs,
                                            const EnumLimit& limit = {});

// Verifies that the series order of W_U(z^{alpha_0}+tail_0, ...) equals
// sum_i alpha_i - beta(U). Requires V_U(alphas) != 0 and tails whose terms
// are strictly lex-larger than the matching alpha.
bool least_order_check(const WordSet& U, const std::vector<Exponents>& alphas,
                       const std::vector<Polynomial>& tails);

}  // namespace gwron
