#pragma once

#include <utility>
#include <vector>

#include "geowron/jet.hpp"
#include "geowron/word.hpp"
#include "geowron/wordcomb.hpp"

namespace gwron {

struct FermatConfig {
    int N;      // ambient projective dimension
    int p;      // germ dimension, 1 <= p <= N-1
    int delta;  // hypersurface degree

    FermatConfig(int N_, int p_, int delta_);

    // Degree bound (N+1)(N-p) of the degeneracy statement. Informational:
    // the symbolic checks hold for every delta >= 1.
    long long threshold() const { return (long long)(N + 1) * (N - p); }
    bool delta_qualifies() const { return delta > threshold(); }
};

// Splits the full sets of size N-1 into those containing all p singletons
// (order <= N-p) and the rest (each missing at least one letter entirely).
std::pair<std::vector<WordSet>, std::vector<WordSet>> partition_fullsets(int N, int p);

// W_U of the delta-th powers of N generic germ components, expanded in the
// jet ring.
DiffPoly fermat_wronskian(const FermatConfig& cfg, const WordSet& U);

struct ColumnFactorization {
    std::vector<int> exponents;  // per-function power of u_{j,0} pulled out
    DiffPoly cofactor;
};

// Exact division certificate W = prod_j u_{j,0}^{delta-k} * cofactor with
// k = order(U); failure would contradict the column factorization and is a
// hard error.
ColumnFactorization factor_columns(const FermatConfig& cfg, const WordSet& U, const DiffPoly& W);

// Alternating-multilinearity identity behind the hyperplane restriction:
// W_U(c_1,...,c_{N-1}, -c_0-c_1-...-c_{N-1}) = W_U(c_1,...,c_{N-1}, -c_0)
// on generic jet columns.
bool restriction_identity_check(const FermatConfig& cfg, const WordSet& U);

// Identical vanishing of W_U(z_1^d,...,z_p^d, g^d tails..., -1) for a set
// missing a letter: exact check in the jet ring with the coordinate germs
// specialized and the tails generic.
bool fminus_vanishing_check(const FermatConfig& cfg, const WordSet& U);

// Secondary cross-validation: random truncated-series tails at a generic
// rational base point; the resulting series must vanish within truncation.
bool fminus_vanishing_series_check(const FermatConfig& cfg, const WordSet& U, int trunc,
                                   unsigned long seed = default_seed);

struct DegreeThreshold {
    int N;
    int p;
    long long threshold;
};

// Threshold rows for all germ dimensions 1..N-1.
std::vector<DegreeThreshold> degree_report(int N);

}  // namespace gwron
