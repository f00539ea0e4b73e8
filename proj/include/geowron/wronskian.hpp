#pragma once

#include <optional>
#include <vector>

#include "geowron/calculus.hpp"
#include "geowron/determinant.hpp"
#include "geowron/jet.hpp"
#include "geowron/linalg.hpp"
#include "geowron/polynomial.hpp"
#include "geowron/series.hpp"
#include "geowron/word.hpp"
#include "geowron/wordcomb.hpp"

namespace gwron {

// Finite rational linear combination of pure generalized Wronskians of a
// common size m. Terms are kept in canonical set order, duplicate sets and
// zero coefficients are rejected.
class WronskianCombination {
public:
    struct Term {
        Rational coeff;
        WordSet set;
    };

    explicit WronskianCombination(std::vector<Term> terms);
    static WronskianCombination pure(WordSet set);

    int size() const { return m_; }  // m: one less than the number of functions
    int order() const;               // max order among the sets
    const std::vector<Term>& terms() const { return terms_; }

    // Largest characteristic sequence among the pure terms; the combination
    // belongs to the filtration stage indexed by that sequence.
    CharSequence stratum() const;

private:
    int m_;
    std::vector<Term> terms_;
};

inline Polynomial apply_word_derivative(const Polynomial& f, const Word& w) {
    return partial_derivative(f, w);
}
inline TruncatedSeries apply_word_derivative(const TruncatedSeries& f, const Word& w) {
    return f.derivative(w);
}
inline DiffPoly apply_word_derivative(const DiffPoly& f, const Word& w) { return f.derive(w); }

// Row 0 holds the functions, row i the d_{u_i} derivatives, u_i in canonical
// set order. Requires |fs| = |U| + 1.
template <class F>
Matrix<F> wronskian_matrix(const WordSet& U, const std::vector<F>& fs) {
    if ((int)fs.size() != U.size() + 1)
        throw arity_error("need exactly " + std::to_string(U.size() + 1) + " functions, got " +
                          std::to_string(fs.size()));
    Matrix<F> m;
    m.push_back(fs);
    for (const Word& u : U.words()) {
        std::vector<F> row;
        row.reserve(fs.size());
        for (const F& f : fs) row.push_back(apply_word_derivative(f, u));
        m.push_back(std::move(row));
    }
    return m;
}

Polynomial eval_wronskian(const WordSet& U, const std::vector<Polynomial>& fs);
TruncatedSeries eval_wronskian(const WordSet& U, const std::vector<TruncatedSeries>& fs);
DiffPoly eval_wronskian(const WordSet& U, const std::vector<DiffPoly>& fs);

template <class F>
F eval_wronskian(const WronskianCombination& W, const std::vector<F>& fs) {
    std::optional<F> acc;
    for (const auto& t : W.terms()) {
        F v = eval_wronskian(t.set, fs);
        v = t.coeff * v;
        if (acc) *acc += v;
        else acc = std::move(v);
    }
    return *acc;
}

enum class GeoMode { exact, randomized };

struct GeoOptions {
    int trials = 16;
    unsigned long seed = default_seed;
};

// Concrete refutation data: polynomials g, f_0..f_m for which the two sides
// differ at the origin.
struct GeoCertificate {
    Polynomial g;
    std::vector<Polynomial> fs;
    Rational lhs;
    Rational rhs;
};

struct GeoResult {
    bool geometric;
    std::optional<GeoCertificate> counterexample;
};

// Decides whether W(g f_0,...,g f_m) = g^{m+1} W(f_0,...,f_m) holds for all
// germs. Exact mode proves or refutes; randomized mode is one-sided ("false"
// is certain, "true" holds with high probability).
GeoResult is_geometric(const WronskianCombination& W, GeoMode mode, const GeoOptions& opts = {});

// Evaluates W on the germs f_i(x + phi(.)) at 0. phi must fix 0 and have an
// invertible linear part; each component's truncation must cover order(W).
Rational act_biholomorphism(const WronskianCombination& W,
                            const std::vector<TruncatedSeries>& phi,
                            const std::vector<Polynomial>& fs, const std::vector<Rational>& x);

// Checks W_{U_n}(f_0 o A,...) = det(A)^{w(U_n)/p} * (W_{U_n}(f_0,...) o A)
// for an invertible rational matrix A.
bool det_power_law_check(int p, int n, const RationalMatrix& A,
                         const std::vector<Polynomial>& fs);

// W of the maximal-symmetry full set of order n on |U_n|+1 polynomials.
Polynomial wronskian_on_basis(int p, int n, const std::vector<Polynomial>& fs);

}  // namespace gwron
