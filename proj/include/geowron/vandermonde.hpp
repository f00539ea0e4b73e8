#pragma once

#include <string>
#include <vector>

#include "geowron/polynomial.hpp"
#include "geowron/word.hpp"
#include "geowron/wordcomb.hpp"

namespace gwron {

// Columns C_0..C_{count-1}, each with p entries. Entries are polynomials in
// a shared parameter space: rational constants, the indeterminates x_{k,l},
// or anything mixed.
struct ColumnTuple {
    int p = 0;
    std::vector<std::vector<Polynomial>> cols;

    // Fresh indeterminates x_{k,l}; extra_params reserves further parameter
    // slots after them (used by the translation check).
    static ColumnTuple symbolic(int p, int count, int extra_params = 0);
    static ColumnTuple concrete(int p, const std::vector<std::vector<Rational>>& values);

    int count() const { return (int)cols.size(); }
    int param_vars() const { return cols.empty() ? 0 : cols[0][0].param_vars(); }
};

// The monomial row of a word: entry l is prod_k (C_l)_k^{alpha_k(u)}; the
// empty word's row is all ones (use eval_V, which prepends it).
std::vector<Polynomial> row_X(const Word& u, const ColumnTuple& cols);

// det [ones row; X_{u_1}; ...; X_{u_m}] on m+1 columns, rows in canonical
// set order.
Polynomial eval_V(const WordSet& U, const ColumnTuple& cols);

// Homogeneous variant: det [X_{u_1}; ...; X_{u_m}] on m columns.
Polynomial eval_V_tilde(const WordSet& U, const ColumnTuple& cols);

// Symbolic identity V_U(C_0,...,C_m) = V_U(C_0+C,...,C_m+C) with a fresh
// parameter vector C.
bool translation_invariance_check(const WordSet& U);

// Exact comparison of the Wronskian of the monomials z^{alpha_i} evaluated
// at the all-ones point against V_U(alpha_0,...,alpha_m), shifting all
// exponents by a common offset when some derivative would annihilate a
// monomial (the shift changes neither side: the extra factor is g^{m+1}
// with g = 1 at the evaluation point, and V is translation invariant).
bool key_identity_check(const WordSet& U, const std::vector<Exponents>& alphas);

enum class VandermondeVariant { plain, homogeneous };
enum class CertifyDirection { forward, converse, both };

struct CertifyOptions {
    int samples = 100;
    unsigned long seed = default_seed;
    EnumLimit limit{};
};

struct CertifyReport {
    int p = 0;
    int m = 0;
    VandermondeVariant variant = VandermondeVariant::plain;
    unsigned long seed = 0;
    int sets_checked = 0;

    struct ConversePattern {
        std::string pattern;  // e.g. "C1=C3" or "C2=0"
        bool all_vanish;
    };
    std::vector<ConversePattern> converse;
    bool converse_ok = true;

    struct ForwardSample {
        std::vector<std::vector<Rational>> columns;
        std::string witness;  // display form of the witnessing set; empty = none found
    };
    std::vector<ForwardSample> forward;
    int forward_failures = 0;

    // True when a forward sample found no non-vanishing determinant, i.e.
    // the run contradicts the zero-set description.
    bool refuted() const { return forward_failures > 0; }
};

// Certifies the zero-set description of the geometric Vandermonde family:
// converse = every coincidence pattern kills all determinants symbolically;
// forward = coincidence-free random tuples always leave a witness alive.
CertifyReport zero_set_certify(int p, int m, VandermondeVariant variant,
                               CertifyDirection direction, const CertifyOptions& opts = {});

}  // namespace gwron
