#pragma once

#include <map>
#include <optional>
#include <vector>

#include "geowron/polynomial.hpp"
#include "geowron/series.hpp"
#include "geowron/word.hpp"

namespace gwron {

// Iterated exact partial derivative d^{|w|} / dz^{alpha(w)}.
Polynomial partial_derivative(const Polynomial& f, const Word& w);

// Expansion of the |w|-th derivative of a product: the sum over ordered
// two-word decompositions w1.w2 = w (empty words allowed) of
//   prod_i C(alpha_i(w), alpha_i(w1)) * d_{w1} f * d_{w2} g.
// Always equals partial_derivative(f*g, w).
Polynomial leibniz_expand(const Polynomial& f, const Polynomial& g, const Word& w);

// Least germ exponent vector present under the declared lex convention;
// nullopt for the zero input.
std::optional<Exponents> series_order(const Polynomial& f);
std::optional<Exponents> series_order(const TruncatedSeries& f);

// Substitution f(phi_1,...,phi_n), truncated at total germ degree T.
// f is a polynomial in n germ variables, each phi_j a series in a common
// p-variable germ space with truncation >= T.
TruncatedSeries compose_series(const Polynomial& f, const std::vector<TruncatedSeries>& phi,
                               int T);

// The |w|-th derivative of f o phi, computed by the recursive first-order
// chain rule (one letter at a time). Independent route from
// partial_derivative(compose_series(...)); the two must agree.
TruncatedSeries derivative_of_composition(const Polynomial& f,
                                          const std::vector<TruncatedSeries>& phi, const Word& w);

// Table of the universal composition constants for a word u: one entry per
// unordered decomposition of u into nonempty words. The expansion reads
//   d_u(f o phi) = sum_parts D_part * sum_{i_1..i_k}
//                  d_{i_1..i_k} f o phi * d_{u_1} phi_{i_1} * ... * d_{u_k} phi_{i_k}.
struct CompositionConstants {
    int p;
    int n;
    Word u;
    // Key: decomposition as a canonically sorted word list.
    std::map<std::vector<std::vector<int>>, Rational> table;
};

// Infers the table by evaluating both sides of the expansion on a spanning
// family of monomial test functions and polynomial maps, then solving the
// exact linear system. Throws if the system stays underdetermined.
CompositionConstants infer_composition_constants(int p, int n, const Word& u);

// Evaluates the right-hand side of the expansion with a given table.
TruncatedSeries apply_composition_constants(const CompositionConstants& cc, const Polynomial& f,
                                            const std::vector<TruncatedSeries>& phi);

// All unordered decompositions of u into nonempty words, each returned as a
// canonically sorted list of exponent vectors.
std::vector<std::vector<std::vector<int>>> unordered_decompositions(const Word& u);

}  // namespace gwron
