#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geowron/polynomial.hpp"
#include "geowron/word.hpp"

namespace gwron {

// Formal coordinate for the alpha-th derivative of the fn-th germ component;
// alpha = 0 is the undifferentiated function.
struct JetVar {
    int fn;
    Exponents alpha;

    int alpha_length() const {
        int s = 0;
        for (int x : alpha) s += x;
        return s;
    }
    auto operator<=>(const JetVar&) const = default;
};

struct JetFactor {
    JetVar var;
    int power;
    auto operator<=>(const JetFactor&) const = default;
};

// Sorted by JetVar, powers >= 1.
using JetMonomial = std::vector<JetFactor>;

// Element of the differential polynomial ring in jet variables: the local
// model of jet differentials, with exact rational coefficients.
class DiffPoly {
public:
    DiffPoly(int p, int max_order);

    static DiffPoly constant(int p, int max_order, const Rational& c);
    static DiffPoly jet_var(int p, int max_order, int fn, const Exponents& alpha);

    int p() const { return p_; }
    int max_order() const { return max_order_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;
    const std::map<JetMonomial, Rational>& terms() const { return terms_; }
    void add_term(const JetMonomial& m, const Rational& c);

    DiffPoly& operator+=(const DiffPoly& o);
    DiffPoly& operator-=(const DiffPoly& o);
    DiffPoly& operator*=(const Rational& c);
    DiffPoly operator-() const;
    friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator*(DiffPoly a, const Rational& c) { return a *= c; }
    friend DiffPoly operator*(const Rational& c, DiffPoly a) { return a *= c; }
    bool operator==(const DiffPoly& o) const = default;

    DiffPoly pow(unsigned e) const;

    // The derivation sending (fn, alpha) to (fn, alpha + e_letter), extended
    // by the product rule; throws when the declared jet order would overflow.
    DiffPoly derive(int letter) const;
    DiffPoly derive(const Word& w) const;

    // Common torus multidegree of all monomials: sum over factors of
    // power * alpha. nullopt means mixed; zero input throws.
    std::optional<Exponents> torus_multidegree() const;

    // Max over monomials of the total exponent carried by jet variables with
    // the given derivative index.
    int degree_in_alpha(const Exponents& alpha) const;

    // Divide by prod_j u_{j,0}^{fn_zero_powers[j]}; nullopt if not exact.
    std::optional<DiffPoly> divide_by_fn_zero_powers(const std::vector<int>& fn_zero_powers) const;

    // Substitute rational values for selected jet variables (nullopt keeps
    // the variable formal).
    DiffPoly specialize(const std::function<std::optional<Rational>(const JetVar&)>& value) const;

    // Full evaluation; every variable must receive a value.
    Rational eval(const std::function<Rational(const JetVar&)>& value) const;

    std::string str() const;  // e.g. u[0;(1,0)]^2*u[1;(0,0)]

private:
    int p_;
    int max_order_;
    std::map<JetMonomial, Rational> terms_;
};

// Generic germ components 0..count-1 as elements of the jet ring: component
// j is the seed u_{j,0}, whose iterated derivations are exactly the raw jet
// variables u_{j,alpha} (no factorial normalization).
std::vector<DiffPoly> make_generic_jet(int p, int k, int count);

}  // namespace gwron
