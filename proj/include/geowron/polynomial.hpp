#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geowron/rational.hpp"

namespace gwron {

// Exponent vector over the variable space of a polynomial: the first
// germ_vars() entries are the germ variables z1..zp, the rest are parameter
// variables (symbolic coefficients, Vandermonde column entries, ...).
using Exponents = std::vector<int>;

// Declared exponent-order convention: lexicographic with coordinate 1 (z1)
// most significant. std::vector's operator< is exactly this order, so term
// maps keyed by Exponents iterate in ascending declared order.
struct LexOrder {
    static bool less(const Exponents& a, const Exponents& b) { return a < b; }
};

// Sparse multivariate polynomial over exact rationals.
class Polynomial {
public:
    Polynomial() : germ_(0), params_(0) {}
    explicit Polynomial(int germ_vars, int param_vars = 0);

    static Polynomial constant(int germ_vars, const Rational& c, int param_vars = 0);
    static Polynomial variable(int germ_vars, int var_index, int param_vars = 0);
    static Polynomial monomial(int germ_vars, const Exponents& e, const Rational& c,
                               int param_vars = 0);

    int germ_vars() const { return germ_; }
    int param_vars() const { return params_; }
    int total_vars() const { return germ_ + params_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()

    const std::map<Exponents, Rational>& terms() const { return terms_; }
    void add_term(const Exponents& e, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    bool operator==(const Polynomial& o) const = default;

    Polynomial pow(unsigned e) const;

    // d/dz_{var} (0-based germ variable index), exact power rule.
    Polynomial derivative(int var) const;

    int germ_degree() const;   // max total degree in germ variables, -1 for 0
    int param_degree() const;  // max total degree in parameter variables, -1 for 0
    Polynomial truncate_germ(int max_total_degree) const;

    // Least germ exponent vector present, in the declared order; nullopt for
    // the zero polynomial. This is the order of the polynomial seen as a
    // power series.
    std::optional<Exponents> min_germ_exponent() const;
    // Coefficient of the given germ exponent vector (requires param_vars()==0).
    Rational germ_coeff(const Exponents& germ_exp) const;

    // Substitute rational values for the germ variables; parameters remain.
    Polynomial eval_germ(const std::vector<Rational>& point) const;
    Rational eval_all(const std::vector<Rational>& point) const;

    // Substitute polynomials for the germ variables. All subs must share a
    // common variable space, which becomes the result's space.
    Polynomial substitute_germ(const std::vector<Polynomial>& subs) const;

    // Reinterpret with a larger parameter space (existing terms padded).
    Polynomial with_param_vars(int param_vars) const;

    // Canonical printer: terms in descending declared lex order, coefficients
    // as reduced fractions. Round-trips through parse_polynomial for
    // parameter-free polynomials.
    std::string str() const;
    std::string str(const std::function<std::string(int)>& var_name) const;

private:
    void check_same_space(const Polynomial& o) const;
    int32_t germ_;
    int32_t params_;
    std::map<Exponents, Rational> terms_;
};

// Expression parser for the polynomial grammar: variables z1..zp, integer and
// a/b rational literals, + - * / ^, parentheses; whitespace insignificant.
Polynomial parse_polynomial(const std::string& expr, int p);

// Exact division, throws error if b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

}  // namespace gwron
