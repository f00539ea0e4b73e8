#pragma once

#include "geowron/polynomial.hpp"
#include "geowron/word.hpp"

namespace gwron {

// A polynomial with an explicit total-degree truncation bound on the germ
// variables: terms of germ degree > trunc are identically discarded, and
// every operation that consumes precision fails loudly rather than return a
// silently wrong tail.
class TruncatedSeries {
public:
    TruncatedSeries(Polynomial poly, int trunc);

    const Polynomial& poly() const { return poly_; }
    int trunc() const { return trunc_; }
    int germ_vars() const { return poly_.germ_vars(); }
    bool is_zero() const { return poly_.is_zero(); }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        return a += b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
        return a -= b;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) {
        a.poly_ *= c;
        return a;
    }
    TruncatedSeries operator-() const { return {-poly_, trunc_}; }
    bool operator==(const TruncatedSeries& o) const = default;

    TruncatedSeries pow(unsigned e) const;

    // Derivative consumes |w| orders of precision; throws precision_error if
    // none is left.
    TruncatedSeries derivative(const Word& w) const;

    // Value of the |e|-th partial derivative at 0, i.e. e! times the
    // coefficient of z^e; requires |e| within the truncation bound.
    Rational derivative_value_at_zero(const Exponents& e) const;

private:
    Polynomial poly_;
    int trunc_;
};

}  // namespace gwron
