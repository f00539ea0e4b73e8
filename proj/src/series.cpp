#include "geowron/series.hpp"

namespace gwron {

TruncatedSeries::TruncatedSeries(Polynomial poly, int trunc)
    : poly_(poly.truncate_germ(trunc)), trunc_(trunc) {
    if (trunc < 0) throw precision_error("negative truncation order");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    trunc_ = std::min(trunc_, o.trunc_);
    poly_ += o.poly_;
    poly_ = poly_.truncate_germ(trunc_);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    trunc_ = std::min(trunc_, o.trunc_);
    poly_ -= o.poly_;
    poly_ = poly_.truncate_germ(trunc_);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int t = std::min(a.trunc_, b.trunc_);
    return {(a.poly_ * b.poly_).truncate_germ(t), t};
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
    TruncatedSeries r(Polynomial::constant(poly_.germ_vars(), Rational(1), poly_.param_vars()),
                      trunc_);
    TruncatedSeries base = *this;
    for (unsigned i = 0; i < e; ++i) r = r * base;
    return r;
}

TruncatedSeries TruncatedSeries::derivative(const Word& w) const {
    if (w.p() != germ_vars()) throw arity_error("word alphabet does not match germ space");
    if (trunc_ < w.length())
        throw precision_error("truncation " + std::to_string(trunc_) +
                              " cannot absorb a derivative of order " +
                              std::to_string(w.length()));
    Polynomial d = poly_;
    for (int i = 0; i < w.p(); ++i)
        for (int k = 0; k < w.alpha()[i]; ++k) d = d.derivative(i);
    return {std::move(d), trunc_ - w.length()};
}

Rational TruncatedSeries::derivative_value_at_zero(const Exponents& e) const {
    if ((int)e.size() != germ_vars()) throw arity_error("exponent arity mismatch");
    int len = 0;
    for (int x : e) len += x;
    if (len > trunc_)
        throw precision_error("derivative order exceeds the truncation bound");
    if (poly_.param_vars() != 0) throw arity_error("value extraction requires no parameters");
    Rational c = poly_.germ_coeff(e);
    for (int x : e) c *= factorial((unsigned long)x);
    return c;
}

}  // namespace gwron
