#include "geowron/jet.hpp"

#include <algorithm>
#include <sstream>

namespace gwron {

DiffPoly::DiffPoly(int p, int max_order) : p_(p), max_order_(max_order) {
    if (p < 1 || max_order < 1) throw arity_error("jet ring needs p >= 1 and order >= 1");
}

DiffPoly DiffPoly::constant(int p, int max_order, const Rational& c) {
    DiffPoly r(p, max_order);
    if (c != 0) r.terms_.emplace(JetMonomial{}, c);
    return r;
}

DiffPoly DiffPoly::jet_var(int p, int max_order, int fn, const Exponents& alpha) {
    DiffPoly r(p, max_order);
    if ((int)alpha.size() != p) throw arity_error("jet index arity mismatch");
    JetVar v{fn, alpha};
    if (v.alpha_length() > max_order) throw arity_error("jet index beyond declared order");
    r.terms_.emplace(JetMonomial{{std::move(v), 1}}, Rational(1));
    return r;
}

bool DiffPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational DiffPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw error("differential polynomial is not constant");
    return terms_.begin()->second;
}

void DiffPoly::add_term(const JetMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
    if (p_ != o.p_) throw arity_error("jet rings differ");
    max_order_ = std::max(max_order_, o.max_order_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
    if (p_ != o.p_) throw arity_error("jet rings differ");
    max_order_ = std::max(max_order_, o.max_order_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

DiffPoly& DiffPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly r(*this);
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

namespace {

JetMonomial merge_monomials(const JetMonomial& a, const JetMonomial& b) {
    JetMonomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].var == b[j].var) {
            out.push_back({a[i].var, a[i].power + b[j].power});
            ++i;
            ++j;
        } else if (a[i].var < b[j].var) {
            out.push_back(a[i++]);
        } else {
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

}  // namespace

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
    if (a.p_ != b.p_) throw arity_error("jet rings differ");
    DiffPoly r(a.p_, std::max(a.max_order_, b.max_order_));
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(merge_monomials(ma, mb), ca * cb);
    return r;
}

DiffPoly DiffPoly::pow(unsigned e) const {
    DiffPoly r = DiffPoly::constant(p_, max_order_, Rational(1));
    DiffPoly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

DiffPoly DiffPoly::derive(int letter) const {
    if (letter < 0 || letter >= p_) throw arity_error("letter out of range");
    DiffPoly r(p_, max_order_);
    for (const auto& [m, c] : terms_) {
        for (std::size_t k = 0; k < m.size(); ++k) {
            JetVar v = m[k].var;
            if (v.alpha_length() + 1 > max_order_)
                throw arity_error("derivation overflows the declared jet order " +
                                  std::to_string(max_order_));
            v.alpha[letter] += 1;
            JetMonomial rest;
            rest.reserve(m.size());
            for (std::size_t t = 0; t < m.size(); ++t) {
                if (t == k) {
                    if (m[t].power > 1) rest.push_back({m[t].var, m[t].power - 1});
                } else {
                    rest.push_back(m[t]);
                }
            }
            r.add_term(merge_monomials(rest, {{std::move(v), 1}}), c * m[k].power);
        }
    }
    return r;
}

DiffPoly DiffPoly::derive(const Word& w) const {
    if (w.p() != p_) throw arity_error("word alphabet does not match the jet ring");
    DiffPoly r = *this;
    for (int i = 0; i < p_; ++i)
        for (int k = 0; k < w.alpha()[i]; ++k) r = r.derive(i);
    return r;
}

std::optional<Exponents> DiffPoly::torus_multidegree() const {
    if (terms_.empty()) throw error("torus multidegree of the zero element");
    std::optional<Exponents> common;
    for (const auto& [m, c] : terms_) {
        Exponents deg(p_, 0);
        for (const auto& f : m)
            for (int i = 0; i < p_; ++i) deg[i] += f.power * f.var.alpha[i];
        if (!common) {
            common = std::move(deg);
        } else if (*common != deg) {
            return std::nullopt;
        }
    }
    return common;
}

int DiffPoly::degree_in_alpha(const Exponents& alpha) const {
    int best = 0;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (const auto& f : m)
            if (f.var.alpha == alpha) d += f.power;
        best = std::max(best, d);
    }
    return best;
}

std::optional<DiffPoly> DiffPoly::divide_by_fn_zero_powers(
    const std::vector<int>& fn_zero_powers) const {
    DiffPoly out(p_, max_order_);
    const Exponents zero(p_, 0);
    for (const auto& [m, c] : terms_) {
        JetMonomial nm;
        std::vector<int> seen(fn_zero_powers.size(), 0);
        for (const auto& f : m) {
            if (f.var.alpha == zero && f.var.fn < (int)fn_zero_powers.size()) {
                seen[f.var.fn] = f.power;
                int rem = f.power - fn_zero_powers[f.var.fn];
                if (rem < 0) return std::nullopt;
                if (rem > 0) nm.push_back({f.var, rem});
            } else {
                nm.push_back(f);
            }
        }
        for (std::size_t j = 0; j < fn_zero_powers.size(); ++j)
            if (seen[j] < fn_zero_powers[j]) return std::nullopt;
        out.add_term(nm, c);
    }
    return out;
}

DiffPoly DiffPoly::specialize(
    const std::function<std::optional<Rational>(const JetVar&)>& value) const {
    DiffPoly out(p_, max_order_);
    for (const auto& [m, c] : terms_) {
        Rational coeff = c;
        JetMonomial nm;
        for (const auto& f : m) {
            if (auto v = value(f.var)) {
                coeff *= pow_rational(*v, f.power);
                if (coeff == 0) break;
            } else {
                nm.push_back(f);
            }
        }
        out.add_term(nm, coeff);
    }
    return out;
}

Rational DiffPoly::eval(const std::function<Rational(const JetVar&)>& value) const {
    Rational out(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (const auto& f : m) v *= pow_rational(value(f.var), f.power);
        out += v;
    }
    return out;
}

std::string DiffPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        first = false;
        Rational a = c < 0 ? Rational(-c) : c;
        std::string mono;
        for (const auto& f : m) {
            if (!mono.empty()) mono += "*";
            mono += "u[" + std::to_string(f.var.fn) + ";(";
            for (int i = 0; i < p_; ++i) {
                if (i) mono += ",";
                mono += std::to_string(f.var.alpha[i]);
            }
            mono += ")]";
            if (f.power > 1) mono += "^" + std::to_string(f.power);
        }
        if (mono.empty()) out << to_string(a);
        else if (a == 1) out << mono;
        else out << to_string(a) << "*" << mono;
    }
    return out.str();
}

std::vector<DiffPoly> make_generic_jet(int p, int k, int count) {
    if (count < 1) throw arity_error("need at least one germ component");
    std::vector<DiffPoly> out;
    out.reserve(count);
    for (int j = 0; j < count; ++j)
        out.push_back(DiffPoly::jet_var(p, k, j, Exponents(p, 0)));
    return out;
}

}  // namespace gwron
