#include "geowron/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace gwron {

Polynomial::Polynomial(int germ_vars, int param_vars) : germ_(germ_vars), params_(param_vars) {
    if (germ_vars < 0 || param_vars < 0) throw arity_error("negative variable count");
}

Polynomial Polynomial::constant(int germ_vars, const Rational& c, int param_vars) {
    Polynomial r(germ_vars, param_vars);
    if (c != 0) r.terms_.emplace(Exponents(germ_vars + param_vars, 0), c);
    return r;
}

Polynomial Polynomial::variable(int germ_vars, int var_index, int param_vars) {
    Polynomial r(germ_vars, param_vars);
    if (var_index < 0 || var_index >= germ_vars + param_vars)
        throw arity_error("variable index out of range");
    Exponents e(germ_vars + param_vars, 0);
    e[var_index] = 1;
    r.terms_.emplace(std::move(e), Rational(1));
    return r;
}

Polynomial Polynomial::monomial(int germ_vars, const Exponents& e, const Rational& c,
                                int param_vars) {
    Polynomial r(germ_vars, param_vars);
    if ((int)e.size() != germ_vars + param_vars) throw arity_error("exponent arity mismatch");
    for (int x : e)
        if (x < 0) throw arity_error("negative exponent");
    if (c != 0) r.terms_.emplace(e, c);
    return r;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw error("polynomial is not constant");
    return terms_.begin()->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_same_space(const Polynomial& o) const {
    if (germ_ != o.germ_ || params_ != o.params_)
        throw arity_error("polynomials live in different variable spaces");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_space(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_space(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_space(b);
    Polynomial r(a.germ_, a.params_);
    const int nv = a.germ_ + a.params_;
    Exponents e(nv);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = Polynomial::constant(germ_, Rational(1), params_);
    Polynomial base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= germ_) throw arity_error("derivative variable out of range");
    Polynomial r(germ_, params_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents ne = e;
        ne[var] -= 1;
        r.add_term(ne, c * e[var]);
    }
    return r;
}

int Polynomial::germ_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int i = 0; i < germ_; ++i) s += e[i];
        d = std::max(d, s);
    }
    return d;
}

int Polynomial::param_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int i = germ_; i < germ_ + params_; ++i) s += e[i];
        d = std::max(d, s);
    }
    return d;
}

Polynomial Polynomial::truncate_germ(int max_total_degree) const {
    Polynomial r(germ_, params_);
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int i = 0; i < germ_; ++i) s += e[i];
        if (s <= max_total_degree) r.terms_.emplace(e, c);
    }
    return r;
}

std::optional<Exponents> Polynomial::min_germ_exponent() const {
    if (terms_.empty()) return std::nullopt;
    // Germ variables are the most significant coordinates of the term keys,
    // so the first term already carries the least germ exponent.
    const Exponents& e = terms_.begin()->first;
    return Exponents(e.begin(), e.begin() + germ_);
}

Rational Polynomial::germ_coeff(const Exponents& germ_exp) const {
    if (params_ != 0) throw arity_error("germ_coeff requires a parameter-free polynomial");
    if ((int)germ_exp.size() != germ_) throw arity_error("exponent arity mismatch");
    auto it = terms_.find(germ_exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::eval_germ(const std::vector<Rational>& point) const {
    if ((int)point.size() != germ_) throw arity_error("evaluation point arity mismatch");
    Polynomial r(0, params_);
    Exponents pe(params_);
    for (const auto& [e, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < germ_; ++i) v *= pow_rational(point[i], e[i]);
        std::copy(e.begin() + germ_, e.end(), pe.begin());
        r.add_term(pe, v);
    }
    return r;
}

Rational Polynomial::eval_all(const std::vector<Rational>& point) const {
    if ((int)point.size() != germ_ + params_) throw arity_error("evaluation point arity mismatch");
    Rational r(0);
    for (const auto& [e, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < germ_ + params_; ++i) v *= pow_rational(point[i], e[i]);
        r += v;
    }
    return r;
}

Polynomial Polynomial::substitute_germ(const std::vector<Polynomial>& subs) const {
    if ((int)subs.size() != germ_) throw arity_error("substitution arity mismatch");
    if (params_ != 0) throw arity_error("substitute_germ requires a parameter-free polynomial");
    if (germ_ == 0) return *this;
    const Polynomial model = subs.front();
    Polynomial r(model.germ_vars(), model.param_vars());
    for (const auto& [e, c] : terms_) {
        Polynomial t = Polynomial::constant(model.germ_vars(), c, model.param_vars());
        for (int i = 0; i < germ_; ++i)
            if (e[i] > 0) t = t * subs[i].pow((unsigned)e[i]);
        r += t;
    }
    return r;
}

Polynomial Polynomial::with_param_vars(int param_vars) const {
    if (param_vars < params_) throw arity_error("cannot shrink parameter space");
    Polynomial r(germ_, param_vars);
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        ne.resize(germ_ + param_vars, 0);
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

std::string Polynomial::str() const {
    return str([this](int i) {
        return i < germ_ ? "z" + std::to_string(i + 1) : "a" + std::to_string(i - germ_ + 1);
    });
}

std::string Polynomial::str(const std::function<std::string(int)>& var_name) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Descending declared lex order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        for (int i = 0; i < (int)e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out << to_string(abs_c);
        } else if (abs_c == 1) {
            out << mono;
        } else {
            out << to_string(abs_c) << "*" << mono;
        }
    }
    return out.str();
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw error("division by zero polynomial");
    if (a.germ_vars() != b.germ_vars() || a.param_vars() != b.param_vars())
        throw arity_error("polynomials live in different variable spaces");
    Polynomial rem = a;
    Polynomial quot(a.germ_vars(), a.param_vars());
    // Leading term = greatest key in the declared order.
    const auto& blt = *b.terms().rbegin();
    const int nv = a.total_vars();
    while (!rem.is_zero()) {
        const auto& rlt = *rem.terms().rbegin();
        Exponents q(nv);
        for (int i = 0; i < nv; ++i) {
            q[i] = rlt.first[i] - blt.first[i];
            if (q[i] < 0) throw error("polynomial division is not exact");
        }
        Rational qc = rlt.second / blt.second;
        Polynomial qm = Polynomial::monomial(a.germ_vars(), q, qc, a.param_vars());
        quot += qm;
        rem -= qm * b;
    }
    return quot;
}

}  // namespace gwron
