#include "geowron/calculus.hpp"

#include <algorithm>

#include "geowron/linalg.hpp"

namespace gwron {

namespace {

// Iterated derivative by a raw exponent vector; tolerates the zero vector.
Polynomial derive_by_exponents(const Polynomial& f, const Exponents& e) {
    Polynomial r = f;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) r = r.derivative((int)i);
    return r;
}

int exponents_length(const Exponents& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
}

// Advances a componentwise odometer 0 <= x <= cap; false when exhausted.
bool next_below(Exponents& x, const Exponents& cap) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < cap[i]) {
            ++x[i];
            std::fill(x.begin(), x.begin() + i, 0);
            return true;
        }
        x[i] = 0;
    }
    return false;
}

}  // namespace

Polynomial partial_derivative(const Polynomial& f, const Word& w) {
    if (w.p() != f.germ_vars()) throw arity_error("word alphabet does not match germ space");
    return derive_by_exponents(f, w.alpha());
}

Polynomial leibniz_expand(const Polynomial& f, const Polynomial& g, const Word& w) {
    if (w.p() != f.germ_vars() || f.germ_vars() != g.germ_vars())
        throw arity_error("leibniz_expand arity mismatch");
    const Exponents& u = w.alpha();
    Polynomial out(f.germ_vars(), f.param_vars());
    Exponents a(u.size(), 0);
    do {
        Rational c(1);
        for (std::size_t i = 0; i < u.size(); ++i)
            c *= Rational(binomial((unsigned long)u[i], (unsigned long)a[i]));
        Exponents b(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) b[i] = u[i] - a[i];
        Polynomial term = derive_by_exponents(f, a) * derive_by_exponents(g, b);
        term *= c;
        out += term;
    } while (next_below(a, u));
    return out;
}

std::optional<Exponents> series_order(const Polynomial& f) { return f.min_germ_exponent(); }
std::optional<Exponents> series_order(const TruncatedSeries& f) {
    return f.poly().min_germ_exponent();
}

TruncatedSeries compose_series(const Polynomial& f, const std::vector<TruncatedSeries>& phi,
                               int T) {
    const int n = f.germ_vars();
    if ((int)phi.size() != n) throw arity_error("composition arity mismatch");
    if (f.param_vars() != 0) throw arity_error("composition requires a parameter-free outer f");
    if (n == 0) throw arity_error("outer function needs at least one variable");
    for (const auto& s : phi)
        if (s.trunc() < T)
            throw precision_error("inner series truncated below the requested output order");
    const Polynomial& model = phi.front().poly();
    for (const auto& s : phi)
        if (s.germ_vars() != model.germ_vars() || s.poly().param_vars() != model.param_vars())
            throw arity_error("inner series live in different spaces");

    // Cached truncated powers per slot.
    std::vector<std::vector<TruncatedSeries>> pows(n);
    TruncatedSeries one(Polynomial::constant(model.germ_vars(), Rational(1), model.param_vars()),
                        T);
    for (int j = 0; j < n; ++j) pows[j].push_back(one);

    TruncatedSeries out(Polynomial(model.germ_vars(), model.param_vars()), T);
    for (const auto& [e, c] : f.terms()) {
        TruncatedSeries term = one;
        for (int j = 0; j < n; ++j) {
            while ((int)pows[j].size() <= e[j]) {
                TruncatedSeries base(phi[j].poly(), T);
                pows[j].push_back(pows[j].back() * base);
            }
            term = term * pows[j][e[j]];
        }
        out += c * term;
    }
    return out;
}

namespace {

// One formal term of the expansion of d_u(f o phi): a derivative multi-index
// for f and a multiset of (inner word, slot) first-order factors. The only
// differentiation primitive applied to it is the first-order chain rule plus
// the product rule.
struct CompoTerm {
    Exponents f_index;                                // over the n outer variables
    std::vector<std::pair<Exponents, int>> factors;   // sorted (word, slot) pairs

    bool operator<(const CompoTerm& o) const {
        if (f_index != o.f_index) return f_index < o.f_index;
        return factors < o.factors;
    }
};

using CompoExpansion = std::map<CompoTerm, Rational>;

CompoExpansion derive_expansion(const CompoExpansion& in, int letter, int n, int p) {
    CompoExpansion out;
    auto add = [&out](CompoTerm t, const Rational& c) {
        std::sort(t.factors.begin(), t.factors.end());
        auto [it, inserted] = out.try_emplace(std::move(t), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    };
    for (const auto& [term, c] : in) {
        // Chain rule through the outer function.
        for (int j = 0; j < n; ++j) {
            CompoTerm t = term;
            t.f_index[j] += 1;
            Exponents b(p, 0);
            b[letter] = 1;
            t.factors.emplace_back(std::move(b), j);
            add(std::move(t), c);
        }
        // Product rule across the existing first-order factors.
        for (std::size_t k = 0; k < term.factors.size(); ++k) {
            if (k > 0 && term.factors[k] == term.factors[k - 1]) continue;
            int mult = 0;
            for (const auto& f : term.factors)
                if (f == term.factors[k]) ++mult;
            CompoTerm t = term;
            t.factors[k].first[letter] += 1;
            add(std::move(t), c * mult);
        }
    }
    return out;
}

}  // namespace

TruncatedSeries derivative_of_composition(const Polynomial& f,
                                          const std::vector<TruncatedSeries>& phi,
                                          const Word& w) {
    const int n = f.germ_vars();
    if ((int)phi.size() != n || n == 0) throw arity_error("composition arity mismatch");
    const int p = phi.front().germ_vars();
    if (w.p() != p) throw arity_error("word alphabet does not match the inner germ space");
    int min_trunc = phi.front().trunc();
    for (const auto& s : phi) min_trunc = std::min(min_trunc, s.trunc());
    const int T_out = min_trunc - w.length();
    if (T_out < 0)
        throw precision_error("inner truncation cannot absorb a derivative of order " +
                              std::to_string(w.length()));

    CompoExpansion exp;
    exp.emplace(CompoTerm{Exponents(n, 0), {}}, Rational(1));
    for (int i = 0; i < p; ++i)
        for (int k = 0; k < w.alpha()[i]; ++k) exp = derive_expansion(exp, i, n, p);

    TruncatedSeries out(
        Polynomial(phi.front().germ_vars(), phi.front().poly().param_vars()), T_out);
    for (const auto& [term, c] : exp) {
        Polynomial fa = derive_by_exponents(f, term.f_index);
        TruncatedSeries t = compose_series(fa, phi, T_out);
        for (const auto& [b, j] : term.factors) {
            TruncatedSeries db = phi[j].derivative(Word(b));
            t = t * TruncatedSeries(db.poly(), std::min(db.trunc(), T_out));
        }
        out += c * t;
    }
    return out;
}

namespace {

void gen_decompositions(const Exponents& rest, const Exponents& bound,
                        std::vector<Exponents>& cur,
                        std::vector<std::vector<Exponents>>& out) {
    if (exponents_length(rest) == 0) {
        out.push_back(cur);
        return;
    }
    // Parts are taken weakly decreasing in plain lex order, so each multiset
    // partition shows up exactly once.
    Exponents s(rest.size(), 0);
    while (next_below(s, rest)) {
        if (s > bound) continue;
        Exponents nrest(rest.size());
        for (std::size_t i = 0; i < rest.size(); ++i) nrest[i] = rest[i] - s[i];
        cur.push_back(s);
        gen_decompositions(nrest, s, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::vector<int>>> unordered_decompositions(const Word& u) {
    std::vector<std::vector<Exponents>> raw;
    std::vector<Exponents> cur;
    Exponents top = u.alpha();
    gen_decompositions(u.alpha(), top, cur, raw);
    std::vector<std::vector<std::vector<int>>> out;
    for (auto& d : raw) {
        std::sort(d.begin(), d.end());
        out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Value at 0 of one decomposition's full assignment sum, for concrete
// polynomial data. Linear coefficient of the corresponding D constant.
Rational decomposition_value(const std::vector<Exponents>& parts, const Polynomial& f,
                             const std::vector<Polynomial>& phi,
                             const std::vector<Rational>& phi_at_zero) {
    const int n = f.germ_vars();
    const int k = (int)parts.size();
    Rational total(0);
    std::vector<int> idx(k, 0);
    for (;;) {
        Exponents a(n, 0);
        for (int j = 0; j < k; ++j) a[idx[j]] += 1;
        Rational v = derive_by_exponents(f, a).eval_all(phi_at_zero);
        for (int j = 0; j < k; ++j) {
            const Polynomial d = derive_by_exponents(phi[idx[j]], parts[j]);
            // All inner slots share one germ space; evaluate at 0.
            std::vector<Rational> zero(phi[idx[j]].germ_vars(), Rational(0));
            v *= d.eval_all(zero);
        }
        total += v;
        int j = 0;
        while (j < k && ++idx[j] == n) idx[j++] = 0;
        if (j == k) break;
    }
    return total;
}

}  // namespace

CompositionConstants infer_composition_constants(int p, int n, const Word& u) {
    if (u.p() != p) throw arity_error("word alphabet mismatch");
    if (n < 1) throw arity_error("outer arity must be positive");
    auto decomps = unordered_decompositions(u);
    const std::size_t unknowns = decomps.size();

    RationalMatrix rows;
    std::vector<Rational> rhs;
    RationalSampler sampler(default_seed);
    const int max_trials = 40 * (int)unknowns + 40;
    for (int trial = 0; trial < max_trials; ++trial) {
        // Monomial test function and random polynomial map.
        Exponents gamma(n);
        for (int j = 0; j < n; ++j) gamma[j] = (int)sampler.draw_int(0, u.length());
        Polynomial f = Polynomial::monomial(n, gamma, Rational(1));
        std::vector<Polynomial> phi;
        std::vector<Rational> phi0;
        for (int j = 0; j < n; ++j) {
            Polynomial g(p);
            Exponents e(p, 0);
            do {
                if (exponents_length(e) <= u.length()) g.add_term(e, sampler.draw());
            } while (next_below(e, Exponents(p, u.length())));
            phi.push_back(g);
            phi0.push_back(g.eval_all(std::vector<Rational>(p, Rational(0))));
        }
        std::vector<Rational> row;
        for (const auto& parts : decomps) {
            std::vector<Exponents> pv(parts.begin(), parts.end());
            row.push_back(decomposition_value(pv, f, phi, phi0));
        }
        // Direct route: exact polynomial composition, then differentiate.
        std::vector<Polynomial> subs(phi.begin(), phi.end());
        Polynomial composed = f.substitute_germ(subs);
        Polynomial lhs = partial_derivative(composed, u);
        rhs.push_back(lhs.eval_all(std::vector<Rational>(p, Rational(0))));
        rows.push_back(std::move(row));

        if (rows.size() >= unknowns) {
            SolveResult res = solve_linear(rows, rhs);
            if (res.status == SolveStatus::unique) {
                CompositionConstants cc{p, n, u, {}};
                for (std::size_t i = 0; i < decomps.size(); ++i)
                    cc.table.emplace(decomps[i], res.solution[i]);
                return cc;
            }
            if (res.status == SolveStatus::inconsistent)
                throw refutation_error(
                    "composition expansion has no constant solution; this contradicts the "
                    "composition formula");
        }
    }
    throw error("composition-constant system stayed underdetermined at the requested size");
}

TruncatedSeries apply_composition_constants(const CompositionConstants& cc, const Polynomial& f,
                                            const std::vector<TruncatedSeries>& phi) {
    const int n = f.germ_vars();
    if (n != cc.n || (int)phi.size() != n) throw arity_error("arity mismatch");
    int min_trunc = phi.front().trunc();
    for (const auto& s : phi) min_trunc = std::min(min_trunc, s.trunc());
    const int T_out = min_trunc - cc.u.length();
    if (T_out < 0) throw precision_error("inner truncation too small");
    TruncatedSeries out(Polynomial(phi.front().germ_vars(), phi.front().poly().param_vars()),
                        T_out);
    for (const auto& [parts, d] : cc.table) {
        if (d == 0) continue;
        const int k = (int)parts.size();
        std::vector<int> idx(k, 0);
        for (;;) {
            Exponents a(n, 0);
            for (int j = 0; j < k; ++j) a[idx[j]] += 1;
            TruncatedSeries t = compose_series(derive_by_exponents(f, a), phi, T_out);
            for (int j = 0; j < k; ++j) {
                TruncatedSeries db = phi[idx[j]].derivative(Word(parts[j]));
                t = t * TruncatedSeries(db.poly(), std::min(db.trunc(), T_out));
            }
            out += d * t;
            int j = 0;
            while (j < k && ++idx[j] == n) idx[j++] = 0;
            if (j == k) break;
        }
    }
    return out;
}

}  // namespace gwron
