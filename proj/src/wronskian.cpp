#include "geowron/wronskian.hpp"

#include <algorithm>

#include "geowron/linalg.hpp"

namespace gwron {

WronskianCombination::WronskianCombination(std::vector<Term> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw arity_error("the zero combination is not representable");
    m_ = terms_.front().set.size();
    for (const auto& t : terms_) {
        if (t.set.size() != m_) throw arity_error("mixed sizes in the combination");
        if (t.coeff == 0) throw arity_error("zero coefficient in the combination");
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return canonical_set_less(a.set, b.set); });
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (terms_[i].set == terms_[i - 1].set)
            throw arity_error("duplicate set " + terms_[i].set.str() + " in the combination");
}

WronskianCombination WronskianCombination::pure(WordSet set) {
    std::vector<Term> t;
    t.push_back({Rational(1), std::move(set)});
    return WronskianCombination(std::move(t));
}

int WronskianCombination::order() const {
    int k = 0;
    for (const auto& t : terms_) k = std::max(k, t.set.order());
    return k;
}

CharSequence WronskianCombination::stratum() const {
    const CharSequence* best = &terms_.front().set.charseq();
    for (const auto& t : terms_)
        if (compare_char_sequences(t.set.charseq(), *best) > 0) best = &t.set.charseq();
    return *best;
}

namespace {

template <class F>
void check_function_count(const WordSet& U, const std::vector<F>& fs) {
    if ((int)fs.size() != U.size() + 1)
        throw arity_error("need " + std::to_string(U.size() + 1) + " functions, got " +
                          std::to_string(fs.size()));
}

}  // namespace

Polynomial eval_wronskian(const WordSet& U, const std::vector<Polynomial>& fs) {
    check_function_count(U, fs);
    const Polynomial& model = fs.front();
    if (model.germ_vars() != U.p()) throw arity_error("germ dimension does not match the set");
    auto m = wronskian_matrix(U, fs);
    Polynomial zero(model.germ_vars(), model.param_vars());
    Polynomial one = Polynomial::constant(model.germ_vars(), Rational(1), model.param_vars());
    return determinant(m, zero, one,
                       [](const Polynomial& a, const Polynomial& b) { return exact_divide(a, b); });
}

TruncatedSeries eval_wronskian(const WordSet& U, const std::vector<TruncatedSeries>& fs) {
    check_function_count(U, fs);
    for (const auto& f : fs)
        if (f.trunc() < U.order())
            throw precision_error("truncation insufficient for a set of order " +
                                  std::to_string(U.order()));
    auto m = wronskian_matrix(U, fs);
    const Polynomial& mp = fs.front().poly();
    int t = fs.front().trunc();
    for (const auto& f : fs) t = std::min(t, f.trunc());
    TruncatedSeries zero(Polynomial(mp.germ_vars(), mp.param_vars()), t);
    TruncatedSeries one(Polynomial::constant(mp.germ_vars(), Rational(1), mp.param_vars()), t);
    return det_laplace(m, zero, one);
}

DiffPoly eval_wronskian(const WordSet& U, const std::vector<DiffPoly>& fs) {
    check_function_count(U, fs);
    const DiffPoly& model = fs.front();
    if (model.p() != U.p()) throw arity_error("germ dimension does not match the set");
    auto m = wronskian_matrix(U, fs);
    DiffPoly zero(model.p(), model.max_order());
    DiffPoly one = DiffPoly::constant(model.p(), model.max_order(), Rational(1));
    return det_laplace(m, zero, one);
}

namespace {

// Leibniz expansion of d_u(g*f) on generic jets: sum over a <= alpha(u) of
// prod_i C(alpha_i(u), a_i) * u_{g,a} * u_{f,alpha(u)-a}.
DiffPoly leibniz_jet_entry(int p, int k, int g_index, int f_index, const Exponents& u) {
    DiffPoly out(p, k);
    Exponents a(u.size(), 0);
    for (;;) {
        Rational c(1);
        for (std::size_t i = 0; i < u.size(); ++i)
            c *= Rational(binomial((unsigned long)u[i], (unsigned long)a[i]));
        Exponents b(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) b[i] = u[i] - a[i];
        out += c * (DiffPoly::jet_var(p, k, g_index, a) * DiffPoly::jet_var(p, k, f_index, b));
        std::size_t i = 0;
        for (; i < a.size(); ++i) {
            if (a[i] < u[i]) {
                ++a[i];
                std::fill(a.begin(), a.begin() + i, 0);
                break;
            }
            a[i] = 0;
        }
        if (i == a.size()) break;
    }
    return out;
}

// The defining identity compared in the jet ring. The jet coordinates of a
// degree-k polynomial at a point are its coefficients up to the bijective
// factorial rescaling, and both sides of the identity at any point x depend
// on the germs only through their k-jets at x; so equality of these two
// differential polynomials is equivalent to the identity holding for all
// germs, and in particular to the symbolic-coefficient polynomial identity
// at generic degree-k inputs.
struct GeoSymbolic {
    DiffPoly lhs;  // W(g f_0, ..., g f_m) on generic jets
    DiffPoly rhs;  // g^{m+1} W(f_0, ..., f_m) on generic jets
    int k;
};

GeoSymbolic geometric_identity_sides(const WronskianCombination& W) {
    const int p = W.terms().front().set.p();
    const int m = W.size();
    const int k = std::max(W.order(), 1);
    const int g_index = m + 1;
    DiffPoly zero(p, k);
    DiffPoly one = DiffPoly::constant(p, k, Rational(1));
    DiffPoly lhs = zero, rhs = zero;
    const Exponents zero_exp(p, 0);
    for (const auto& term : W.terms()) {
        Matrix<DiffPoly> ml, mr;
        std::vector<DiffPoly> top_l, top_r;
        for (int c = 0; c <= m; ++c) {
            top_l.push_back(DiffPoly::jet_var(p, k, g_index, zero_exp) *
                            DiffPoly::jet_var(p, k, c, zero_exp));
            top_r.push_back(DiffPoly::jet_var(p, k, c, zero_exp));
        }
        ml.push_back(std::move(top_l));
        mr.push_back(std::move(top_r));
        for (const Word& u : term.set.words()) {
            std::vector<DiffPoly> row_l, row_r;
            for (int c = 0; c <= m; ++c) {
                row_l.push_back(leibniz_jet_entry(p, k, g_index, c, u.alpha()));
                row_r.push_back(DiffPoly::jet_var(p, k, c, u.alpha()));
            }
            ml.push_back(std::move(row_l));
            mr.push_back(std::move(row_r));
        }
        lhs += term.coeff * det_laplace(ml, zero, one);
        rhs += term.coeff * det_laplace(mr, zero, one);
    }
    rhs = DiffPoly::jet_var(p, k, g_index, zero_exp).pow((unsigned)(m + 1)) * rhs;
    return {std::move(lhs), std::move(rhs), k};
}

// Polynomial with the sampled jet values as derivatives at 0.
Polynomial poly_from_jet_values(int p, int k,
                                const std::function<Rational(const Exponents&)>& value) {
    Polynomial out(p);
    Exponents e(p, 0);
    for (;;) {
        int len = 0;
        for (int x : e) len += x;
        if (len <= k) {
            Rational c = value(e);
            for (int x : e) c /= Rational(factorial((unsigned long)x));
            out.add_term(e, c);
        }
        std::size_t i = 0;
        for (; i < e.size(); ++i) {
            if (e[i] < k) {
                ++e[i];
                std::fill(e.begin(), e.begin() + i, 0);
                break;
            }
            e[i] = 0;
        }
        if (i == e.size()) break;
    }
    return out;
}

// Derivative values at 0 of a concrete polynomial, as a jet-variable
// assignment for one function index.
Rational poly_jet_value(const Polynomial& f, const Exponents& alpha) {
    Rational c = f.germ_coeff(alpha);
    for (int x : alpha) c *= factorial((unsigned long)x);
    return c;
}

GeoCertificate make_certificate(const WronskianCombination& W, const Polynomial& g,
                                const std::vector<Polynomial>& fs) {
    const int m = W.size();
    std::vector<Polynomial> gf;
    gf.reserve(fs.size());
    for (const auto& f : fs) gf.push_back(g * f);
    Polynomial lhs_poly = eval_wronskian(W, gf);
    Polynomial rhs_poly = eval_wronskian(W, fs);
    const std::vector<Rational> origin(g.germ_vars(), Rational(0));
    Rational lhs = lhs_poly.eval_all(origin);
    Rational rhs = pow_rational(g.eval_all(origin), m + 1) * rhs_poly.eval_all(origin);
    return {g, fs, lhs, rhs};
}

}  // namespace

GeoResult is_geometric(const WronskianCombination& W, GeoMode mode, const GeoOptions& opts) {
    const int p = W.terms().front().set.p();
    const int m = W.size();
    RationalSampler sampler(opts.seed);

    if (mode == GeoMode::exact) {
        GeoSymbolic sides = geometric_identity_sides(W);
        DiffPoly diff = sides.lhs - sides.rhs;
        if (diff.is_zero()) return {true, std::nullopt};
        // Refuted symbolically; extract a concrete counterexample.
        for (int attempt = 0; attempt < 64; ++attempt) {
            std::map<std::pair<int, Exponents>, Rational> vals;
            auto value = [&](const JetVar& v) -> Rational {
                auto key = std::make_pair(v.fn, v.alpha);
                auto it = vals.find(key);
                if (it == vals.end()) it = vals.emplace(key, sampler.draw()).first;
                return it->second;
            };
            if (diff.eval(value) == 0) continue;
            auto fn_values = [&](int fn) {
                return [&vals, fn, &value, p2 = p](const Exponents& alpha) {
                    return value(JetVar{fn, alpha});
                };
            };
            Polynomial g = poly_from_jet_values(p, sides.k, fn_values(m + 1));
            std::vector<Polynomial> fs;
            for (int c = 0; c <= m; ++c)
                fs.push_back(poly_from_jet_values(p, sides.k, fn_values(c)));
            GeoCertificate cert = make_certificate(W, g, fs);
            if (cert.lhs != cert.rhs) return {false, std::move(cert)};
        }
        throw error("symbolic refutation found but no concrete counterexample materialized");
    }

    // Randomized mode: evaluate both sides at 0 on random degree-k inputs.
    const int k = std::max(W.order(), 1);
    for (int trial = 0; trial < opts.trials; ++trial) {
        Polynomial g = poly_from_jet_values(p, k, [&](const Exponents&) { return sampler.draw(); });
        std::vector<Polynomial> fs;
        for (int c = 0; c <= m; ++c)
            fs.push_back(
                poly_from_jet_values(p, k, [&](const Exponents&) { return sampler.draw(); }));
        GeoCertificate cert = make_certificate(W, g, fs);
        if (cert.lhs != cert.rhs) return {false, std::move(cert)};
    }
    return {true, std::nullopt};
}

Rational act_biholomorphism(const WronskianCombination& W,
                            const std::vector<TruncatedSeries>& phi,
                            const std::vector<Polynomial>& fs, const std::vector<Rational>& x) {
    const int p = W.terms().front().set.p();
    const int k = std::max(W.order(), 1);
    if ((int)phi.size() != p || (int)x.size() != p) throw arity_error("germ dimension mismatch");
    if ((int)fs.size() != W.size() + 1) throw arity_error("function count mismatch");
    RationalMatrix jac(p, std::vector<Rational>(p));
    for (int i = 0; i < p; ++i) {
        if (phi[i].trunc() < k) throw precision_error("biholomorphism truncated below the order");
        Exponents zero_e(p, 0);
        if (phi[i].poly().germ_coeff(zero_e) != 0) throw arity_error("map does not fix 0");
        for (int j = 0; j < p; ++j) {
            Exponents e(p, 0);
            e[j] = 1;
            jac[i][j] = phi[i].poly().germ_coeff(e);
        }
    }
    if (matrix_determinant(jac) == 0) throw arity_error("linear part is singular");

    std::vector<TruncatedSeries> shifted;
    shifted.reserve(p);
    for (int i = 0; i < p; ++i)
        shifted.emplace_back(Polynomial::constant(p, x[i]) + phi[i].poly(), k);
    Rational total(0);
    for (const auto& term : W.terms()) {
        const int n = term.set.size() + 1;
        RationalMatrix m(n, std::vector<Rational>(n));
        for (int c = 0; c < n; ++c) {
            TruncatedSeries h = compose_series(fs[c], shifted, k);
            m[0][c] = h.derivative_value_at_zero(Exponents(p, 0));
            for (int r = 0; r < term.set.size(); ++r)
                m[r + 1][c] = h.derivative_value_at_zero(term.set.words()[r].alpha());
        }
        total += term.coeff * matrix_determinant(m);
    }
    return total;
}

bool det_power_law_check(int p, int n, const RationalMatrix& A,
                         const std::vector<Polynomial>& fs) {
    WordSet Un = canonical_full_set(p, n);
    if ((int)fs.size() != Un.size() + 1) throw arity_error("function count mismatch");
    if ((int)A.size() != p) throw arity_error("matrix dimension mismatch");
    Rational detA = matrix_determinant(A);
    if (detA == 0) throw arity_error("singular matrix");
    if (Un.weight() % p != 0) throw error("weight not divisible by the rank");
    const long exponent = Un.weight() / p;

    std::vector<Polynomial> rows;
    for (int i = 0; i < p; ++i) {
        Polynomial row(p);
        for (int j = 0; j < p; ++j) {
            Exponents e(p, 0);
            e[j] = 1;
            row.add_term(e, A[i][j]);
        }
        rows.push_back(std::move(row));
    }
    std::vector<Polynomial> composed;
    composed.reserve(fs.size());
    for (const auto& f : fs) composed.push_back(f.substitute_germ(rows));

    Polynomial lhs = eval_wronskian(Un, composed);
    Polynomial rhs = eval_wronskian(Un, fs).substitute_germ(rows);
    rhs *= pow_rational(detA, exponent);
    return lhs == rhs;
}

Polynomial wronskian_on_basis(int p, int n, const std::vector<Polynomial>& fs) {
    return eval_wronskian(canonical_full_set(p, n), fs);
}

}  // namespace gwron
