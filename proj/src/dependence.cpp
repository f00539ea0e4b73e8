#include "geowron/dependence.hpp"

#include <algorithm>
#include <map>

#include "geowron/vandermonde.hpp"
#include "geowron/wronskian.hpp"

namespace gwron {

int rank_oracle(const std::vector<Polynomial>& fs) {
    if (fs.empty()) return 0;
    std::map<Exponents, std::size_t> column_of;
    for (const auto& f : fs) {
        if (f.param_vars() != 0) throw arity_error("rank oracle requires parameter-free inputs");
        for (const auto& [e, c] : f.terms()) column_of.try_emplace(e, column_of.size());
    }
    RationalMatrix m(fs.size(), std::vector<Rational>(std::max<std::size_t>(column_of.size(), 1)));
    for (std::size_t r = 0; r < fs.size(); ++r)
        for (const auto& [e, c] : fs[r].terms()) m[r][column_of[e]] = c;
    return matrix_rank(std::move(m));
}

std::string ReductionStep::str() const {
    if (kind == Kind::swap) return "swap t" + std::to_string(i) + " t" + std::to_string(j);
    return "t" + std::to_string(j) + " -= " + to_string(lambda) + " * t" + std::to_string(i);
}

namespace {

// Orders compare in the declared lex convention; the zero polynomial (never
// reachable for an independent family) sorts last.
bool order_less(const Polynomial& a, const Polynomial& b) {
    auto oa = a.min_germ_exponent();
    auto ob = b.min_germ_exponent();
    if (!ob) return (bool)oa;
    if (!oa) return false;
    return *oa < *ob;
}

}  // namespace

ReductionResult distinct_order_reduction(const std::vector<Polynomial>& fs) {
    const int n = (int)fs.size();
    if (n == 0) throw arity_error("empty family");
    if (rank_oracle(fs) != n) throw arity_error("family is linearly dependent");

    ReductionResult res;
    res.ts = fs;
    res.A.assign(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) res.A[i][i] = 1;

    auto swap_cols = [&](int i, int j) {
        std::swap(res.ts[i], res.ts[j]);
        for (int r = 0; r < n; ++r) std::swap(res.A[r][i], res.A[r][j]);
        res.steps.push_back({ReductionStep::Kind::swap, i, j, Rational(0)});
    };

    for (;;) {
        // Selection sort by order, recording each swap.
        for (int i = 0; i < n; ++i) {
            int best = i;
            for (int j = i + 1; j < n; ++j)
                if (order_less(res.ts[j], res.ts[best])) best = j;
            if (best != i) swap_cols(i, best);
        }
        int clash = -1;
        for (int i = 0; i + 1 < n; ++i)
            if (res.ts[i].min_germ_exponent() == res.ts[i + 1].min_germ_exponent()) {
                clash = i;
                break;
            }
        if (clash < 0) break;
        const Exponents ord = *res.ts[clash].min_germ_exponent();
        // The unique scalar that cancels the leading term.
        Rational lambda = res.ts[clash + 1].germ_coeff(ord) / res.ts[clash].germ_coeff(ord);
        res.ts[clash + 1] -= lambda * res.ts[clash];
        for (int r = 0; r < n; ++r) res.A[r][clash + 1] -= lambda * res.A[r][clash];
        res.steps.push_back({ReductionStep::Kind::transvection, clash, clash + 1, lambda});
    }
    return res;
}

std::optional<WordSet> independence_witness(const std::vector<Polynomial>& fs,
                                            const EnumLimit& limit) {
    if (fs.empty()) throw arity_error("empty family");
    const int p = fs.front().germ_vars();
    for (const auto& f : fs)
        if (f.germ_vars() != p || f.param_vars() != 0)
            throw arity_error("family must share one parameter-free germ space");
    const int m = (int)fs.size() - 1;
    if (m == 0) return std::nullopt;  // single function: no set needed
    for (const WordSet& U : enumerate_full_sets(p, m, limit))
        if (!eval_wronskian(U, fs).is_zero()) return U;
    return std::nullopt;
}

bool least_order_check(const WordSet& U, const std::vector<Exponents>& alphas,
                       const std::vector<Polynomial>& tails) {
    const int p = U.p();
    const int m = U.size();
    if ((int)alphas.size() != m + 1 || (int)tails.size() != m + 1)
        throw arity_error("need m+1 exponents and tails");

    std::vector<std::vector<Rational>> cols;
    for (const auto& a : alphas) {
        std::vector<Rational> col;
        for (int x : a) col.emplace_back((long)x);
        cols.push_back(std::move(col));
    }
    if (eval_V(U, ColumnTuple::concrete(p, cols)).constant_value() == 0)
        throw inapplicable_error("the geometric Vandermonde vanishes at these exponents");

    std::vector<Polynomial> fs;
    for (int i = 0; i <= m; ++i) {
        if (tails[i].germ_vars() != p || tails[i].param_vars() != 0)
            throw arity_error("tail lives in the wrong space");
        for (const auto& [e, c] : tails[i].terms())
            if (!(alphas[i] < e))
                throw arity_error("tail term not strictly above the base exponent");
        fs.push_back(Polynomial::monomial(p, alphas[i], Rational(1)) + tails[i]);
    }
    Polynomial w = eval_wronskian(U, fs);
    auto ord = series_order(w);
    if (!ord) return false;

    Exponents expected(p, 0);
    for (const auto& a : alphas)
        for (int i = 0; i < p; ++i) expected[i] += a[i];
    for (int i = 0; i < p; ++i) expected[i] -= U.beta()[i];
    return *ord == expected;
}

}  // namespace gwron
