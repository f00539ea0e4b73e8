#include "geowron/fermat.hpp"

#include <algorithm>

#include "geowron/series.hpp"
#include "geowron/wronskian.hpp"

namespace gwron {

FermatConfig::FermatConfig(int N_, int p_, int delta_) : N(N_), p(p_), delta(delta_) {
    if (N < 2 || p < 1 || p > N - 1) throw arity_error("need 1 <= p <= N-1 and N >= 2");
    if (delta < 1) throw arity_error("degree must be positive");
}

std::pair<std::vector<WordSet>, std::vector<WordSet>> partition_fullsets(int N, int p) {
    if (p < 1 || p > N - 1) throw arity_error("need 1 <= p <= N-1");
    std::vector<WordSet> plus, minus;
    for (WordSet& U : enumerate_full_sets(p, N - 1)) {
        bool all_singletons = true;
        for (int i = 0; i < p && all_singletons; ++i) {
            Exponents e(p, 0);
            e[i] = 1;
            all_singletons = U.contains(Word(e));
        }
        (all_singletons ? plus : minus).push_back(std::move(U));
    }
    return {std::move(plus), std::move(minus)};
}

DiffPoly fermat_wronskian(const FermatConfig& cfg, const WordSet& U) {
    if (U.size() != cfg.N - 1) throw arity_error("set size must be N-1");
    if (U.p() != cfg.p) throw arity_error("alphabet mismatch");
    const int k = std::max(U.order(), 1);
    std::vector<DiffPoly> fs;
    for (DiffPoly& seed : make_generic_jet(cfg.p, k, cfg.N))
        fs.push_back(seed.pow((unsigned)cfg.delta));
    return eval_wronskian(U, fs);
}

ColumnFactorization factor_columns(const FermatConfig& cfg, const WordSet& U,
                                   const DiffPoly& W) {
    const int k = U.order();
    std::vector<int> exps(cfg.N, std::max(0, cfg.delta - k));
    auto cofactor = W.divide_by_fn_zero_powers(exps);
    if (!cofactor)
        throw refutation_error("column factorization by the undifferentiated powers failed for " +
                               U.str() + "; this contradicts the factorization identity");
    return {std::move(exps), std::move(*cofactor)};
}

bool restriction_identity_check(const FermatConfig& cfg, const WordSet& U) {
    if (U.size() != cfg.N - 1) throw arity_error("set size must be N-1");
    const int k = std::max(U.order(), 1);
    std::vector<DiffPoly> c = make_generic_jet(cfg.p, k, cfg.N);  // c_0 .. c_{N-1}
    std::vector<DiffPoly> lhs, rhs;
    DiffPoly sum = -c[0];
    for (int i = 1; i <= cfg.N - 1; ++i) {
        lhs.push_back(c[i]);
        rhs.push_back(c[i]);
        sum -= c[i];
    }
    lhs.push_back(std::move(sum));
    rhs.push_back(-c[0]);
    return eval_wronskian(U, lhs) == eval_wronskian(U, rhs);
}

bool fminus_vanishing_check(const FermatConfig& cfg, const WordSet& U) {
    if (U.size() != cfg.N - 1) throw arity_error("set size must be N-1");
    const int p = cfg.p;
    bool misses_letter = false;
    for (int i = 0; i < p; ++i) misses_letter |= U.beta()[i] == 0;
    if (!misses_letter) throw arity_error("set uses every letter; not in the minus class");

    const int k = std::max(U.order(), 1);
    std::vector<DiffPoly> fs;
    // Functions 0..p-1 model the coordinate germs, p..N-2 the generic tails.
    for (DiffPoly& seed : make_generic_jet(p, k, cfg.N - 1))
        fs.push_back(seed.pow((unsigned)cfg.delta));
    fs.push_back(DiffPoly::constant(p, k, Rational(-1)));

    DiffPoly w = eval_wronskian(U, fs);
    // Specialize the coordinate germs: first derivative along the own letter
    // is 1, all other derivatives vanish, the value stays a free symbol.
    DiffPoly specialized = w.specialize([p](const JetVar& v) -> std::optional<Rational> {
        if (v.fn >= p) return std::nullopt;
        if (v.alpha_length() == 0) return std::nullopt;
        if (v.alpha_length() == 1 && v.alpha[v.fn] == 1) return Rational(1);
        return Rational(0);
    });
    return specialized.is_zero();
}

bool fminus_vanishing_series_check(const FermatConfig& cfg, const WordSet& U, int trunc,
                                   unsigned long seed) {
    if (U.size() != cfg.N - 1) throw arity_error("set size must be N-1");
    if (trunc < U.order()) throw precision_error("truncation below the set order");
    const int p = cfg.p;
    RationalSampler sampler(seed);
    std::vector<TruncatedSeries> fs;
    for (int i = 0; i < p; ++i) {
        // Coordinate germ at a generic base point: (x_i + z_i)^delta.
        Polynomial shifted =
            Polynomial::variable(p, i) + Polynomial::constant(p, sampler.draw_nonzero());
        fs.emplace_back(shifted.pow((unsigned)cfg.delta), trunc);
    }
    for (int j = p; j < cfg.N - 1; ++j) {
        Polynomial g(p);
        Exponents e(p, 0);
        for (;;) {
            int len = 0;
            for (int x : e) len += x;
            if (len <= trunc) g.add_term(e, sampler.draw());
            std::size_t i = 0;
            for (; i < e.size(); ++i) {
                if (e[i] < trunc) {
                    ++e[i];
                    std::fill(e.begin(), e.begin() + i, 0);
                    break;
                }
                e[i] = 0;
            }
            if (i == e.size()) break;
        }
        fs.emplace_back(g.pow((unsigned)cfg.delta), trunc);
    }
    fs.emplace_back(Polynomial::constant(p, Rational(-1)), trunc);
    return eval_wronskian(U, fs).is_zero();
}

std::vector<DegreeThreshold> degree_report(int N) {
    if (N < 2) throw arity_error("need N >= 2");
    std::vector<DegreeThreshold> rows;
    for (int p = 1; p <= N - 1; ++p)
        rows.push_back({N, p, (long long)(N + 1) * (N - p)});
    return rows;
}

}  // namespace gwron
