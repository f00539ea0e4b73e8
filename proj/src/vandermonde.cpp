#include "geowron/vandermonde.hpp"

#include <algorithm>

#include "geowron/determinant.hpp"
#include "geowron/wronskian.hpp"

namespace gwron {

ColumnTuple ColumnTuple::symbolic(int p, int count, int extra_params) {
    ColumnTuple t;
    t.p = p;
    const int nparams = p * count + extra_params;
    for (int l = 0; l < count; ++l) {
        std::vector<Polynomial> col;
        for (int k = 0; k < p; ++k) col.push_back(Polynomial::variable(0, l * p + k, nparams));
        t.cols.push_back(std::move(col));
    }
    return t;
}

ColumnTuple ColumnTuple::concrete(int p, const std::vector<std::vector<Rational>>& values) {
    ColumnTuple t;
    t.p = p;
    for (const auto& v : values) {
        if ((int)v.size() != p) throw arity_error("column arity mismatch");
        std::vector<Polynomial> col;
        for (const Rational& x : v) col.push_back(Polynomial::constant(0, x));
        t.cols.push_back(std::move(col));
    }
    return t;
}

std::vector<Polynomial> row_X(const Word& u, const ColumnTuple& cols) {
    if (u.p() != cols.p) throw arity_error("word alphabet does not match the column arity");
    std::vector<Polynomial> row;
    row.reserve(cols.cols.size());
    for (const auto& col : cols.cols) {
        Polynomial e = Polynomial::constant(0, Rational(1), cols.param_vars());
        for (int k = 0; k < cols.p; ++k)
            if (u.alpha()[k] > 0) e = e * col[k].pow((unsigned)u.alpha()[k]);
        row.push_back(std::move(e));
    }
    return row;
}

namespace {

Polynomial column_det(const Matrix<Polynomial>& m, int params) {
    Polynomial zero(0, params);
    Polynomial one = Polynomial::constant(0, Rational(1), params);
    return determinant(m, zero, one,
                       [](const Polynomial& a, const Polynomial& b) { return exact_divide(a, b); });
}

}  // namespace

Polynomial eval_V(const WordSet& U, const ColumnTuple& cols) {
    if (cols.count() != U.size() + 1)
        throw arity_error("need " + std::to_string(U.size() + 1) + " columns, got " +
                          std::to_string(cols.count()));
    Matrix<Polynomial> m;
    std::vector<Polynomial> ones(cols.count(),
                                 Polynomial::constant(0, Rational(1), cols.param_vars()));
    m.push_back(std::move(ones));
    for (const Word& u : U.words()) m.push_back(row_X(u, cols));
    return column_det(m, cols.param_vars());
}

Polynomial eval_V_tilde(const WordSet& U, const ColumnTuple& cols) {
    if (cols.count() != U.size())
        throw arity_error("need " + std::to_string(U.size()) + " columns, got " +
                          std::to_string(cols.count()));
    Matrix<Polynomial> m;
    for (const Word& u : U.words()) m.push_back(row_X(u, cols));
    return column_det(m, cols.param_vars());
}

bool translation_invariance_check(const WordSet& U) {
    const int p = U.p();
    const int m = U.size();
    ColumnTuple base = ColumnTuple::symbolic(p, m + 1, p);
    ColumnTuple shifted = base;
    const int nparams = base.param_vars();
    for (auto& col : shifted.cols)
        for (int k = 0; k < p; ++k)
            col[k] += Polynomial::variable(0, (m + 1) * p + k, nparams);
    return eval_V(U, base) == eval_V(U, shifted);
}

bool key_identity_check(const WordSet& U, const std::vector<Exponents>& alphas) {
    const int p = U.p();
    const int m = U.size();
    if ((int)alphas.size() != m + 1) throw arity_error("need m+1 exponent tuples");
    for (const auto& a : alphas)
        if ((int)a.size() != p) throw arity_error("exponent arity mismatch");

    bool shift_needed = false;
    for (const Word& u : U.words())
        for (const auto& a : alphas)
            for (int i = 0; i < p; ++i)
                if (a[i] < u.alpha()[i]) shift_needed = true;
    Exponents shift(p, 0);
    if (shift_needed)
        for (const Word& u : U.words())
            for (int i = 0; i < p; ++i) shift[i] = std::max(shift[i], u.alpha()[i]);

    std::vector<Polynomial> monomials;
    for (const auto& a : alphas) {
        Exponents e(p);
        for (int i = 0; i < p; ++i) e[i] = a[i] + shift[i];
        monomials.push_back(Polynomial::monomial(p, e, Rational(1)));
    }
    Polynomial w = eval_wronskian(U, monomials);
    Rational lhs = w.eval_all(std::vector<Rational>(p, Rational(1)));

    std::vector<std::vector<Rational>> values;
    for (const auto& a : alphas) {
        std::vector<Rational> col;
        for (int i = 0; i < p; ++i) col.emplace_back((long)a[i]);
        values.push_back(std::move(col));
    }
    Rational rhs = eval_V(U, ColumnTuple::concrete(p, values)).constant_value();
    return lhs == rhs;
}

namespace {

std::string pattern_equal(int i, int j) {
    return "C" + std::to_string(i) + "=C" + std::to_string(j);
}

void run_converse(const std::vector<WordSet>& sets, int p, int count,
                  VandermondeVariant variant, CertifyReport& report) {
    auto check_pattern = [&](const ColumnTuple& cols, const std::string& label) {
        bool all = true;
        for (const WordSet& U : sets) {
            Polynomial v = variant == VandermondeVariant::plain ? eval_V(U, cols)
                                                                : eval_V_tilde(U, cols);
            if (!v.is_zero()) {
                all = false;
                break;
            }
        }
        report.converse.push_back({label, all});
        if (!all) report.converse_ok = false;
    };

    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            // Alias column j onto column i's indeterminates.
            ColumnTuple cols = ColumnTuple::symbolic(p, count);
            cols.cols[j] = cols.cols[i];
            check_pattern(cols, pattern_equal(i, j));
        }
    }
    if (variant == VandermondeVariant::homogeneous) {
        for (int i = 0; i < count; ++i) {
            ColumnTuple cols = ColumnTuple::symbolic(p, count);
            for (int k = 0; k < p; ++k) cols.cols[i][k] = Polynomial(0, cols.param_vars());
            check_pattern(cols, "C" + std::to_string(i) + "=0");
        }
    }
}

void run_forward(const std::vector<WordSet>& sets, int p, int count, VandermondeVariant variant,
                 const CertifyOptions& opts, CertifyReport& report) {
    RationalSampler sampler(opts.seed);
    // Rejection sampling over an integer grid of size 2(m+1)+1 per entry.
    const long span = count;
    for (int s = 0; s < opts.samples; ++s) {
        std::vector<std::vector<Rational>> values;
        for (;;) {
            values.clear();
            for (int l = 0; l < count; ++l) {
                std::vector<Rational> col;
                for (int k = 0; k < p; ++k) col.emplace_back(sampler.draw_int(-span, span));
                values.push_back(std::move(col));
            }
            bool ok = true;
            for (int i = 0; i < count && ok; ++i) {
                if (variant == VandermondeVariant::homogeneous &&
                    std::all_of(values[i].begin(), values[i].end(),
                                [](const Rational& x) { return x == 0; }))
                    ok = false;
                for (int j = i + 1; j < count && ok; ++j)
                    if (values[i] == values[j]) ok = false;
            }
            if (ok) break;
        }
        ColumnTuple cols = ColumnTuple::concrete(p, values);
        std::string witness;
        for (const WordSet& U : sets) {
            Polynomial v = variant == VandermondeVariant::plain ? eval_V(U, cols)
                                                                : eval_V_tilde(U, cols);
            if (!v.is_zero()) {
                witness = U.str();
                break;
            }
        }
        if (witness.empty()) report.forward_failures += 1;
        report.forward.push_back({std::move(values), std::move(witness)});
    }
}

}  // namespace

CertifyReport zero_set_certify(int p, int m, VandermondeVariant variant,
                               CertifyDirection direction, const CertifyOptions& opts) {
    if (p < 1 || m < 1) throw arity_error("p and m must be positive");
    CertifyReport report;
    report.p = p;
    report.m = m;
    report.variant = variant;
    report.seed = opts.seed;
    std::vector<WordSet> sets = enumerate_full_sets(p, m, opts.limit);
    report.sets_checked = (int)sets.size();
    const int count = variant == VandermondeVariant::plain ? m + 1 : m;

    if (direction != CertifyDirection::forward) run_converse(sets, p, count, variant, report);
    if (direction != CertifyDirection::converse) run_forward(sets, p, count, variant, opts, report);
    return report;
}

}  // namespace gwron
