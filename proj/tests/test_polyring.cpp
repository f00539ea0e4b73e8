#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "geowron/calculus.hpp"
#include "geowron/polynomial.hpp"

using namespace gwron;

namespace {

Polynomial random_poly(std::mt19937& rng, int p, int max_deg, int max_terms = 6) {
    Polynomial f(p);
    int nterms = 1 + (int)(rng() % max_terms);
    for (int t = 0; t < nterms; ++t) {
        Exponents e(p);
        int budget = (int)(rng() % (max_deg + 1));
        for (int i = 0; i < p && budget > 0; ++i) {
            e[i] = (int)(rng() % (budget + 1));
            budget -= e[i];
        }
        long num = (long)(rng() % 19) - 9;
        long den = 1 + (long)(rng() % 3);
        Rational c(num, den);
        c.canonicalize();
        f.add_term(e, c);
    }
    return f;
}

Word random_word(std::mt19937& rng, int p, int max_len) {
    std::vector<int> a(p, 0);
    int len = 1 + (int)(rng() % max_len);
    for (int i = 0; i < len; ++i) a[rng() % p] += 1;
    return Word(std::move(a));
}

}  // namespace

TEST_CASE("parser basics") {
    Polynomial f = parse_polynomial("z1^2 - 3/2*z2", 2);
    CHECK(f.germ_coeff({2, 0}) == 1);
    CHECK(f.germ_coeff({0, 1}) == Rational(-3, 2));
    CHECK(f.terms().size() == 2);

    Polynomial g = parse_polynomial("(z1+z2)^2", 2);
    CHECK(g.germ_coeff({2, 0}) == 1);
    CHECK(g.germ_coeff({1, 1}) == 2);
    CHECK(g.germ_coeff({0, 2}) == 1);

    CHECK(parse_polynomial("0", 2).is_zero());
    CHECK(parse_polynomial("  z1 * z1  ", 1) == parse_polynomial("z1^2", 1));
    CHECK(parse_polynomial("-z1^2", 1).germ_coeff({2}) == -1);
    CHECK(parse_polynomial("2^3^2", 1).constant_value() == 512);

    CHECK_THROWS_AS(parse_polynomial("z3", 2), parse_error);
    CHECK_THROWS_AS(parse_polynomial("1/0", 2), parse_error);
    CHECK_THROWS_AS(parse_polynomial("z1 +", 2), parse_error);
    CHECK_THROWS_AS(parse_polynomial("(z1", 2), parse_error);
    CHECK_THROWS_AS(parse_polynomial("z1/z2", 2), parse_error);
}

TEST_CASE("printer canonical form and round trip") {
    CHECK(parse_polynomial("z1^2 - 3/2*z2", 2).str() == "z1^2 - 3/2*z2");
    CHECK(parse_polynomial("0", 1).str() == "0");
    CHECK(parse_polynomial("-1 + z1", 1).str() == "z1 - 1");
    CHECK(parse_polynomial("z2*z1", 2).str() == "z1*z2");

    std::mt19937 rng(3);
    for (int t = 0; t < 200; ++t) {
        int p = 1 + (int)(rng() % 3);
        Polynomial f = random_poly(rng, p, 4);
        CHECK(parse_polynomial(f.str(), p) == f);
    }
}

TEST_CASE("partial derivatives") {
    Polynomial z1z2 = parse_polynomial("z1*z2", 2);
    CHECK(partial_derivative(z1z2, Word({1, 1})) == parse_polynomial("1", 2));
    CHECK(partial_derivative(parse_polynomial("z1^3", 1), Word({2})) ==
          parse_polynomial("6*z1", 1));
    CHECK(partial_derivative(parse_polynomial("z1^2", 2), Word({0, 1})).is_zero());

    // Mixed partials commute.
    std::mt19937 rng(5);
    for (int t = 0; t < 100; ++t) {
        int p = 1 + (int)(rng() % 3);
        Polynomial f = random_poly(rng, p, 5);
        Word u = random_word(rng, p, 3);
        Word v = random_word(rng, p, 3);
        CHECK(partial_derivative(partial_derivative(f, u), v) ==
              partial_derivative(f, u.concat(v)));
    }
}

TEST_CASE("leibniz expansion equals direct differentiation") {
    // One-variable base case: f''g + 2f'g' + fg''.
    Polynomial f = parse_polynomial("z1^3", 1), g = parse_polynomial("z1^2 + 1", 1);
    Word u11({2});
    Polynomial expanded = leibniz_expand(f, g, u11);
    CHECK(expanded == partial_derivative(f * g, u11));
    Polynomial by_hand = partial_derivative(f, u11) * g +
                         Rational(2) * (partial_derivative(f, Word({1})) *
                                        partial_derivative(g, Word({1}))) +
                         f * partial_derivative(g, u11);
    CHECK(expanded == by_hand);

    // Four decompositions, all constants 1.
    Polynomial a = parse_polynomial("z1^2*z2", 2), b = parse_polynomial("z2^2", 2);
    Word u12({1, 1});
    CHECK(leibniz_expand(a, b, u12) == partial_derivative(a * b, u12));

    Polynomial one = parse_polynomial("1", 2);
    CHECK(leibniz_expand(one, b, u12) == partial_derivative(b, u12));

    std::mt19937 rng(17);
    for (int t = 0; t < 200; ++t) {
        int p = 1 + (int)(rng() % 3);
        Polynomial x = random_poly(rng, p, 4);
        Polynomial y = random_poly(rng, p, 4);
        Word u = random_word(rng, p, 4);
        CHECK(leibniz_expand(x, y, u) == partial_derivative(x * y, u));
    }
}

TEST_CASE("series order") {
    Polynomial f = parse_polynomial("z1^2 + z2", 2);
    CHECK(*series_order(f) == Exponents{0, 1});
    CHECK(*series_order(parse_polynomial("5", 2)) == Exponents{0, 0});
    CHECK_FALSE(series_order(parse_polynomial("0", 2)).has_value());

    // Orders add under multiplication.
    std::mt19937 rng(23);
    for (int t = 0; t < 100; ++t) {
        int p = 1 + (int)(rng() % 3);
        Polynomial a = random_poly(rng, p, 3);
        Polynomial b = random_poly(rng, p, 3);
        if (a.is_zero() || b.is_zero()) continue;
        Exponents sum(p);
        for (int i = 0; i < p; ++i) sum[i] = (*series_order(a))[i] + (*series_order(b))[i];
        CHECK(*series_order(a * b) == sum);
    }
}

TEST_CASE("series composition") {
    // f(t) = t^2 with t = z1+z2, truncated at 2.
    Polynomial f = parse_polynomial("z1^2", 1);
    TruncatedSeries phi(parse_polynomial("z1+z2", 2), 2);
    TruncatedSeries r = compose_series(f, {phi}, 2);
    CHECK(r.poly() == parse_polynomial("(z1+z2)^2", 2));

    // Identity tuple truncates f.
    Polynomial g = parse_polynomial("z1^3 + z1*z2", 2);
    std::vector<TruncatedSeries> id;
    id.emplace_back(parse_polynomial("z1", 2), 2);
    id.emplace_back(parse_polynomial("z2", 2), 2);
    CHECK(compose_series(g, id, 2).poly() == g.truncate_germ(2));

    Polynomial c = parse_polynomial("7", 1);
    CHECK(compose_series(c, {phi}, 2).poly() == parse_polynomial("7", 2));
}

TEST_CASE("derivative of composition via the chain rule") {
    // d1(f o phi) = sum_j (d_j f o phi) d1 phi_j.
    std::mt19937 rng(29);
    for (int t = 0; t < 40; ++t) {
        int n = 1 + (int)(rng() % 2);
        int p = 1 + (int)(rng() % 2);
        Polynomial f = random_poly(rng, n, 3);
        std::vector<TruncatedSeries> phi;
        for (int j = 0; j < n; ++j) phi.emplace_back(random_poly(rng, p, 3), 5);
        std::vector<int> first(p, 0);
        first[0] = 1;
        Word u(first);
        TruncatedSeries lhs = derivative_of_composition(f, phi, u);
        TruncatedSeries rhs(Polynomial(p), 4);
        for (int j = 0; j < n; ++j) {
            Polynomial dj = f.derivative(j);
            rhs += compose_series(dj, phi, 4) * phi[j].derivative(u);
        }
        CHECK(lhs.poly() == rhs.poly());
    }

    // f = t, phi = z1^2, u = 11: second derivative is the constant 2.
    Polynomial f1 = parse_polynomial("z1", 1);
    TruncatedSeries sq(parse_polynomial("z1^2", 1), 4);
    TruncatedSeries r = derivative_of_composition(f1, {sq}, Word({2}));
    CHECK(r.poly() == parse_polynomial("2", 1));

    // A variable absent from the dependence gives zero.
    TruncatedSeries onlyz1(parse_polynomial("z1", 2), 4);
    CHECK(derivative_of_composition(f1, {onlyz1}, Word({0, 2})).is_zero());

    CHECK_THROWS_AS(derivative_of_composition(f1, {TruncatedSeries(parse_polynomial("z1", 1), 1)},
                                              Word({2})),
                    precision_error);
}

TEST_CASE("two-path equality on random cases") {
    std::mt19937 rng(31);
    for (int t = 0; t < 100; ++t) {
        int n = 1 + (int)(rng() % 2);
        int p = 1 + (int)(rng() % 2);
        Polynomial f = random_poly(rng, n, 3);
        Word u = random_word(rng, p, 3);
        int T = 2;
        std::vector<TruncatedSeries> phi;
        for (int j = 0; j < n; ++j) phi.emplace_back(random_poly(rng, p, 3), T + u.length());
        TruncatedSeries via_chain = derivative_of_composition(f, phi, u);
        TruncatedSeries composed = compose_series(f, phi, T + u.length());
        TruncatedSeries direct = composed.derivative(u);
        CHECK(via_chain.poly() == direct.poly());
    }
}

TEST_CASE("composition constants") {
    // Faa di Bruno in one variable: both constants are 1.
    CompositionConstants cc = infer_composition_constants(1, 1, Word({2}));
    REQUIRE(cc.table.size() == 2);
    for (const auto& [parts, d] : cc.table) CHECK(d == 1);

    // Words of length 1 give the single constant 1.
    CompositionConstants c1 = infer_composition_constants(2, 2, Word({1, 0}));
    REQUIRE(c1.table.size() == 1);
    CHECK(c1.table.begin()->second == 1);

    // Third derivative in one variable: the middle decomposition carries 3.
    CompositionConstants c3 = infer_composition_constants(1, 1, Word({3}));
    std::vector<std::vector<int>> mixed = {{1}, {2}};
    CHECK(c3.table.at(mixed) == 3);

    // The inferred tables reproduce the chain-rule route on fresh inputs.
    std::mt19937 rng(37);
    for (int t = 0; t < 30; ++t) {
        int p = 1 + (int)(rng() % 2);
        int n = 1 + (int)(rng() % 2);
        Word u = random_word(rng, p, 3);
        CompositionConstants table = infer_composition_constants(p, n, u);
        Polynomial f = random_poly(rng, n, 3);
        std::vector<TruncatedSeries> phi;
        for (int j = 0; j < n; ++j) phi.emplace_back(random_poly(rng, p, 3), u.length() + 2);
        TruncatedSeries lhs = apply_composition_constants(table, f, phi);
        TruncatedSeries rhs = derivative_of_composition(f, phi, u);
        CHECK(lhs.poly() == rhs.poly());
    }
}

TEST_CASE("truncation consumes precision loudly") {
    TruncatedSeries s(parse_polynomial("z1^3", 1), 3);
    CHECK_THROWS_AS(s.derivative(Word({4})), precision_error);
    TruncatedSeries d = s.derivative(Word({2}));
    CHECK(d.trunc() == 1);
    CHECK(d.poly() == parse_polynomial("6*z1", 1));
}
