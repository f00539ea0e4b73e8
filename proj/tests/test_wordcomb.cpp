#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "geowron/wordcomb.hpp"
#include "oracles.hpp"

using namespace gwron;

namespace {

Word W(std::vector<int> alpha) { return Word(std::move(alpha)); }

WordSet set_of(std::vector<std::vector<int>> alphas) {
    std::vector<Word> words;
    for (auto& a : alphas) words.emplace_back(std::move(a));
    return WordSet(std::move(words));
}

}  // namespace

TEST_CASE("word invariants") {
    CHECK_THROWS_AS(W({0, 0}), arity_error);
    CHECK_THROWS_AS(W({1, -1}), arity_error);
    CHECK(W({2, 1}).length() == 3);
    CHECK(W({2, 1}).letters_str() == "112");
    CHECK(Word::from_letters({1, 2, 1}, 2) == W({2, 1}));
    CHECK(W({1, 0}).subword_of(W({1, 1})));
    CHECK_FALSE(W({0, 2}).subword_of(W({1, 1})));
}

TEST_CASE("canonical order: length first, then letter-sequence lex") {
    CHECK(canonical_word_less(W({1, 0}), W({0, 1})));   // 1 < 2
    CHECK(canonical_word_less(W({0, 1}), W({2, 0})));   // 2 < 11
    CHECK(canonical_word_less(W({2, 0}), W({1, 1})));   // 11 < 12
    CHECK(canonical_word_less(W({1, 1}), W({0, 2})));   // 12 < 22
    CHECK_FALSE(canonical_word_less(W({1, 1}), W({1, 1})));
}

TEST_CASE("set statistics") {
    WordSet s = set_of({{1, 0}, {0, 1}, {1, 1}});  // {1,2,12}
    CHECK(s.size() == 3);
    CHECK(s.order() == 2);
    CHECK(s.weight() == 4);
    CHECK(s.beta() == std::vector<int>{2, 2});
    CHECK(s.charseq().n == std::vector<long long>{2, 1});
    CHECK(s.str() == "{1,2,12}");

    WordSet one = set_of({{1}});
    CHECK(one.size() == 1);
    CHECK(one.order() == 1);
    CHECK(one.weight() == 1);
    CHECK(one.charseq().n == std::vector<long long>{1});

    // {1, 11, ..., 1^m}: weight m(m+1)/2, the one-variable Wronskian twist.
    for (int m = 1; m <= 6; ++m) {
        std::vector<Word> words;
        for (int i = 1; i <= m; ++i) words.push_back(W({i}));
        WordSet chain(std::move(words));
        CHECK(chain.weight() == m * (m + 1) / 2);
        CHECK(chain.beta() == std::vector<int>{m * (m + 1) / 2});
    }

    CHECK_THROWS_AS(set_of({{1, 0}, {1, 0}}), arity_error);   // duplicate
    CHECK_THROWS_AS(set_of({{1, 0}, {0, 0}}), arity_error);   // zero vector
}

TEST_CASE("admissibility") {
    CHECK(is_admissible(set_of({{1, 0}, {1, 1}})));
    CHECK_FALSE(is_admissible(set_of({{1, 1}})));
    std::vector<Word> chain;
    for (int i = 1; i <= 5; ++i) chain.push_back(W({i}));
    CHECK(is_admissible(WordSet(chain)));

    // Length-sorting is an optimal witness ordering: agree with exhaustive
    // permutation search on random sets, m <= 5.
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int p = 1 + (int)(rng() % 3);
        int m = 1 + (int)(rng() % 5);
        std::set<std::vector<int>> seen;
        std::vector<Word> words;
        while ((int)words.size() < m) {
            std::vector<int> a(p, 0);
            for (int i = 0; i < p; ++i) a[i] = (int)(rng() % 4);
            int len = 0;
            for (int x : a) len += x;
            if (len == 0 || !seen.insert(a).second) continue;
            words.emplace_back(a);
        }
        WordSet ws(words);
        CHECK(is_admissible(ws) == oracle::admissible_by_permutation_search(ws));
    }
}

TEST_CASE("fullness") {
    CHECK_FALSE(is_full(set_of({{1, 0}, {1, 1}})));        // subword 2 missing
    CHECK(is_full(set_of({{1, 0}, {0, 1}, {1, 1}})));
    std::vector<Word> chain;
    for (int i = 1; i <= 6; ++i) chain.push_back(W({i}));
    CHECK(is_full(WordSet(chain)));
}

TEST_CASE("full-set enumeration small cases") {
    for (int m = 1; m <= 8; ++m) CHECK(enumerate_full_sets(1, m).size() == 1);

    auto f21 = enumerate_full_sets(2, 1);
    REQUIRE(f21.size() == 2);
    CHECK(f21[0].str() == "{1}");
    CHECK(f21[1].str() == "{2}");

    auto f22 = enumerate_full_sets(2, 2);
    REQUIRE(f22.size() == 3);
    CHECK(f22[0].str() == "{1,2}");
    CHECK(f22[1].str() == "{1,11}");
    CHECK(f22[2].str() == "{2,22}");

    CHECK_THROWS_AS(enumerate_full_sets(2, 6, EnumLimit{3}), enumeration_limit_error);
}

TEST_CASE("enumeration matches the level-growth oracle") {
    for (int p = 1; p <= 3; ++p) {
        for (int m = 1; m <= 6; ++m) {
            auto ours = enumerate_full_sets(p, m);
            auto truth = oracle::full_sets_by_levels(p, m);
            REQUIRE(ours.size() == truth.size());
            for (std::size_t i = 0; i < ours.size(); ++i) CHECK(ours[i] == truth[i]);
            for (const auto& U : ours) {
                CHECK(is_full(U));
                CHECK(is_admissible(U));
            }
        }
    }
}

TEST_CASE("order bound when all singletons are present") {
    for (int p = 1; p <= 3; ++p) {
        for (int m = p; m <= 6; ++m) {
            for (const auto& U : enumerate_full_sets(p, m)) {
                bool has_all = true;
                for (int i = 0; i < p && has_all; ++i) {
                    std::vector<int> e(p, 0);
                    e[i] = 1;
                    has_all = U.contains(Word(e));
                }
                if (has_all) CHECK(U.order() <= m - p + 1);
            }
        }
    }
}

TEST_CASE("canonical full set") {
    WordSet u22 = canonical_full_set(2, 2);
    CHECK(u22.size() == 5);
    CHECK(u22.weight() == 8);
    CHECK(u22.beta() == std::vector<int>{4, 4});

    for (int n = 1; n <= 5; ++n) {
        WordSet un = canonical_full_set(1, n);
        CHECK(un.size() == n);
        CHECK(un.weight() == n * (n + 1) / 2);
    }

    WordSet u31 = canonical_full_set(3, 1);
    CHECK(u31.size() == 3);
    CHECK(u31.weight() == 3);

    // Closed forms against direct enumeration.
    for (int p = 1; p <= 4; ++p) {
        for (int n = 1; n <= 8; ++n) {
            WordSet un = canonical_full_set(p, n);
            CHECK(count_words_upto(p, n) == Integer(un.size()));
            CHECK(weight_words_upto(p, n) == Integer((long)un.weight()));
            CHECK(is_full(un));
        }
    }
}

TEST_CASE("characteristic sequence order") {
    CharSequence a{{3}}, b{{1, 1}};
    CHECK(compare_char_sequences(a, b) == -1);  // order 1 < order 2
    CHECK(compare_char_sequences(b, a) == 1);
    CharSequence c{{2, 1}}, d{{1, 2}};
    CHECK(compare_char_sequences(c, d) == -1);  // (2,1) >lex (1,2)
    CHECK(compare_char_sequences(d, d) == 0);

    // Trichotomy and transitivity on random triples.
    std::mt19937 rng(11);
    auto random_seq = [&rng]() {
        CharSequence s;
        int k = 1 + (int)(rng() % 4);
        for (int i = 0; i < k; ++i) s.n.push_back((long long)(rng() % 4));
        s.n.back() = std::max(s.n.back(), 1LL);
        return s;
    };
    for (int t = 0; t < 500; ++t) {
        CharSequence x = random_seq(), y = random_seq(), z = random_seq();
        int xy = compare_char_sequences(x, y);
        CHECK(compare_char_sequences(y, x) == -xy);
        CHECK((xy == 0) == (x == y));
        if (xy <= 0 && compare_char_sequences(y, z) <= 0)
            CHECK(compare_char_sequences(x, z) <= 0);
    }
}

TEST_CASE("greedy minimal weight") {
    auto [seq25, w25] = min_weight_for_size(2, Integer(5));
    CHECK(seq25.n == std::vector<long long>{2, 3});
    CHECK(w25 == 8);
    CHECK(w25 == weight_words_upto(2, 2));

    auto [seq1, w1] = min_weight_for_size(1, Integer(6));
    CHECK(seq1.n == std::vector<long long>(6, 1));
    CHECK(w1 == 21);

    auto [seqp, wp] = min_weight_for_size(4, Integer(1));
    CHECK(seqp.n == std::vector<long long>{1});
    CHECK(wp == 1);
}

TEST_CASE("foliation ratio") {
    CHECK(foliation_ratio(1, 1, 100) == Rational(11 * 101, 5050));
    CHECK(foliation_ratio(1, 1, 1) == Rational(4));
    CHECK(foliation_ratio(1, 1, 10000) < foliation_ratio(1, 1, 100));
}

TEST_CASE("weight over size converges to p/(p+1)") {
    for (int p = 1; p <= 3; ++p) {
        Rational ratio(weight_words_upto(p, 40), Integer(40) * count_words_upto(p, 40));
        ratio.canonicalize();
        Rational target(p, p + 1);
        Rational gap = ratio - target;
        if (gap < 0) gap = -gap;
        CHECK(gap < Rational(1, 20));
    }
}
