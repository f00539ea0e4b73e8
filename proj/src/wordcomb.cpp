#include "geowron/wordcomb.hpp"

#include <algorithm>

namespace gwron {

// Canonical order lists words by ascending length, so admissibility reduces
// to length(words[i]) <= i+1. If any ordering satisfies the constraint, the
// length-sorted one does: swapping two adjacent out-of-length-order words in
// a witness ordering never breaks the constraint (the shorter word moves to
// an earlier slot, the longer one inherits a slot at least as large as the
// one the shorter word satisfied). Tested against exhaustive permutation
// search for m <= 5.
bool is_admissible(const WordSet& ws) {
    const auto& words = ws.words();
    for (std::size_t i = 0; i < words.size(); ++i)
        if (words[i].length() > (int)i + 1) return false;
    return true;
}

// Downward closure is equivalent to closure under covers w - e_i (induction
// on the length gap), so only covers are checked.
bool is_full(const WordSet& ws) {
    for (const Word& w : ws.words()) {
        for (int i = 0; i < ws.p(); ++i) {
            if (w.alpha()[i] == 0) continue;
            if (w.length() == 1) continue;  // cover is the empty word
            std::vector<int> a = w.alpha();
            a[i] -= 1;
            if (!ws.contains(Word(a))) return false;
        }
    }
    return true;
}

namespace {

bool covers_present(const std::vector<Word>& members, const Word& w, int p) {
    if (w.length() == 1) return true;
    for (int i = 0; i < p; ++i) {
        if (w.alpha()[i] == 0) continue;
        std::vector<int> a = w.alpha();
        a[i] -= 1;
        Word sub(std::move(a));
        if (!std::binary_search(members.begin(), members.end(), sub, canonical_word_less))
            return false;
    }
    return true;
}

// Each full set is produced exactly once: its canonically largest word is
// poset-maximal (anything above it would be strictly longer), so removing it
// leaves a smaller full set, and the recursion adds words in strictly
// increasing canonical order.
void extend(std::vector<Word>& cur, int p, int m, const EnumLimit& limit,
            std::vector<WordSet>& out) {
    if ((int)cur.size() == m) {
        if (out.size() >= limit.max_sets)
            throw enumeration_limit_error("full-set enumeration exceeded the configured cap of " +
                                          std::to_string(limit.max_sets) + " sets");
        out.emplace_back(cur);
        return;
    }
    // Candidates: singletons and one-letter extensions of current members.
    std::vector<Word> cands;
    for (int i = 0; i < p; ++i) {
        std::vector<int> a(p, 0);
        a[i] = 1;
        cands.emplace_back(std::move(a));
    }
    for (const Word& u : cur) {
        for (int i = 0; i < p; ++i) {
            std::vector<int> a = u.alpha();
            a[i] += 1;
            cands.emplace_back(std::move(a));
        }
    }
    std::sort(cands.begin(), cands.end(), canonical_word_less);
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const Word& w : cands) {
        if (!cur.empty() && !canonical_word_less(cur.back(), w)) continue;
        if (!covers_present(cur, w, p)) continue;
        cur.push_back(w);
        extend(cur, p, m, limit, out);
        cur.pop_back();
    }
}

void all_words_of_length(int p, int len, int from_letter, std::vector<int>& alpha,
                         std::vector<Word>& out) {
    if (len == 0) {
        out.emplace_back(alpha);
        return;
    }
    for (int i = from_letter; i < p; ++i) {
        alpha[i] += 1;
        all_words_of_length(p, len - 1, i, alpha, out);
        alpha[i] -= 1;
    }
}

}  // namespace

std::vector<WordSet> enumerate_full_sets(int p, int m, const EnumLimit& limit) {
    if (p < 1 || m < 1) throw arity_error("p and m must be positive");
    std::vector<WordSet> out;
    std::vector<Word> cur;
    extend(cur, p, m, limit, out);
    std::sort(out.begin(), out.end(), canonical_set_less);
    return out;
}

WordSet canonical_full_set(int p, int n) {
    if (p < 1 || n < 1) throw arity_error("p and n must be positive");
    std::vector<Word> words;
    std::vector<int> alpha(p, 0);
    for (int len = 1; len <= n; ++len) all_words_of_length(p, len, 0, alpha, words);
    return WordSet(std::move(words));
}

Integer count_words_of_length(int p, int length) {
    return binomial((unsigned long)(p + length - 1), (unsigned long)(p - 1));
}

Integer count_words_upto(int p, int n) {
    Integer m(0);
    for (int i = 1; i <= n; ++i) m += count_words_of_length(p, i);
    return m;
}

Integer weight_words_upto(int p, int n) {
    Integer w(0);
    for (int i = 1; i <= n; ++i) w += Integer(i) * count_words_of_length(p, i);
    return w;
}

std::pair<CharSequence, Integer> min_weight_for_size(int p, const Integer& m) {
    if (p < 1 || m < 1) throw arity_error("p and m must be positive");
    CharSequence seq;
    Integer left = m;
    Integer weight(0);
    for (int j = 1; left > 0; ++j) {
        Integer cap = count_words_of_length(p, j);
        Integer take = left < cap ? left : cap;
        if (!take.fits_slong_p()) throw enumeration_limit_error("characteristic count overflow");
        seq.n.push_back(take.get_si());
        weight += Integer(j) * take;
        left -= take;
    }
    return {std::move(seq), std::move(weight)};
}

Rational foliation_ratio(int p, int C, int n) {
    if (p < 1 || C < 1 || n < 1) throw arity_error("p, C and n must be positive");
    Integer m = count_words_upto(p, n);
    // Least r with C*r^(p+1) > m.
    Integer q = m / C;
    Integer r;
    mpz_root(r.get_mpz_t(), q.get_mpz_t(), (unsigned long)(p + 1));
    if (r < 1) r = 1;
    auto big_enough = [&](const Integer& x) {
        Integer t;
        mpz_pow_ui(t.get_mpz_t(), x.get_mpz_t(), (unsigned long)(p + 1));
        return Integer(C) * t > m;
    };
    while (!big_enough(r)) r += 1;
    Integer w_min = min_weight_for_size(p, m).second;
    Rational ratio(r * (m + 1), w_min);
    ratio.canonicalize();
    return ratio;
}

}  // namespace gwron
