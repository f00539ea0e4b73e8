#include "geowron/word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gwron {

Word::Word(std::vector<int> alpha) : alpha_(std::move(alpha)) {
    if (alpha_.empty()) throw arity_error("word needs at least one letter slot");
    length_ = 0;
    for (int a : alpha_) {
        if (a < 0) throw arity_error("negative occurrence count");
        length_ += a;
    }
    if (length_ == 0) throw arity_error("the empty word is not allowed in a word set");
}

Word Word::from_letters(const std::vector<int>& letters, int p) {
    std::vector<int> alpha(p, 0);
    for (int l : letters) {
        if (l < 1 || l > p) throw arity_error("letter out of alphabet range");
        alpha[l - 1] += 1;
    }
    return Word(std::move(alpha));
}

bool Word::subword_of(const Word& w) const {
    if (p() != w.p()) throw arity_error("alphabet mismatch");
    for (int i = 0; i < p(); ++i)
        if (alpha_[i] > w.alpha_[i]) return false;
    return true;
}

Word Word::concat(const Word& w) const {
    if (p() != w.p()) throw arity_error("alphabet mismatch");
    std::vector<int> a = alpha_;
    for (int i = 0; i < p(); ++i) a[i] += w.alpha_[i];
    return Word(std::move(a));
}

std::string Word::letters_str() const {
    std::string s;
    for (int i = 0; i < p(); ++i)
        for (int k = 0; k < alpha_[i]; ++k) s += std::to_string(i + 1);
    return s;
}

bool canonical_word_less(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    // Letter-sequence lex = descending exponent lex at equal length.
    return a.alpha() > b.alpha();
}

Integer CharSequence::size_m() const {
    Integer m(0);
    for (long long x : n) m += Integer((long)x);
    return m;
}

Integer CharSequence::weight() const {
    Integer w(0);
    for (std::size_t j = 0; j < n.size(); ++j) w += Integer((long)(j + 1)) * Integer((long)n[j]);
    return w;
}

std::string CharSequence::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(n[i]);
    }
    return s + ")";
}

int compare_char_sequences(const CharSequence& a, const CharSequence& b) {
    if (a.order() != b.order()) return a.order() < b.order() ? -1 : 1;
    if (a.n == b.n) return 0;
    // At equal order, the smaller sequence is the lexicographically greater.
    return a.n > b.n ? -1 : 1;
}

WordSet::WordSet(std::vector<Word> words) : words_(std::move(words)) {
    if (words_.empty()) throw arity_error("word set must be nonempty");
    p_ = words_.front().p();
    for (const Word& w : words_)
        if (w.p() != p_) throw arity_error("alphabet mismatch inside word set");
    std::sort(words_.begin(), words_.end(), canonical_word_less);
    for (std::size_t i = 1; i < words_.size(); ++i)
        if (words_[i] == words_[i - 1])
            throw arity_error("duplicate word " + words_[i].letters_str() + " in word set");
    order_ = words_.back().length();
    weight_ = 0;
    beta_.assign(p_, 0);
    charseq_.n.assign(order_, 0);
    for (const Word& w : words_) {
        weight_ += w.length();
        for (int i = 0; i < p_; ++i) beta_[i] += w.alpha()[i];
        charseq_.n[w.length() - 1] += 1;
    }
}

bool WordSet::contains(const Word& w) const {
    auto it = std::lower_bound(words_.begin(), words_.end(), w, canonical_word_less);
    return it != words_.end() && *it == w;
}

std::string WordSet::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (i) s += ",";
        s += words_[i].letters_str();
    }
    return s + "}";
}

bool canonical_set_less(const WordSet& a, const WordSet& b) {
    return std::lexicographical_compare(a.words().begin(), a.words().end(), b.words().begin(),
                                        b.words().end(), canonical_word_less);
}

}  // namespace gwron
