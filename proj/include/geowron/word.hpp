#pragma once

#include <compare>
#include <string>
#include <vector>

#include "geowron/rational.hpp"

namespace gwron {

// A word over the alphabet {1..p} in its normal form: the occurrence-count
// vector (alpha_1,...,alpha_p). The letter sequence is redundant since words
// are kept letter-sorted; subword = componentwise <=.
class Word {
public:
    explicit Word(std::vector<int> alpha);
    static Word from_letters(const std::vector<int>& letters, int p);

    const std::vector<int>& alpha() const { return alpha_; }
    int p() const { return (int)alpha_.size(); }
    int length() const { return length_; }

    bool subword_of(const Word& w) const;
    Word concat(const Word& w) const;  // exponent sum

    bool operator==(const Word& o) const { return alpha_ == o.alpha_; }

    // Display form, e.g. (2,1) -> "112".
    std::string letters_str() const;

private:
    std::vector<int> alpha_;
    int length_;
};

// Canonical word order: ascending length; within a length, words in the
// lexicographic order of their letter sequences (equivalently, descending
// lex on exponent vectors with coordinate 1 most significant).
bool canonical_word_less(const Word& a, const Word& b);

// Counts of words per length, (n_1,...,n_k) with n_k >= 1.
struct CharSequence {
    std::vector<long long> n;

    int order() const { return (int)n.size(); }
    Integer size_m() const;
    Integer weight() const;
    bool operator==(const CharSequence& o) const = default;
    std::string str() const;
};

// Total order: first by order k; at equal order, a < b iff a is
// lexicographically greater than b. Returns -1, 0 or 1.
int compare_char_sequences(const CharSequence& a, const CharSequence& b);

// A finite set of distinct nonempty words with cached statistics, kept in
// canonical order.
class WordSet {
public:
    explicit WordSet(std::vector<Word> words);

    const std::vector<Word>& words() const { return words_; }
    int p() const { return p_; }
    int size() const { return (int)words_.size(); }  // m
    int order() const { return order_; }             // k
    long long weight() const { return weight_; }     // w
    const std::vector<int>& beta() const { return beta_; }
    const CharSequence& charseq() const { return charseq_; }

    bool contains(const Word& w) const;
    bool operator==(const WordSet& o) const { return words_ == o.words_; }

    std::string str() const;  // e.g. {1,2,12}

private:
    std::vector<Word> words_;
    int p_;
    int order_;
    long long weight_;
    std::vector<int> beta_;
    CharSequence charseq_;
};

// Element-wise comparison of the canonical word lists; the deterministic
// order used for enumeration output and witness scans.
bool canonical_set_less(const WordSet& a, const WordSet& b);

}  // namespace gwron
