#pragma once

#include <gmpxx.h>

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwron {

using Rational = mpq_class;
using Integer = mpz_class;

// Exception hierarchy. The CLI maps these onto its exit codes.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};
struct arity_error : error {
    using error::error;
};
struct precision_error : error {
    using error::error;
};
struct enumeration_limit_error : error {
    using error::error;
};
// A computation contradicted a statement that is proved to hold. Loud by design.
struct refutation_error : error {
    using error::error;
};
struct inapplicable_error : error {
    using error::error;
};

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& n) { return n.get_str(); }

// Accepts "a" and "a/b" with optional sign, reduced on return.
inline Rational parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw parse_error("invalid rational literal '" + s + "'", 0);
    if (q.get_den() == 0) throw parse_error("zero denominator in '" + s + "'", 0);
    q.canonicalize();
    return q;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Rational pow_rational(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    mpq_class base = e > 0 ? q : Rational(q.get_den(), q.get_num());
    if (e < 0 && q == 0) throw error("zero to a negative power");
    base.canonicalize();
    mpq_class r(1);
    for (long i = 0; i < (e > 0 ? e : -e); ++i) r *= base;
    return r;
}

// Randomized checks draw from a declared finite set: k/d with k in
// [-rational_pool_span, rational_pool_span] and d in {1,2,3}. Seeded callers
// reproduce byte-identical output.
inline constexpr long rational_pool_span = 30;
inline constexpr unsigned long default_seed = 987654321UL;

class RationalSampler {
public:
    explicit RationalSampler(unsigned long seed) : rng_(seed) {}

    Rational draw() {
        std::uniform_int_distribution<long> num(-rational_pool_span, rational_pool_span);
        std::uniform_int_distribution<long> den(1, 3);
        Rational q(num(rng_), den(rng_));
        q.canonicalize();
        return q;
    }

    Rational draw_nonzero() {
        for (;;) {
            Rational q = draw();
            if (q != 0) return q;
        }
    }

    // Uniform integer in [lo, hi].
    long draw_int(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(rng_);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace gwron
