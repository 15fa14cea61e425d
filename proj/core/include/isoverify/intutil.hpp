#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace isoverify {

/// Arbitrary-precision integer used throughout the library.
using Int = mpz_class;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int gcd(const Int& a, const Int& b, const Int& c) { return gcd(gcd(a, b), c); }

/// Floor of sqrt(n); n must be nonnegative.
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Floor division (rounds toward negative infinity).
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Ceiling division.
inline Int cdiv(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline std::size_t bit_length(const Int& n) { return mpz_sizeinbase(n.get_mpz_t(), 2); }

inline std::string to_string(const Int& n) { return n.get_str(); }

/// Strict ordering usable as a comparator for mpz-keyed containers.
struct IntLess {
    bool operator()(const Int& a, const Int& b) const { return mpz_cmp(a.get_mpz_t(), b.get_mpz_t()) < 0; }
};

}  // namespace isoverify
