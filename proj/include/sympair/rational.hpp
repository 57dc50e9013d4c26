#pragma once

#include <gmpxx.h>

#include <string>

#include "error.hpp"

namespace sympair {

/// Exact rational scalar. All arithmetic in the library is over Q.
using Rat = mpq_class;
using Int = mpz_class;

/// Parse "3", "-7/2", "0" into a canonical rational. Rejects empty input and
/// zero denominators.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    for (char ch : s) {
        if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9')))
            throw ParseError("bad character in rational literal: " + s);
    }
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("unparsable rational literal: " + s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

/// Canonical textual form: "n/d" with positive d, or just "n" when d = 1.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_pow(const Rat& q, unsigned long e) {
    Rat r = 1;
    Rat base = q;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Falling factorial (x)_m = x(x-1)...(x-m+1).
inline Rat falling(const Rat& x, unsigned long m) {
    Rat r = 1;
    for (unsigned long i = 0; i < m; ++i) r *= x - Rat(static_cast<long>(i));
    return r;
}

} // namespace sympair
