#pragma once

#include <gmpxx.h>
#include <string>

namespace qrc {

// Coefficient type for every polynomial in the library. All arithmetic is
// exact; divisions only happen where they are provably exact and are checked.
using Int = mpz_class;

inline std::string to_string(const Int& v) { return v.get_str(); }

inline Int int_from_string(const std::string& s) { return Int(s); }

// gcd with the convention gcd(0,0) = 0, result >= 0.
inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace qrc
