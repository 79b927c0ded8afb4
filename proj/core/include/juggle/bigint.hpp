#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace juggle {

// All counts and matrix entries use arbitrary-precision integers; the
// pattern tables overflow 64 bits well before the feasibility bounds do.
using big_int = mpz_class;

inline big_int binomial(unsigned long n, unsigned long k) {
    big_int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline big_int pow2(unsigned long e) {
    big_int r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
    return r;
}

inline std::string to_string(const big_int& v) { return v.get_str(); }

}  // namespace juggle
