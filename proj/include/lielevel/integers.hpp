#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "lielevel/errors.hpp"

namespace lielevel {

/// Exact arbitrary-precision integer. All dimension and counting arithmetic
/// in this library is carried out in Int; no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int factorial(long n) {
    if (n < 0) throw DomainError("factorial of negative integer");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int pow2(long e) {
    if (e < 0) throw DomainError("pow2 of negative exponent");
    Int r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return r;
}

/// Quotient of an exact division; throws if the division is not exact.
inline Int div_exact(const Int& num, const Int& den, const char* what) {
    if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw Error(std::string("inexact division in ") + what);
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace lielevel
