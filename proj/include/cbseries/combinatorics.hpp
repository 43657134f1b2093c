#pragma once

#include "cbseries/rational.hpp"

namespace cbseries {

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// C(n,k); 0 outside 0 <= k <= n, matching the convention finite binomial
/// sums rely on.
inline Integer binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

inline Integer central_binomial(unsigned long n) { return binomial(2 * n, static_cast<long>(n)); }

/// Rising factorial (x)_n = x(x+1)...(x+n-1), with (x)_0 = 1.
inline Rational pochhammer(const Rational& x, unsigned long n) {
    Rational acc(1);
    Rational f = x;
    for (unsigned long i = 0; i < n; ++i) {
        acc *= f;
        f += Rational(1);
    }
    return acc;
}

}  // namespace cbseries
