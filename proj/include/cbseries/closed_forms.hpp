#pragma once

#include <utility>

#include "cbseries/combinatorics.hpp"
#include "cbseries/constants.hpp"
#include "cbseries/errors.hpp"

namespace cbseries {

// Exact constant-vector values of the named definite integrals. Each is a
// finite rational sum, so the alternating cancellations are exact; the
// quadrature and recurrence certifications live in the test suites.

/// B(k) = int_0^{1/2} t^k / sqrt(1-t) dt on span{1, sqrt2}.
inline ConstVec b_integral(long k) {
    Rational one_c(0), sqrt2_c(0);
    for (long p = 0; p <= k; ++p) {
        Rational c = Rational(binomial(k, p)) / Rational(2 * p + 1);
        if (p % 2) c = -c;
        one_c += Rational(2) * c;
        sqrt2_c -= c / Rational(pow2(p));
    }
    return ConstVec{{ConstName::ONE, one_c}, {ConstName::SQRT2, sqrt2_c}};
}

/// nu1(k), nu2(k) with B(k) = nu1 - nu2*sqrt2; their ratio tends to sqrt2.
inline std::pair<Rational, Rational> nu_pair(long k) {
    Rational nu1(0), nu2(0);
    for (long p = 0; p <= k; ++p) {
        Rational c = Rational(binomial(k, p)) / Rational(2 * p + 1);
        if (p % 2) c = -c;
        nu1 += Rational(2) * c;
        nu2 += c / Rational(pow2(p));
    }
    return {nu1, nu2};
}

/// phi(2k+1) = int_0^1 t^{2k+1} sqrt(1+t^2) dt on span{1, sqrt2}.
inline ConstVec phi_odd(long k) {
    Rational one_c(0), sqrt2_c(0);
    for (long p = 0; p <= k; ++p) {
        Rational c = Rational(binomial(k, p)) / Rational(2 * p + 3);
        if ((k - p) % 2) c = -c;
        sqrt2_c += c * Rational(pow2(p + 1));
        one_c -= c;
    }
    return ConstVec{{ConstName::ONE, one_c}, {ConstName::SQRT2, sqrt2_c}};
}

/// phi(2k) = int_0^1 t^{2k} sqrt(1+t^2) dt on span{sqrt2, ln(1+sqrt2)}.
inline ConstVec phi_even(long k) {
    // inner = I(0) + sqrt2 * sum_{p=1}^k (-1)^p 4^p / C(2p,p),
    // I(0) = sqrt2/2 + ln(1+sqrt2)/2
    Rational sqrt2_c(1, 2);
    for (long p = 1; p <= k; ++p) {
        Rational t = Rational(pow2(2 * p)) / Rational(central_binomial(p));
        if (p % 2) t = -t;
        sqrt2_c += t;
    }
    ConstVec inner{{ConstName::SQRT2, sqrt2_c}, {ConstName::LN_1P_SQRT2, Rational(1, 2)}};
    Rational pre = Rational(central_binomial(k)) / (Rational(pow2(2 * k)) * Rational(k + 1));
    if (k % 2) pre = -pre;
    return pre * inner;
}

/// K(r) = int_0^{pi/2} sin^{2r}x sin(x/2) dx on span{1, sqrt2}.
/// The k = 0 term of the inner sum uses (4k-1) = -1, which is intended.
inline ConstVec k_integral(long r) {
    Rational sum(0);
    for (long k = 0; k <= r; ++k)
        sum += Rational(binomial(4 * k, 2 * k)) / (Rational(4 * k - 1) * Rational(ipow(16, k)));
    ConstVec inner{{ConstName::ONE, Rational(2)}, {ConstName::SQRT2, sum}};
    Rational pre = Rational(ipow(16, r)) / (Rational(4 * r + 1) * Rational(binomial(4 * r, 2 * r)));
    return pre * inner;
}

/// I(r) = int_0^{pi/2} sin^{2r-1}x cos(x/2) dx on span{1, sqrt2}; the
/// integral is stated for r >= 1 only, and r = 0 is rejected rather than
/// extended.
inline ConstVec i_integral(long r) {
    if (r < 1) throw DomainError("I(r) requires r >= 1");
    Rational sum(0);
    for (long k = 0; k <= r - 1; ++k)
        sum += Rational(binomial(4 * k, 2 * k)) / (Rational(6 * k + 3) * Rational(ipow(16, k)));
    ConstVec inner{{ConstName::ONE, Rational(4, 3)}, {ConstName::SQRT2, -sum}};
    Rational pre = Rational(6) * Rational(ipow(16, r - 1)) /
                   (Rational(r) * Rational(binomial(4 * r, 2 * r)));
    return pre * inner;
}

/// wp(q) = int_0^{pi/2} z sin^q z dz: even q lands on span{1, pi^2}, odd q
/// is rational.
inline ConstVec wp_integral(long q) {
    if (q < 0) throw DomainError("wp(q) requires q >= 0");
    if (q % 2 == 0) {
        long n = q / 2;
        Rational sum(0);
        for (long k = 1; k <= n; ++k)
            sum += Rational(pow2(2 * k)) / (Rational(k) * Rational(k) * Rational(central_binomial(k)));
        Rational pre = Rational(central_binomial(n)) / Rational(pow2(2 * n + 2));
        return pre * ConstVec{{ConstName::ONE, sum}, {ConstName::PI_SQ, Rational(1, 2)}};
    }
    long n = (q - 1) / 2;
    Rational sum(1);
    for (long k = 1; k <= n; ++k)
        sum += Rational(central_binomial(k)) / (Rational(pow2(2 * k)) * Rational(2 * k + 1));
    Rational pre = Rational(pow2(2 * n)) / (Rational(2 * n + 1) * Rational(central_binomial(n)));
    return ConstVec{{ConstName::ONE, pre * sum}};
}

/// omega_k = 2 sqrt2 pi - 2 B(k+3/2,1/2) - 2 B(k+1/2,1/2), with the
/// half-integer Beta values reduced through the Gamma recursion:
/// B(k+1/2,1/2) = pi C(2k,k)/4^k.
inline ConstVec omega_term(long k) {
    if (k < 1) throw DomainError("omega_k requires k >= 1");
    Rational bk = Rational(central_binomial(k)) / Rational(pow2(2 * k));
    Rational bk1 = Rational(central_binomial(k + 1)) / Rational(pow2(2 * k + 2));
    return ConstVec{{ConstName::PI_SQRT2, Rational(2)},
                    {ConstName::PI, Rational(-2) * (bk + bk1)}};
}

/// F(r) = int_0^1 t^{r-1/2} sqrt(1+t) arcsin t dt on the pi-multiple span
/// {pi, pi sqrt2, pi ln2, pi ln(1+sqrt2)};
/// F(0) = (pi/2)(sqrt2 - 1 + ln(1+sqrt2) - ln 2).
inline ConstVec f_integral(long r) {
    if (r < 0) throw DomainError("F(r) requires r >= 0");
    ConstVec inner{{ConstName::PI, Rational(-1, 2)},
                   {ConstName::PI_SQRT2, Rational(1, 2)},
                   {ConstName::PI_LN_1P_SQRT2, Rational(1, 2)},
                   {ConstName::PI_LN2, Rational(-1, 2)}};
    for (long k = 1; k <= r; ++k) {
        Rational c = Rational(pow2(2 * k - 1)) / Rational(central_binomial(k));
        if (k % 2) c = -c;
        inner += c * omega_term(k);
    }
    Rational pre = Rational(central_binomial(r)) / (Rational(pow2(2 * r)) * Rational(r + 1));
    if (r % 2) pre = -pre;
    return pre * inner;
}

/// Wallis integrals int_0^{pi/2} sin^m x dx: even m gives a rational
/// multiple of pi, odd m a plain rational. The bridge between sine power
/// series and binomial-ratio series.
inline ConstVec wallis_even(long n) {
    return ConstVec::from(ConstName::PI,
                          Rational(central_binomial(n)) / Rational(pow2(2 * n + 1)));
}

inline Rational wallis_odd(long n) {
    return Rational(pow2(2 * n)) / (Rational(2 * n + 1) * Rational(central_binomial(n)));
}

}  // namespace cbseries
