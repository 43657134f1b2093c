#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cbseries/constants.hpp"
#include "cbseries/errors.hpp"
#include "cbseries/rational.hpp"

namespace cbseries {

inline mpfr_prec_t bits_for_digits(int digits) {
    if (digits < 2) digits = 2;
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 16;
}

/// Arbitrary-precision binary float. Each value carries its own working
/// precision, fixed at construction and requested in decimal digits;
/// binary operations round to the wider operand's precision. Precision is
/// always an explicit argument, never ambient state.
class BigFloat {
public:
    explicit BigFloat(int digits = 20) { mpfr_init2(v_, bits_for_digits(digits)); }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat of_long(long x, int digits) {
        BigFloat r(digits);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigFloat of_rational(const Rational& q, int digits) {
        BigFloat r(digits);
        mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
        return r;
    }
    /// num/den rounded once; the quotient need not be in lowest terms.
    static BigFloat of_quotient(const Integer& num, const Integer& den, int digits) {
        BigFloat r(digits);
        mpfr_set_z(r.v_, num.get_mpz_t(), MPFR_RNDN);
        BigFloat d(digits);
        mpfr_set_z(d.v_, den.get_mpz_t(), MPFR_RNDN);
        mpfr_div(r.v_, r.v_, d.v_, MPFR_RNDN);
        return r;
    }
    /// Parses a decimal string such as "1e-8" or "0.25".
    static BigFloat of_string(const std::string& s, int digits) {
        BigFloat r(digits);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw DomainError("cannot parse number: " + s);
        return r;
    }

    int digits() const {
        return static_cast<int>(static_cast<double>(mpfr_get_prec(v_) - 16) / 3.3219280948873626);
    }
    mpfr_prec_t prec_bits() const { return mpfr_get_prec(v_); }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r = a.widest(b);
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r = a.widest(b);
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r = a.widest(b);
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r = a.widest(b);
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a) {
        BigFloat r = a;
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator-=(const BigFloat& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator*=(const BigFloat& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    BigFloat abs() const {
        BigFloat r = *this;
        mpfr_abs(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    /// Exact scaling by 2^e.
    BigFloat mul_2si(long e) const {
        BigFloat r = *this;
        mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }
    BigFloat pow_si(long e) const {
        BigFloat r = *this;
        mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    /// Shortest decimal form with the given number of significant digits.
    std::string str(int sig_digits) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", sig_digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }
    std::string str() const { return str(digits()); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    BigFloat widest(const BigFloat& o) const {
        BigFloat r(2);
        mpfr_set_prec(r.v_, std::max(mpfr_get_prec(v_), mpfr_get_prec(o.v_)));
        return r;
    }

    mpfr_t v_;
};

namespace detail {
template <int (*F)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
inline BigFloat unary(const BigFloat& x) {
    BigFloat r = x;
    F(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
}  // namespace detail

inline BigFloat sqrt(const BigFloat& x) {
    if (x.sign() < 0) throw DomainError("sqrt of negative value");
    return detail::unary<mpfr_sqrt>(x);
}
inline BigFloat log(const BigFloat& x) {
    if (x.sign() <= 0) throw DomainError("log of non-positive value");
    return detail::unary<mpfr_log>(x);
}
inline BigFloat exp(const BigFloat& x) { return detail::unary<mpfr_exp>(x); }
inline BigFloat sin(const BigFloat& x) { return detail::unary<mpfr_sin>(x); }
inline BigFloat cos(const BigFloat& x) { return detail::unary<mpfr_cos>(x); }
inline BigFloat sinh(const BigFloat& x) { return detail::unary<mpfr_sinh>(x); }
inline BigFloat cosh(const BigFloat& x) { return detail::unary<mpfr_cosh>(x); }
inline BigFloat atan(const BigFloat& x) { return detail::unary<mpfr_atan>(x); }
inline BigFloat asin(const BigFloat& x) {
    BigFloat one = BigFloat::of_long(1, 2);
    if (x.abs() > one) throw DomainError("asin argument outside [-1,1]");
    return detail::unary<mpfr_asin>(x);
}

inline BigFloat const_pi(int digits) {
    BigFloat r(digits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat const_ln2(int digits) {
    BigFloat r(digits);
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

/// Named elementary function dispatcher; relative error <= 10^(5-digits).
enum class Elem { Sqrt, Ln, Arcsin, Arctan, Sin, Cos };

inline BigFloat elementary(Elem fn, const BigFloat& x, int digits) {
    BigFloat xd(digits);
    mpfr_set(xd.raw(), x.raw(), MPFR_RNDN);
    switch (fn) {
        case Elem::Sqrt: return sqrt(xd);
        case Elem::Ln: return log(xd);
        case Elem::Arcsin: return asin(xd);
        case Elem::Arctan: return atan(xd);
        case Elem::Sin: return sin(xd);
        case Elem::Cos: return cos(xd);
    }
    throw DomainError("unknown elementary function");
}

/// One basis constant to the requested precision. Product constants are
/// formed from their factors at elevated internal precision.
inline BigFloat eval_const(ConstName name, int digits) {
    const int wd = digits + 10;
    BigFloat r(digits);
    auto round_to = [&](const BigFloat& x) {
        mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
        return r;
    };
    switch (name) {
        case ConstName::ONE: return round_to(BigFloat::of_long(1, wd));
        case ConstName::SQRT2: return round_to(sqrt(BigFloat::of_long(2, wd)));
        case ConstName::PI: return round_to(const_pi(wd));
        case ConstName::PI_SQ: {
            BigFloat p = const_pi(wd);
            return round_to(p * p);
        }
        case ConstName::LN2: return round_to(const_ln2(wd));
        case ConstName::LN_1P_SQRT2:
            return round_to(log(BigFloat::of_long(1, wd) + sqrt(BigFloat::of_long(2, wd))));
        case ConstName::PI_SQRT2: return round_to(const_pi(wd) * sqrt(BigFloat::of_long(2, wd)));
        case ConstName::PI_LN2: return round_to(const_pi(wd) * const_ln2(wd));
        case ConstName::PI_LN_1P_SQRT2:
            return round_to(const_pi(wd) *
                            log(BigFloat::of_long(1, wd) + sqrt(BigFloat::of_long(2, wd))));
    }
    throw DomainError("unknown constant");
}

/// Numeric value of an exact constant vector: the coefficient-weighted sum of
/// the basis constants, accumulated at digits+10 and rounded once.
inline BigFloat eval_constvec(const ConstVec& v, int digits) {
    const int wd = digits + 10;
    BigFloat acc = BigFloat::of_long(0, wd);
    for (const auto& [name, coeff] : v.coeffs())
        acc += BigFloat::of_rational(coeff, wd) * eval_const(name, wd);
    BigFloat r(digits);
    mpfr_set(r.raw(), acc.raw(), MPFR_RNDN);
    return r;
}

/// Warms MPFR's internal pi/log2 caches at the given precision so that
/// concurrent evaluation never grows them from multiple threads.
inline void prime_constant_cache(int digits) {
    eval_const(ConstName::PI_LN_1P_SQRT2, digits + 30);
}

}  // namespace cbseries
