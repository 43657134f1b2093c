#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <ostream>
#include <string>

#include "cbseries/errors.hpp"

namespace cbseries {

using Integer = mpz_class;

/// Exact rational number, always stored reduced with positive denominator.
///
/// Every constructor canonicalizes, so equality is plain structural
/// comparison of numerator and denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) : v_(static_cast<signed long>(num), static_cast<signed long>(den)) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_.canonicalize();
    }
    Rational(const Integer& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "p/q", or "-p/q".
    static Rational parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw DomainError("cannot parse rational: " + s);
        if (q.get_den() == 0) throw DomainError("rational with zero denominator: " + s);
        q.canonicalize();
        Rational r;
        r.v_ = q;
        return r;
    }

    const Integer& num() const { return v_.get_num(); }
    const Integer& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.v_ = -a.v_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const {
        Rational r;
        r.v_ = ::abs(v_);
        return r;
    }

    Rational reciprocal() const {
        if (is_zero()) throw DomainError("reciprocal of zero");
        Rational r;
        r.v_ = 1 / v_;
        return r;
    }

    std::string str() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

private:
    mpq_class v_;
};

inline Integer pow2(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline Integer ipow(unsigned long base, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

/// 2^e for signed e, as an exact rational.
inline Rational rational_pow2(long e) {
    return e >= 0 ? Rational(pow2(static_cast<unsigned long>(e)))
                  : Rational(Integer(1), pow2(static_cast<unsigned long>(-e)));
}

}  // namespace cbseries
