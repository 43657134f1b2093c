#pragma once

#include <functional>
#include <vector>

#include "cbseries/bigfloat.hpp"
#include "cbseries/combinatorics.hpp"
#include "cbseries/rational.hpp"

namespace cbseries {

/// The binomial factor C(a n + b, c n + d) as a function of the summation
/// index n. Every series in the catalog is a small rational function of n
/// times a ratio of such factors times a power of two per step, so one
/// declaration drives both the exact per-index evaluation and the rolling
/// stream used for long summations.
struct BinomialForm {
    long a, b, c, d;

    Integer value_at(long n) const {
        return binomial(static_cast<unsigned long>(a * n + b), c * n + d);
    }
};

/// Exact term structure: term(n) = factor(n) * prod(num)/prod(den) * 2^(two_exp*n).
struct TermShape {
    std::function<Rational(long)> factor;
    std::vector<BinomialForm> num;
    std::vector<BinomialForm> den;
    long two_exp = 0;
};

/// One-shot exact evaluation; cost grows with n, fine for spot checks.
inline Rational term_value(const TermShape& shape, long n) {
    Integer num_i(1), den_i(1);
    for (const auto& bf : shape.num) num_i *= bf.value_at(n);
    for (const auto& bf : shape.den) den_i *= bf.value_at(n);
    long e = shape.two_exp * n;
    if (e >= 0)
        num_i *= pow2(static_cast<unsigned long>(e));
    else
        den_i *= pow2(static_cast<unsigned long>(-e));
    return shape.factor(n) * Rational(num_i, den_i);
}

namespace detail {

/// Rolls C(a n + b, c n + d) forward one index with exact small-word
/// multiplications and divisions; never recomputes from scratch.
class BinomialSeq {
public:
    BinomialSeq(const BinomialForm& form, long n0) : form_(form), n_(n0), value_(form.value_at(n0)) {}

    const Integer& value() const { return value_; }

    void advance() {
        const long N = form_.a * n_ + form_.b;   // current upper index
        const long K = form_.c * n_ + form_.d;   // current lower index
        for (long i = 1; i <= form_.a; ++i)
            mpz_mul_ui(value_.get_mpz_t(), value_.get_mpz_t(), static_cast<unsigned long>(N + i));
        for (long i = 1; i <= form_.c; ++i)
            mpz_divexact_ui(value_.get_mpz_t(), value_.get_mpz_t(),
                            static_cast<unsigned long>(K + i));
        const long M = N - K;
        for (long i = 1; i <= form_.a - form_.c; ++i)
            mpz_divexact_ui(value_.get_mpz_t(), value_.get_mpz_t(),
                            static_cast<unsigned long>(M + i));
        ++n_;
    }

private:
    BinomialForm form_;
    long n_;
    Integer value_;
};

}  // namespace detail

/// Streams exact terms of a shaped series from its start index upward,
/// amortizing the binomial factors across indices. next() yields the term
/// rounded once into a BigFloat; the unreduced exact numerator/denominator
/// stay internal.
class TermStream {
public:
    TermStream(const TermShape& shape, long start, int digits)
        : shape_(shape), n_(start), digits_(digits) {
        for (const auto& bf : shape_.num) num_seqs_.emplace_back(bf, start);
        for (const auto& bf : shape_.den) den_seqs_.emplace_back(bf, start);
    }

    long index() const { return n_; }

    BigFloat next() {
        Rational q = shape_.factor(n_);
        Integer num = q.num();
        Integer den = q.den();
        for (const auto& s : num_seqs_) num *= s.value();
        for (const auto& s : den_seqs_) den *= s.value();
        BigFloat t = BigFloat::of_quotient(num, den, digits_).mul_2si(shape_.two_exp * n_);
        for (auto& s : num_seqs_) s.advance();
        for (auto& s : den_seqs_) s.advance();
        ++n_;
        return t;
    }

private:
    TermShape shape_;
    long n_;
    int digits_;
    std::vector<detail::BinomialSeq> num_seqs_;
    std::vector<detail::BinomialSeq> den_seqs_;
};

}  // namespace cbseries
