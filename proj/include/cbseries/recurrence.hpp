#pragma once

#include <functional>

#include "cbseries/constants.hpp"
#include "cbseries/errors.hpp"
#include "cbseries/rational.hpp"

namespace cbseries {

/// First-order linear recurrence with non-constant coefficients,
///
///     a(n) z_n = b(n) z_{n-1} + r(n),   n >= 1,   z_0 given,
///
/// with rational transition coefficients and constant-vector state. Every
/// recurrence in the catalog (K, I, phi-even, wp, F) has this shape.
struct RecurrenceSpec {
    std::function<Rational(long)> a;  // nonzero for all queried n >= 1
    std::function<Rational(long)> b;  // nonzero for all queried n >= 1
    std::function<ConstVec(long)> r;
    ConstVec z0;
};

/// Evaluates z_n through the telescoped product formula
///
///     z_n = (b_1...b_n)/(a_1...a_n) (z_0 + sum_{k=1}^n (a_1...a_{k-1})/(b_1...b_k) r_k),
///
/// with incrementally maintained prefix products: advancing from n to n+1
/// costs O(1) rational multiplications. The instance is the stateful cache;
/// the free functions below wrap one-shot use.
class ClosedFormSolver {
public:
    explicit ClosedFormSolver(RecurrenceSpec spec)
        : spec_(std::move(spec)), a_prefix_(1), b_prefix_(1), inner_(spec_.z0) {}

    ConstVec value_at(long n) {
        if (n < upto_) throw DomainError("ClosedFormSolver only advances forward");
        advance_to(n);
        if (n == 0) return spec_.z0;
        return (b_prefix_ / a_prefix_) * inner_;
    }

    long rational_mults() const { return mults_; }

private:
    void advance_to(long n) {
        while (upto_ < n) {
            long k = ++upto_;
            Rational ak = spec_.a(k), bk = spec_.b(k);
            if (ak.is_zero() || bk.is_zero()) throw ZeroCoefficient(k);
            // coefficient of r_k is (a_1..a_{k-1})/(b_1..b_k)
            Rational coeff = a_prefix_ / (b_prefix_ * bk);
            mults_ += 2;
            inner_ += coeff * spec_.r(k);
            ++mults_;
            a_prefix_ *= ak;
            b_prefix_ *= bk;
            mults_ += 2;
        }
    }

    RecurrenceSpec spec_;
    long upto_ = 0;
    Rational a_prefix_, b_prefix_;
    ConstVec inner_;
    long mults_ = 0;
};

/// z_n by the closed product formula.
inline ConstVec solve_closed(const RecurrenceSpec& spec, long n) {
    ClosedFormSolver solver(spec);
    return solver.value_at(n);
}

/// z_n by direct recursion z_k = (b(k) z_{k-1} + r(k)) / a(k); the
/// independent oracle for solve_closed.
inline ConstVec solve_iterative(const RecurrenceSpec& spec, long n) {
    ConstVec z = spec.z0;
    for (long k = 1; k <= n; ++k) {
        Rational ak = spec.a(k);
        if (ak.is_zero()) throw ZeroCoefficient(k);
        Rational bk = spec.b(k);
        if (bk.is_zero()) throw ZeroCoefficient(k);
        z = ak.reciprocal() * (bk * z + spec.r(k));
    }
    return z;
}

/// The zero-indexed affine form x_{n+1} = a_n x_n + b_n:
///
///     x_n = a_0...a_{n-1} (x_0 + sum_{k=0}^{n-1} b_k / (a_0...a_k)).
///
/// Kept verbatim alongside the 1-indexed form above; both index conventions
/// appear in the catalog's sources and transcription bugs hide in exactly
/// this shift.
inline ConstVec solve_affine_form(const ConstVec& x0, const std::function<Rational(long)>& a,
                                  const std::function<ConstVec(long)>& b, long n) {
    Rational prefix(1);
    ConstVec inner = x0;
    for (long k = 0; k < n; ++k) {
        Rational ak = a(k);
        if (ak.is_zero()) throw ZeroCoefficient(k);
        prefix *= ak;
        inner += prefix.reciprocal() * b(k);
    }
    return prefix * inner;
}

}  // namespace cbseries
