#include <doctest.h>

#include <cbseries/bigfloat.hpp>
#include <cbseries/constants.hpp>

using namespace cbseries;

namespace {

BigFloat tol_at(int digits, int slack) {
    return BigFloat::of_string("1e" + std::to_string(slack - digits), 30);
}

// Independent sqrt2 oracle: Newton iteration on x^2 - 2 in exact rational
// arithmetic; seven steps from 3/2 square the error well past 40 digits.
Rational sqrt2_newton_oracle() {
    Rational x(3, 2);
    for (int i = 0; i < 7; ++i) x = (x + Rational(2) / x) / Rational(2);
    return x;
}

// Independent pi oracle: Machin's formula with exact rational arctan
// partial sums; the alternating tail bounds the truncation error.
Rational pi_machin_oracle(int terms) {
    auto atan_inv = [terms](long q) {
        Rational acc(0), power(1, q);
        Rational q2(q * q);
        for (int k = 0; k < terms; ++k) {
            Rational t = power / Rational(2 * k + 1);
            acc += (k % 2) ? -t : t;
            power /= q2;
        }
        return acc;
    };
    return Rational(16) * atan_inv(5) - Rational(4) * atan_inv(239);
}

// Independent ln(1+sqrt2) oracle: 2 atanh(u) at u = (y-1)/(y+1) with
// y = 1 + sqrt2 taken from the Newton oracle; u^2 < 0.18 so 60 terms give
// far more than 40 digits.
BigFloat ln1psqrt2_oracle(int digits) {
    Rational y = Rational(1) + sqrt2_newton_oracle();
    Rational u = (y - Rational(1)) / (y + Rational(1));
    Rational u2 = u * u, power = u, acc(0);
    for (int k = 0; k < 60; ++k) {
        acc += power / Rational(2 * k + 1);
        power *= u2;
    }
    return BigFloat::of_rational(Rational(2) * acc, digits);
}

}  // namespace

TEST_CASE("eval_const: ONE is exact, sqrt2 and ln(1+sqrt2) match their oracles") {
    CHECK(eval_const(ConstName::ONE, 30) == BigFloat::of_long(1, 30));

    BigFloat s2 = eval_const(ConstName::SQRT2, 30);
    CHECK(s2.str(30) == "1.41421356237309504880168872421");
    BigFloat oracle = BigFloat::of_rational(sqrt2_newton_oracle(), 40);
    CHECK((s2 - oracle).abs() < tol_at(30, 3));

    BigFloat l = eval_const(ConstName::LN_1P_SQRT2, 30);
    CHECK(l.str(30) == "0.88137358701954302523260932498");
    CHECK((l - ln1psqrt2_oracle(40)).abs() < tol_at(30, 3));
}

TEST_CASE("eval_const: pi against the Machin oracle, products against factors") {
    BigFloat p = eval_const(ConstName::PI, 30);
    CHECK((p - BigFloat::of_rational(pi_machin_oracle(30), 40)).abs() < tol_at(30, 3));

    BigFloat direct = eval_const(ConstName::PI_SQRT2, 40);
    BigFloat composed = eval_const(ConstName::PI, 50) * eval_const(ConstName::SQRT2, 50);
    CHECK((direct - composed).abs() < tol_at(40, 3));
    BigFloat pl = eval_const(ConstName::PI_LN2, 40);
    CHECK((pl - eval_const(ConstName::PI, 50) * eval_const(ConstName::LN2, 50)).abs() <
          tol_at(40, 3));
}

TEST_CASE("eval_constvec: frozen values and the empty vector") {
    ConstVec two_minus_sqrt2{{ConstName::ONE, Rational(2)}, {ConstName::SQRT2, Rational(-1)}};
    CHECK(eval_constvec(two_minus_sqrt2, 20).str(20) == "0.5857864376269049512");

    // pi^2/2048, the RHS of the first Theorem 5.0.2 example
    BigFloat v = eval_constvec(ConstVec::from(ConstName::PI_SQ, Rational(1, 2048)), 12);
    CHECK(v.str(12) == "0.00481914277397");
    BigFloat via_oracle = BigFloat::of_rational(pi_machin_oracle(20), 30);
    via_oracle = via_oracle * via_oracle / BigFloat::of_long(2048, 30);
    CHECK((v - via_oracle).abs() < tol_at(12, 2));

    CHECK(eval_constvec(ConstVec(), 30).is_zero());
}

TEST_CASE("elementary functions") {
    BigFloat one = BigFloat::of_long(1, 30);
    CHECK((elementary(Elem::Arcsin, one, 30) - const_pi(30).mul_2si(-1)).abs() < tol_at(30, 4));
    CHECK((elementary(Elem::Arctan, one, 30) - const_pi(30).mul_2si(-2)).abs() < tol_at(30, 4));

    BigFloat x = one + elementary(Elem::Sqrt, BigFloat::of_long(2, 40), 40);
    CHECK((elementary(Elem::Ln, x, 30) - eval_const(ConstName::LN_1P_SQRT2, 30)).abs() <
          tol_at(30, 4));

    CHECK_THROWS_AS(elementary(Elem::Arcsin, BigFloat::of_rational(Rational(3, 2), 30), 30),
                    DomainError);
    CHECK_THROWS_AS(elementary(Elem::Ln, BigFloat::of_long(-1, 30), 30), DomainError);
    CHECK_THROWS_AS(elementary(Elem::Sqrt, BigFloat::of_long(-2, 30), 30), DomainError);
}

TEST_CASE("eval_constvec is Q-linear") {
    ConstVec a{{ConstName::PI, Rational(2, 3)}, {ConstName::LN2, Rational(-1, 7)}};
    ConstVec b{{ConstName::SQRT2, Rational(5, 4)}, {ConstName::PI, Rational(1, 6)}};
    for (int digits : {20, 40, 60}) {
        Rational q(-3, 5);
        BigFloat lhs = eval_constvec(a + q * b, digits);
        BigFloat rhs = eval_constvec(a, digits) +
                       BigFloat::of_rational(q, digits) * eval_constvec(b, digits);
        CHECK((lhs - rhs).abs() < tol_at(digits, 4));
    }
}

TEST_CASE("doubling digits never increases the discrepancy") {
    // references at 100 digits stand in for the exact values
    ConstVec v{{ConstName::ONE, Rational(2)}, {ConstName::SQRT2, Rational(-1)}};
    BigFloat ref = eval_constvec(v, 100);
    BigFloat d30 = (eval_constvec(v, 30) - ref).abs();
    BigFloat d60 = (eval_constvec(v, 60) - ref).abs();
    CHECK(d60 <= d30);

    BigFloat pref = eval_const(ConstName::PI_LN_1P_SQRT2, 100);
    BigFloat p30 = (eval_const(ConstName::PI_LN_1P_SQRT2, 30) - pref).abs();
    BigFloat p60 = (eval_const(ConstName::PI_LN_1P_SQRT2, 60) - pref).abs();
    CHECK(p60 <= p30);
}
