#include <doctest.h>

#include <random>

#include <cbseries/combinatorics.hpp>
#include <cbseries/rational.hpp>

using namespace cbseries;

TEST_CASE("rationals are stored reduced with positive denominator") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(6, 4).num() == 3);
    CHECK(Rational(6, 4).den() == 2);
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(2, -4).den() == 2);
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational::parse("-10/15") == Rational(-2, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(1).reciprocal() / Rational(0), DomainError);
}

TEST_CASE("binomial: small cases and the outside-range convention") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
}

TEST_CASE("central binomial coefficient") {
    CHECK(central_binomial(0) == 1);
    CHECK(central_binomial(3) == 20);
    // oracle: direct factorial evaluation (2n)!/(n!)^2
    for (unsigned long n : {1ul, 5ul, 10ul, 37ul}) {
        Integer direct = factorial(2 * n) / (factorial(n) * factorial(n));
        CHECK(central_binomial(n) == direct);
    }
    CHECK(central_binomial(10) == 184756);
}

TEST_CASE("pochhammer: base cases and the quarter-pair product") {
    CHECK(pochhammer(Rational(7, 3), 0) == Rational(1));
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
    // (1/4)_n (3/4)_n / (n!)^2 = C(4n,2n) C(2n,n) / 4^{3n} at n = 1
    Rational lhs = pochhammer(Rational(1, 4), 1) * pochhammer(Rational(3, 4), 1);
    CHECK(lhs == Rational(3, 16));
    CHECK(Rational(binomial(4, 2) * binomial(2, 1), 64) == Rational(3, 16));
}

TEST_CASE("(1/2)_n / n! = C(2n,n) / 4^n for n <= 200") {
    for (unsigned long n = 0; n <= 200; ++n) {
        Rational lhs = pochhammer(Rational(1, 2), n) / Rational(factorial(n));
        Rational rhs = Rational(central_binomial(n), pow2(2 * n));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("prod_j (j/p)_n = (pn)! / p^{pn} for p <= 6, n <= 25") {
    for (unsigned long p = 1; p <= 6; ++p) {
        for (unsigned long n = 0; n <= 25; ++n) {
            Rational prod(1);
            for (unsigned long j = 1; j <= p; ++j) prod *= pochhammer(Rational(j, p), n);
            CHECK(prod == Rational(factorial(p * n), ipow(p, p * n)));
        }
    }
}

TEST_CASE("C(2n+2r,n+r) = 4^r (n+1/2)_r / (n+1)_r C(2n,n) for n <= 30, r <= 15") {
    for (long n = 0; n <= 30; ++n) {
        for (unsigned long r = 0; r <= 15; ++r) {
            Rational rhs = Rational(pow2(2 * r)) * pochhammer(Rational(2 * n + 1, 2), r) /
                           pochhammer(Rational(n + 1), r) * Rational(central_binomial(n));
            CHECK(Rational(central_binomial(n + r)) == rhs);
        }
    }
}

TEST_CASE("pochhammer splits as (x)_{m+n} = (x)_m (x+m)_n") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9), len(0, 20);
    for (int trial = 0; trial < 50; ++trial) {
        Rational x(num(rng), den(rng));
        unsigned long m = len(rng), n = len(rng);
        Rational split = pochhammer(x, m) * pochhammer(x + Rational(m), n);
        CHECK(pochhammer(x, m + n) == split);
    }
}
