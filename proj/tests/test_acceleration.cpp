#include <doctest.h>

#include <vector>

#include <cbseries/acceleration.hpp>
#include <cbseries/catalog.hpp>
#include <cbseries/verify.hpp>

using namespace cbseries;

TEST_CASE("wynn epsilon: constant sequence returns the constant") {
    BigFloat s = BigFloat::of_rational(Rational(7, 3), 30);
    std::vector<BigFloat> sums(5, s);
    CHECK(wynn_epsilon(sums) == s);
    CHECK_THROWS_AS(wynn_epsilon(std::vector<BigFloat>(4, s)), DomainError);
}

TEST_CASE("wynn epsilon: alternating harmonic series to ln 2") {
    const int wd = 30;
    std::vector<BigFloat> sums;
    BigFloat acc = BigFloat::of_long(0, wd);
    for (long n = 1; n <= 20; ++n) {
        BigFloat t = BigFloat::of_rational(Rational(1, n), wd);
        acc += (n % 2) ? t : -t;
        sums.push_back(acc);
    }
    BigFloat est = wynn_epsilon(sums);
    CHECK((est - const_ln2(40)).abs() < BigFloat::of_string("1e-10", 8));
}

TEST_CASE("wynn epsilon is essentially exact on geometric partial sums") {
    const int wd = 30;
    for (Rational q : {Rational(1, 2), Rational(-1, 2), Rational(1, 3), Rational(-2, 5),
                       Rational(1, 10)}) {
        std::vector<BigFloat> sums;
        Rational acc(0), power(1);
        for (int n = 0; n < 10; ++n) {
            acc += power;
            power *= q;
            sums.push_back(BigFloat::of_rational(acc, wd));
        }
        BigFloat limit = BigFloat::of_rational((Rational(1) - q).reciprocal(), wd);
        CHECK((wynn_epsilon(sums) - limit).abs() < BigFloat::of_string("1e-15", 8));
    }
}

TEST_CASE("engine policy recovers 3 - 2 sqrt2 from a 2000-term budget") {
    // Raw epsilon across consecutive partial sums of this monotone n^-2
    // series stalls near 1e-5; the engine instead hands the table the
    // partial sums at dyadic term counts, whose remainders are geometric
    // in 2^-j, and clears 8 digits well inside the same budget.
    const SeriesIdentity* ident = Catalog::instance().find_series("thm-kunle1");
    REQUIRE(ident != nullptr);
    const int wd = 60;
    TermStream stream(ident->shape({{"r", 0}}), ident->start_index, wd);
    auto sum = detail::sum_series(stream, BigFloat::of_string("1e-9", 30), 2000, wd);
    BigFloat exact = eval_constvec(ConstVec{{ConstName::ONE, Rational(3)},
                                            {ConstName::SQRT2, Rational(-2)}},
                                   wd);
    CHECK(sum.terms_used <= 2000);
    CHECK((sum.estimate - exact).abs() < BigFloat::of_string("1e-8", 8));
}

TEST_CASE("tail_fit: exact power laws") {
    const int wd = 40;
    auto window_of = [&](auto term, long N, int w) {
        std::vector<BigFloat> out;
        for (long n = N - w + 1; n <= N; ++n) out.push_back(term(n));
        return out;
    };

    SUBCASE("1/n^2 at N = 1000") {
        auto term = [&](long n) {
            return BigFloat::of_rational(Rational(1, n), wd) * BigFloat::of_rational(Rational(1, n), wd);
        };
        TailFit fit = tail_fit(window_of(term, 1000, 8), 1000);
        CHECK((fit.alpha - BigFloat::of_long(2, wd)).abs() < BigFloat::of_string("1e-6", 8));
        // bracket oracle: 1/(N+1) < sum_{n>N} 1/n^2 < 1/N
        CHECK(fit.tail > BigFloat::of_rational(Rational(1, 1001), wd) -
                             BigFloat::of_string("1e-5", 8));
        CHECK(fit.tail < BigFloat::of_rational(Rational(1, 999), wd));
        CHECK(fit.confidence_width >= BigFloat::of_long(0, 8));
    }

    SUBCASE("1/n^4 at N = 100: remainder is about N^-3/3") {
        auto term = [&](long n) {
            Rational nn(n);
            return BigFloat::of_rational((nn * nn * nn * nn).reciprocal(), wd);
        };
        TailFit fit = tail_fit(window_of(term, 100, 8), 100);
        CHECK((fit.alpha - BigFloat::of_long(4, wd)).abs() < BigFloat::of_string("1e-4", 8));
        BigFloat approx = BigFloat::of_rational(Rational(1, 3000000), wd);
        CHECK((fit.tail - approx).abs() < approx * BigFloat::of_rational(Rational(1, 20), 8));
    }

    SUBCASE("1/n sits on the divergence boundary") {
        auto term = [&](long n) { return BigFloat::of_rational(Rational(1, n), wd); };
        CHECK_THROWS_AS(tail_fit(window_of(term, 500, 8), 500), DecayTooSlow);
    }
}
