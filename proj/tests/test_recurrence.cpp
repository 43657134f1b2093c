#include <doctest.h>

#include <memory>
#include <random>

#include <cbseries/closed_forms.hpp>
#include <cbseries/quadrature.hpp>
#include <cbseries/recurrence.hpp>

using namespace cbseries;

namespace {

ConstVec random_state(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 5), pick(0, 8), count(0, 2);
    ConstVec v;
    long k = count(rng);
    for (long i = 0; i <= k; ++i)
        v += ConstVec::from(kConstBasis[pick(rng)], Rational(num(rng), den(rng)));
    return v;
}

Rational random_nonzero(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(1, 5), den(1, 5), sign(0, 1);
    Rational q(num(rng), den(rng));
    return sign(rng) ? -q : q;
}

}  // namespace

TEST_CASE("identity and geometric recurrences") {
    ConstVec v{{ConstName::PI, Rational(3, 7)}, {ConstName::ONE, Rational(-2)}};
    RecurrenceSpec identity{[](long) { return Rational(1); }, [](long) { return Rational(1); },
                            [](long) { return ConstVec(); }, v};
    CHECK(solve_closed(identity, 17) == v);
    CHECK(solve_iterative(identity, 5) == v);
    CHECK(solve_closed(identity, 0) == v);

    Rational q(2, 3);
    RecurrenceSpec geometric{[](long) { return Rational(1); }, [q](long) { return q; },
                             [](long) { return ConstVec(); }, ConstVec::from(Rational(1))};
    Rational q10(1);
    for (int i = 0; i < 10; ++i) q10 *= q;
    CHECK(solve_closed(geometric, 10) == ConstVec::from(q10));
}

TEST_CASE("affine form: trivial and binary-counter cases") {
    auto zero = [](long) { return ConstVec(); };
    ConstVec x0 = ConstVec::from(ConstName::LN2, Rational(4, 9));
    for (long n = 0; n <= 5; ++n)
        CHECK(solve_affine_form(x0, [](long) { return Rational(1); }, zero, n) == x0);

    // x_{n+1} = 2 x_n + 1 from 0: x_4 = 2^4 - 1
    ConstVec x4 = solve_affine_form(ConstVec(), [](long) { return Rational(2); },
                                    [](long) { return ConstVec::from(Rational(1)); }, 4);
    CHECK(x4 == ConstVec::from(Rational(15)));
}

TEST_CASE("the phi-even recurrence reproduces phi(2) and the quadrature oracle") {
    // (m+1) I(m) = (1/2 - m) I(m-1) + sqrt2, z0 = I(0) = sqrt2/2 + ln(1+sqrt2)/2
    RecurrenceSpec spec{[](long m) { return Rational(m + 1); },
                        [](long m) { return Rational(1, 2) - Rational(m); },
                        [](long) { return ConstVec::from(ConstName::SQRT2, Rational(1)); },
                        ConstVec{{ConstName::SQRT2, Rational(1, 2)},
                                 {ConstName::LN_1P_SQRT2, Rational(1, 2)}}};
    ConstVec phi2 = solve_closed(spec, 1);
    CHECK(phi2 == phi_even(1));

    const int wd = 50;
    auto f = [&](const BigFloat& t) { return t * t * sqrt(BigFloat::of_long(1, wd) + t * t); };
    auto quad = tanh_sinh_integrate(f, BigFloat::of_long(0, wd), BigFloat::of_long(1, wd), 40);
    CHECK((eval_constvec(phi2, 50) - quad.value).abs() < BigFloat::of_string("1e-30", 8));

    for (long n = 2; n <= 12; ++n) CHECK(solve_closed(spec, n) == phi_even(n));
}

TEST_CASE("the wp recurrence from its iterative form matches the closed branch") {
    // wp(2n) = (2n-1)/(2n) wp(2n-2) + 1/(2n)^2, z0 = wp(0) = pi^2/8
    RecurrenceSpec spec{[](long) { return Rational(1); },
                        [](long k) { return Rational(2 * k - 1, 2 * k); },
                        [](long k) { return ConstVec::from(Rational(1, 4 * k * k)); },
                        ConstVec::from(ConstName::PI_SQ, Rational(1, 8))};
    for (long n = 0; n <= 15; ++n) {
        CHECK(solve_iterative(spec, n) == wp_integral(2 * n));
        CHECK(solve_closed(spec, n) == wp_integral(2 * n));
    }
}

TEST_CASE("closed and iterative solutions coincide exactly on random specs") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 30; ++trial) {
        auto a_tab = std::make_shared<std::vector<Rational>>();
        auto b_tab = std::make_shared<std::vector<Rational>>();
        auto r_tab = std::make_shared<std::vector<ConstVec>>();
        for (int k = 0; k <= 60; ++k) {
            a_tab->push_back(random_nonzero(rng));
            b_tab->push_back(random_nonzero(rng));
            r_tab->push_back(random_state(rng));
        }
        RecurrenceSpec spec{[a_tab](long k) { return (*a_tab)[k]; },
                            [b_tab](long k) { return (*b_tab)[k]; },
                            [r_tab](long k) { return (*r_tab)[k]; }, random_state(rng)};
        long n = 30 + (trial % 31);
        CHECK(solve_closed(spec, n) == solve_iterative(spec, n));

        // affine transcription: a_aff(k) = b(k+1)/a(k+1), b_aff(k) = r(k+1)/a(k+1)
        ConstVec affine = solve_affine_form(
            spec.z0, [&spec](long k) { return spec.b(k + 1) / spec.a(k + 1); },
            [&spec](long k) { return spec.a(k + 1).reciprocal() * spec.r(k + 1); }, n);
        CHECK(affine == solve_closed(spec, n));
    }
}

TEST_CASE("vanishing coefficients are reported with their index") {
    RecurrenceSpec spec{[](long k) { return Rational(k == 3 ? 0 : 1); },
                        [](long) { return Rational(1); }, [](long) { return ConstVec(); },
                        ConstVec::from(Rational(1))};
    CHECK_THROWS_AS(solve_closed(spec, 5), ZeroCoefficient);
    CHECK_THROWS_AS(solve_iterative(spec, 5), ZeroCoefficient);
    try {
        solve_closed(spec, 5);
    } catch (const ZeroCoefficient& e) {
        CHECK(e.index == 3);
    }
}

TEST_CASE("advancing the solver one step costs O(1) rational multiplications") {
    RecurrenceSpec spec{[](long k) { return Rational(k + 1); },
                        [](long k) { return Rational(1, 2) - Rational(k); },
                        [](long) { return ConstVec::from(ConstName::SQRT2, Rational(1)); },
                        ConstVec::from(ConstName::SQRT2, Rational(1, 2))};
    ClosedFormSolver solver(spec);
    solver.value_at(50);
    long ops_at_50 = solver.rational_mults();
    solver.value_at(51);
    long delta = solver.rational_mults() - ops_at_50;
    CHECK(delta <= 8);
    CHECK_THROWS_AS(solver.value_at(10), DomainError);  // forward-only cache
}
