#include <doctest.h>

#include <cbseries/closed_forms.hpp>
#include <cbseries/quadrature.hpp>

using namespace cbseries;

namespace {

BigFloat agree_tol(int digits) {
    return BigFloat::of_string("1e-" + std::to_string(digits), 30);
}

}  // namespace

TEST_CASE("endpoint-singular integrand: int_0^{1/2} dt/sqrt(1-t) = 2 - sqrt2") {
    const int wd = 40;
    auto f = [&](const BigFloat& t) {
        return BigFloat::of_long(1, wd) / sqrt(BigFloat::of_long(1, wd) - t);
    };
    auto res = tanh_sinh_integrate(f, BigFloat::of_long(0, wd),
                                   BigFloat::of_rational(Rational(1, 2), wd), 30);
    BigFloat exact = eval_constvec(b_integral(0), 40);
    CHECK((res.value - exact).abs() < agree_tol(25));
    CHECK(res.error_estimate >= BigFloat::of_long(0, 8));
    CHECK(res.levels_used >= 2);
}

TEST_CASE("smooth integrand: int_0^1 t sqrt(1+t^2) dt = (2 sqrt2 - 1)/3") {
    const int wd = 40;
    auto f = [&](const BigFloat& t) {
        return t * sqrt(BigFloat::of_long(1, wd) + t * t);
    };
    auto res = tanh_sinh_integrate(f, BigFloat::of_long(0, wd), BigFloat::of_long(1, wd), 30);
    // antiderivative (1+t^2)^{3/2}/3
    BigFloat exact = eval_constvec(phi_odd(0), 40);
    CHECK(exact.str(30) == "0.609475708248730032534459149473");
    CHECK((res.value - exact).abs() < agree_tol(25));
}

TEST_CASE("trigonometric integrand: int_0^{pi/2} sin(x/2) dx = 2 - sqrt2") {
    const int wd = 40;
    auto f = [](const BigFloat& x) { return sin(x.mul_2si(-1)); };
    auto res = tanh_sinh_integrate(f, BigFloat::of_long(0, wd), const_pi(wd).mul_2si(-1), 30);
    CHECK((res.value - eval_constvec(k_integral(0), 40)).abs() < agree_tol(25));
}

TEST_CASE("oracle agreement with closed_B across k = 0..10 at 40 digits") {
    const int wd = 50;
    BigFloat zero = BigFloat::of_long(0, wd);
    BigFloat half = BigFloat::of_rational(Rational(1, 2), wd);
    BigFloat one = BigFloat::of_long(1, wd);
    for (long k = 0; k <= 10; ++k) {
        auto f = [&](const BigFloat& t) { return t.pow_si(k) / sqrt(one - t); };
        auto res = tanh_sinh_integrate(f, zero, half, 40);
        BigFloat exact = eval_constvec(b_integral(k), 50);
        CHECK((res.value - exact).abs() < agree_tol(30));
    }
}

TEST_CASE("a divergent integrand trips NonConvergence") {
    const int wd = 30;
    auto f = [&](const BigFloat& t) { return BigFloat::of_long(1, wd) / t; };
    CHECK_THROWS_AS(
        tanh_sinh_integrate(f, BigFloat::of_long(0, wd), BigFloat::of_long(1, wd), 20, 8),
        NonConvergence);
}
