#include <doctest.h>

#include <random>

#include <cbseries/constants.hpp>

using namespace cbseries;

namespace {

ConstVec random_vec(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9), pick(0, 8), count(0, 3);
    ConstVec v;
    long k = count(rng);
    for (long i = 0; i < k; ++i)
        v += ConstVec::from(kConstBasis[pick(rng)], Rational(num(rng), den(rng)));
    return v;
}

}  // namespace

TEST_CASE("addition cancels exactly and canonicalizes") {
    ConstVec a{{ConstName::ONE, Rational(2)}, {ConstName::SQRT2, Rational(-1)}};
    ConstVec b{{ConstName::SQRT2, Rational(1)}};
    ConstVec sum = a + b;
    CHECK(sum == ConstVec::from(Rational(2)));
    CHECK(sum.coeffs().size() == 1);  // cancelled coefficient is not stored

    ConstVec v{{ConstName::PI, Rational(1, 3)}};
    CHECK(ConstVec() + v == v);

    // B(0) + B(1) from the tabulated values 2 - sqrt2 and (8 - 5 sqrt2)/6
    ConstVec b0{{ConstName::ONE, Rational(2)}, {ConstName::SQRT2, Rational(-1)}};
    ConstVec b1{{ConstName::ONE, Rational(8, 6)}, {ConstName::SQRT2, Rational(-5, 6)}};
    ConstVec expect{{ConstName::ONE, Rational(20, 6)}, {ConstName::SQRT2, Rational(-11, 6)}};
    CHECK(b0 + b1 == expect);
}

TEST_CASE("rational scaling") {
    ConstVec v{{ConstName::ONE, Rational(11, 30)}, {ConstName::SQRT2, Rational(-7, 30)}};
    CHECK(Rational(0) * v == ConstVec());
    CHECK(Rational(1, 2) * ConstVec::from(ConstName::PI_SQ, Rational(1)) ==
          ConstVec::from(ConstName::PI_SQ, Rational(1, 2)));
    ConstVec scaled{{ConstName::ONE, Rational(11, 10)}, {ConstName::SQRT2, Rational(-7, 10)}};
    CHECK(Rational(3) * v == scaled);
}

TEST_CASE("vector space laws on random vectors") {
    std::mt19937_64 rng(77001);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        ConstVec a = random_vec(rng), b = random_vec(rng);
        Rational q(num(rng), den(rng));
        CHECK(a + b == b + a);
        CHECK(q * (a + b) == q * a + q * b);
        CHECK((a - a).is_zero());
        ConstVec sum = a + b;
        for (const auto& [name, coeff] : sum.coeffs()) CHECK(!coeff.is_zero());
    }
}

TEST_CASE("structural multiplication maps") {
    ConstVec v{{ConstName::ONE, Rational(3)}, {ConstName::SQRT2, Rational(-1, 2)}};
    ConstVec expect{{ConstName::ONE, Rational(-1)}, {ConstName::SQRT2, Rational(3)}};
    CHECK(v.times_sqrt2() == expect);
    CHECK_THROWS_AS(ConstVec::from(ConstName::PI, Rational(1)).times_sqrt2(), DomainError);

    ConstVec pis{{ConstName::PI, Rational(2)},
                 {ConstName::PI_SQ, Rational(1, 4)},
                 {ConstName::PI_SQRT2, Rational(-1)}};
    ConstVec down{{ConstName::ONE, Rational(2)},
                  {ConstName::PI, Rational(1, 4)},
                  {ConstName::SQRT2, Rational(-1)}};
    CHECK(pis.divided_by_pi() == down);
    CHECK_THROWS_AS(ConstVec::from(Rational(1)).divided_by_pi(), DomainError);
}

TEST_CASE("canonical text form") {
    CHECK(ConstVec().str() == "0");
    CHECK(ConstVec{{ConstName::ONE, Rational(2)}, {ConstName::SQRT2, Rational(-1)}}.str() ==
          "2 - sqrt2");
    CHECK(ConstVec{{ConstName::ONE, Rational(64, 60)}, {ConstName::SQRT2, Rational(-43, 60)}}.str() ==
          "(64 - 43*sqrt2)/60");
    CHECK(ConstVec{{ConstName::ONE, Rational(1, 4)}, {ConstName::PI_SQ, Rational(1, 16)}}.str() ==
          "(4 + pi^2)/16");
    CHECK(ConstVec::from(ConstName::PI_SQ, Rational(1, 2048)).str() == "pi^2/2048");
    CHECK(ConstVec{{ConstName::SQRT2, Rational(-3, 2)}, {ConstName::PI, Rational(5)}}.str() ==
          "(-3*sqrt2 + 10*pi)/2");
}
