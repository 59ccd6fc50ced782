#include "ghecke/cyclo.hpp"
#include "ghecke/random_gen.hpp"

#include <doctest.h>

using namespace ghk;

TEST_CASE("zeta powers reduce canonically") {
    CHECK(Cyclo::zeta_pow(4, 1) * Cyclo::zeta_pow(4, 1) == Cyclo(-1));
    CHECK(Cyclo::zeta_pow(4, 2) == Cyclo(-1));
    for (int r : {1, 2, 3, 4, 5, 6, 8, 12}) CHECK(Cyclo::zeta_pow(r, 0) == Cyclo::one(r));
    CHECK(Cyclo::zeta_pow(3, 1) + Cyclo::zeta_pow(3, 2) == Cyclo(-1));
    CHECK(Cyclo::zeta_pow(5, 7) == Cyclo::zeta_pow(5, 2));
    CHECK(Cyclo::zeta_pow(6, -1) == Cyclo::zeta_pow(6, 5));
}

TEST_CASE("root order zero is rejected") {
    CHECK_THROWS_AS(Cyclo::zeta_pow(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(Cyclo::zero(0), std::invalid_argument);
}

TEST_CASE("root power sums") {
    // sum_m zeta^{m d} is 0 unless r | d, in which case it is r
    for (int r : {2, 3, 4, 6}) {
        for (int d = 0; d < 2 * r; ++d) {
            Cyclo s = Cyclo::zero(r);
            for (int m = 0; m < r; ++m) s += Cyclo::zeta_pow(r, m * d);
            if (d % r == 0)
                CHECK(s == Cyclo(r));
            else
                CHECK(s.is_zero());
        }
    }
}

TEST_CASE("inversion") {
    CHECK(Cyclo::zeta_pow(4, 1).inverse() == -Cyclo::zeta_pow(4, 1));
    CHECK(Cyclo::zeta_pow(3, 1) * Cyclo::zeta_pow(3, 2) == Cyclo::one(3));
    CHECK_THROWS_AS(Cyclo::zero(5).inverse(), division_by_zero);
    Cyclo q = Cyclo::rational(1, Rational(3, 7));
    CHECK(q / q == Cyclo(1));
}

TEST_CASE("mixed orders: rationals embed, genuine mismatch throws") {
    CHECK(Cyclo::rational(3, Rational(2)) + Cyclo(1) == Cyclo::rational(3, Rational(3)));
    CHECK(Cyclo::zeta_pow(4, 1) * Cyclo(2) == Cyclo::zeta_pow(4, 1) + Cyclo::zeta_pow(4, 1));
    CHECK_THROWS_AS(Cyclo::zeta_pow(3, 1) + Cyclo::zeta_pow(4, 1), field_mismatch);
}

TEST_CASE("field axioms fuzz, exact equality") {
    RandomSource rnd(20240811);
    for (int r = 1; r <= 8; ++r) {
        for (int it = 0; it < 1000; ++it) {
            Cyclo a = rnd.cyclo(r), b = rnd.cyclo(r), c = rnd.cyclo(r);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) REQUIRE(a * a.inverse() == Cyclo::one(r));
        }
    }
}

TEST_CASE("zeta_pow(r,e)^r = 1") {
    for (int r = 1; r <= 10; ++r)
        for (int e = 0; e < r; ++e) CHECK(Cyclo::zeta_pow(r, e).pow(r) == Cyclo::one(r));
}

TEST_CASE("text round trip") {
    RandomSource rnd(7);
    for (int r : {1, 2, 3, 4, 5, 6, 8}) {
        for (int it = 0; it < 50; ++it) {
            Cyclo a = rnd.cyclo(r);
            CHECK(Cyclo::parse(r, a.str()) == a);
        }
    }
    CHECK(Cyclo::parse(4, "-1/2 + 3*z") == Cyclo::rational(4, Rational(-1, 2)) + Cyclo(3) * Cyclo::zeta_pow(4, 1));
    CHECK(Cyclo::parse(3, "z^2+1") == Cyclo::zeta_pow(3, 2) + Cyclo::one(3));
    CHECK(Cyclo::parse(2, "2/3") == Cyclo::rational(2, Rational(2, 3)));
    CHECK_THROWS_AS(Cyclo::parse(3, "1..2"), std::invalid_argument);
    CHECK_THROWS_AS(Cyclo::parse(3, "1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Cyclo::parse(3, ""), std::invalid_argument);
}

TEST_CASE("r = 1 and r = 2 collapse to plain rationals") {
    CHECK(totient(1) == 1);
    CHECK(totient(2) == 1);
    CHECK(Cyclo::zeta_pow(1, 1) == Cyclo(1));
    CHECK(Cyclo::zeta_pow(2, 1) == Cyclo(-1));
    CHECK(Cyclo::zeta_pow(2, 1).is_rational());
}
