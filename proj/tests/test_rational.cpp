#include <doctest.h>

#include "reals/rational.hpp"

#include <random>

using reals::Int;
using reals::PositiveRational;
using reals::Rational;

TEST_CASE("normalization produces canonical form") {
    CHECK(Rational(Int(2), Int(4)) == Rational(Int(1), Int(2)));
    CHECK(Rational(Int(3), Int(-6)) == Rational(Int(-1), Int(2)));
    CHECK(Rational(Int(0), Int(7)).numerator() == 0);
    CHECK(Rational(Int(0), Int(7)).denominator() == 1);
    CHECK(Rational(Int(-4), Int(-8)) == Rational(Int(1), Int(2)));
    CHECK(Rational(Int(2), Int(4)).denominator() > 0);
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::domain_error);
    CHECK_THROWS_AS(Rational(3) / Rational(0), std::domain_error);
}

TEST_CASE("field operations are exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 6) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(-5, 7) == Rational(5, 7));
    CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
}

TEST_CASE("comparison is the rational order") {
    CHECK(Rational(2, 3) < Rational(3, 4));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(1, 2) == Rational(2, 4));
    CHECK(Rational(7, 5) > Rational(4, 3));
}

TEST_CASE("normalization is idempotent and equality is representational") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        long n = static_cast<long>(rng() % 2001) - 1000;
        long d = static_cast<long>(rng() % 999) + 1;
        if (rng() % 2) d = -d;
        auto r = Rational(Int(n), Int(d));
        Rational again(r.numerator(), r.denominator());
        CHECK(again.numerator() == r.numerator());
        CHECK(again.denominator() == r.denominator());
        CHECK(boost::multiprecision::gcd(
                  r.numerator() < 0 ? Int(-r.numerator()) : r.numerator(),
                  r.denominator()) <= 1);
    }
}

TEST_CASE("algebraic laws hold on random samples") {
    std::mt19937_64 rng(11);
    auto pick = [&]() {
        long n = static_cast<long>(rng() % 201) - 100;
        long d = static_cast<long>(rng() % 30) + 1;
        return Rational(Int(n), Int(d));
    };
    for (int i = 0; i < 300; ++i) {
        Rational a = pick(), b = pick(), c = pick();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!b.is_zero()) CHECK(a / b * b == a);
        // order is total and transitive
        CHECK(((a < b) + (b < a) + (a == b)) == 1);
        if (a < b && b < c) CHECK(a < c);
    }
}

TEST_CASE("floor rounds toward negative infinity") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(6, 3).floor() == 2);
    CHECK(Rational(-6, 3).floor() == -2);
    CHECK(Rational(0).floor() == 0);
}

TEST_CASE("pow2 covers both directions") {
    CHECK(Rational::pow2(0) == Rational(1));
    CHECK(Rational::pow2(5) == Rational(32));
    CHECK(Rational::pow2(-3) == Rational(1, 8));
    CHECK(Rational::pow2(-20) == Rational(Int(1), Int(1048576)));
}

TEST_CASE("dyadic detection") {
    CHECK(Rational(3, 8).is_dyadic());
    CHECK(Rational(5).is_dyadic());
    CHECK(Rational(0).is_dyadic());
    CHECK(!Rational(1, 3).is_dyadic());
    CHECK(!Rational(5, 6).is_dyadic());
}

TEST_CASE("text round trips") {
    CHECK(Rational(1, 2).to_string() == "1/2");
    CHECK(Rational(-3, 4).to_string() == "-3/4");
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational::from_string("3/4") == Rational(3, 4));
    CHECK(Rational::from_string("-2") == Rational(-2));
    CHECK(Rational::from_string("0.25") == Rational(1, 4));
    CHECK(Rational::from_string("-1.5") == Rational(-3, 2));
    CHECK(Rational::from_string(".5") == Rational(1, 2));
    CHECK(Rational::from_string("+7/14") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::from_string("1.2.3"), std::invalid_argument);
}

TEST_CASE("decimal rendering rounds to nearest") {
    CHECK(Rational(1, 3).to_decimal(6) == "0.333333");
    CHECK(Rational(2, 3).to_decimal(6) == "0.666667");
    CHECK(Rational(-2, 3).to_decimal(3) == "-0.667");
    CHECK(Rational(1, 2).to_decimal(1) == "0.5");
    CHECK(Rational(1, 2).to_decimal(0) == "1");  // ties away from zero
    CHECK(Rational(5).to_decimal(2) == "5.00");
    CHECK(Rational(-1, 8).to_decimal(3) == "-0.125");
    CHECK(Rational(0).to_decimal(4) == "0.0000");
}

TEST_CASE("decimal rendering is within half an ulp") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        long n = static_cast<long>(rng() % 20001) - 10000;
        long d = static_cast<long>(rng() % 999) + 1;
        auto r = Rational(Int(n), Int(d));
        unsigned digits = static_cast<unsigned>(rng() % 8);
        Rational printed = Rational::from_string(r.to_decimal(digits));
        Rational ulp(Int(1), [&] {
            Int p(1);
            for (unsigned j = 0; j < digits; ++j) p *= 10;
            return p;
        }());
        CHECK(abs(printed - r) * 2 <= ulp);
    }
}

TEST_CASE("positive rationals enforce positivity") {
    CHECK_THROWS_AS(PositiveRational(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(PositiveRational(Rational(-1, 2)), std::domain_error);
    PositiveRational e(1, 4);
    CHECK(e.half().value() == Rational(1, 8));
    CHECK((e + e).value() == Rational(1, 2));
    CHECK(PositiveRational::pow2(-2).value() == Rational(1, 4));
}
