#include <doctest.h>

#include "wishart/rational.hpp"

using wishart::Rational;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(-6, -4).str() == "3/2");
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(7, 1).str() == "7");
}

TEST_CASE("parse accepts integers, fractions, and exact decimals") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-42") == Rational(-42));
    CHECK(Rational::parse("7/3") == Rational(7, 3));
    CHECK(Rational::parse("-9/12") == Rational(-3, 4));
    CHECK(Rational::parse("0.1") == Rational(1, 10));
    CHECK(Rational::parse("-3.25") == Rational(-13, 4));
    CHECK(Rational::parse("1.5e-3") == Rational(3, 2000));
    CHECK(Rational::parse("2.5e2") == Rational(250));
    CHECK(Rational::parse("1.00000000000e+01") == Rational(10));
}

TEST_CASE("parse rejects garbage") {
    CHECK_THROWS_AS((void)Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS((void)Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS((void)Rational::parse("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS((void)Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS((void)Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("field arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 3) / Rational(2, 5) == Rational(5, 6));
    CHECK(-Rational(3, 7) == Rational(-3, 7));
    CHECK_THROWS_AS((void)(Rational(1) / Rational(0)), std::domain_error);
}

TEST_CASE("integer powers, including negative exponents") {
    CHECK(Rational(2, 3).pow_int(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow_int(-2) == Rational(9, 4));
    CHECK(Rational(5).pow_int(0) == Rational(1));
    CHECK(Rational(-2).pow_int(3) == Rational(-8));
    CHECK(Rational(0).pow_int(4) == Rational(0));
    CHECK_THROWS_AS((void)Rational(0).pow_int(-1), std::domain_error);
}

TEST_CASE("factorial") {
    CHECK(Rational::factorial(0) == Rational(1));
    CHECK(Rational::factorial(1) == Rational(1));
    CHECK(Rational::factorial(5) == Rational(120));
    CHECK(Rational::factorial(10) == Rational(3628800));
}

TEST_CASE("ordering and predicates") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(3) > Rational(2));
    CHECK(Rational(0).is_zero());
    CHECK(!Rational(1, 5).is_zero());
    CHECK(Rational(8, 4).is_integer());
    CHECK(!Rational(8, 3).is_integer());
    CHECK(Rational(-5).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(wishart::abs(Rational(-7, 2)) == Rational(7, 2));
}

TEST_CASE("float view is exact on dyadics") {
    CHECK(Rational(1, 4).to_double() == 0.25);
    CHECK(Rational(-3, 8).to_double() == -0.375);
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
}
