#include <catch2/catch.hpp>

#include "coinduel/rational.hpp"

using coinduel::BigInt;
using coinduel::Rational;

TEST_CASE("BigInt arithmetic and formatting", "[rational]") {
    BigInt a(123456789l), b(987654321l);
    CHECK((a * b).to_string() == "121932631112635269");
    CHECK((a + b).to_string() == "1111111110");
    CHECK(BigInt::pow(3, 39).to_string() == "4052555153018976267");
    CHECK(BigInt(0l).is_zero());
    CHECK(BigInt("-42").sign() == -1);
    CHECK_THROWS_AS(BigInt("12x"), std::invalid_argument);

    BigInt acc = 10;
    acc.add_mul(BigInt(7l), 6);  // 10 + 42
    CHECK(acc == BigInt(52l));
}

TEST_CASE("Rational canonical form", "[rational]") {
    Rational r(6, -9);
    CHECK(r.numerator() == BigInt(-2l));
    CHECK(r.denominator() == BigInt(3l));
    CHECK(r.to_fraction_string() == "-2/3");
    CHECK(Rational(4, 2) == Rational(2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("Rational arithmetic stays exact", "[rational]") {
    const Rational third(1, 3);
    Rational sum = third + third + third;
    CHECK(sum == Rational(1));
    CHECK((Rational(5, 27) * Rational(27, 5)) == Rational(1));
    CHECK((Rational(1, 3) - Rational(1, 4)) == Rational(1, 12));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("Rational decimal parsing", "[rational]") {
    CHECK(Rational::from_decimal("0.05") == Rational(1, 20));
    CHECK(Rational::from_decimal("-0.25") == Rational(-1, 4));
    CHECK(Rational::from_decimal(".5") == Rational(1, 2));
    CHECK(Rational::from_decimal("3") == Rational(3));
    CHECK(Rational::from_decimal("5/27") == Rational(5, 27));
    CHECK(Rational::from_decimal("10/4") == Rational(5, 2));
    CHECK_THROWS_AS(Rational::from_decimal("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_decimal("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_decimal(""), std::invalid_argument);
}

TEST_CASE("Rational to_double at the output boundary", "[rational]") {
    CHECK(Rational(1, 3).to_double() == Approx(1.0 / 3.0).margin(1e-16));
    CHECK(Rational(5, 27).to_decimal_string() == "0.185185185185185");
}
