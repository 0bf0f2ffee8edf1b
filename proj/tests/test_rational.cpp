#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "sobolev2d/rational.hpp"

using sobolev2d::Rational;
using testing::q;

TEST_CASE("rational parsing")
{
    CHECK(q("3") == Rational(3));
    CHECK(q("-6/4") == Rational(-3, 2));
    CHECK(q("0.25") == Rational(1, 4));
    CHECK(q("-1.5e2") == Rational(-150));
    CHECK(q("2.5E-1") == Rational(1, 4));
    CHECK(q(" 7/3 ") == Rational(7, 3));
    CHECK_THROWS_AS(q("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(q("abc"), std::invalid_argument);
    CHECK_THROWS_AS(q(""), std::invalid_argument);
    CHECK_THROWS_AS(q("1/2/3"), std::invalid_argument);
}

TEST_CASE("canonical strings are reduced with the sign on the numerator")
{
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(10, 5).str() == "2");
    CHECK(Rational(0, 7).str() == "0");
    for (const char* s : {"-3/2", "2", "0", "17/96", "-1"}) CHECK(q(s).str() == s);
}

TEST_CASE("decimal rendering")
{
    CHECK(Rational(-1, 2).to_decimal(17) == "-0.5");
    CHECK(Rational(0).to_decimal(5) == "0");
    CHECK(Rational(1, 3).to_decimal(5) == "0.33333");
    CHECK(Rational(2, 3).to_decimal(3) == "0.667");
    CHECK(Rational(-2, 3).to_decimal(3) == "-0.667");
    CHECK(Rational(1, 8).to_decimal(2) == "0.13");
    CHECK(Rational(123456).to_decimal(3) == "123000");
    CHECK(Rational(1, 1000).to_decimal(4) == "0.001");
    CHECK_THROWS_AS(Rational(1).to_decimal(0), std::invalid_argument);
}

TEST_CASE("arithmetic and ordering")
{
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK(-Rational(2, 3) == Rational(-2, 3));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("pochhammer")
{
    CHECK(pochhammer(Rational(3), 0) == Rational(1));
    CHECK(pochhammer(Rational(1), 5) == Rational(120));
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(pochhammer(Rational(-2), 3) == Rational(0));
}
