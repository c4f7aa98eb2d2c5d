#include <catch_amalgamated.hpp>

#include "jamesloop/errors.hpp"
#include "jamesloop/rational.hpp"
#include "support.hpp"

using namespace jamesloop;
using testing::R;

TEST_CASE("rationals parse in all accepted spellings")
{
    CHECK(parse_rational("1/3") == Rational(1, 3));
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-0") == Rational(0));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-1.5") == Rational(-3, 2));
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK(parse_rational("010") == Rational(10));
    CHECK(parse_rational("07/010") == Rational(7, 10));
    CHECK(parse_rational("0.95") == Rational(19, 20));
    CHECK(parse_rational("00") == Rational(0));
}

TEST_CASE("canonical text form")
{
    CHECK(format_rational(R("6/8")) == "3/4");
    CHECK(format_rational(R("4/2")) == "2");
    CHECK(format_rational(R("-0.75")) == "-3/4");
    CHECK(format_rational(R("0")) == "0");
    for (const char* text : {"1/3", "-5/7", "12", "0"})
        CHECK(format_rational(parse_rational(text)) == text);
}

TEST_CASE("malformed rationals are rejected")
{
    for (const char* text : {"", "1/0", "a", "1/", "/2", "1.2.3", "1/-2", "0x10", "1e3", "--1", " 1"})
        CHECK_THROWS_AS(parse_rational(text), ParseError);
}
