#include "plogic/errors.hpp"
#include "plogic/rational.hpp"

#include <doctest.h>

using namespace plogic;

TEST_CASE("parse_rational handles integers, fractions and signs") {
    CHECK(parse_rational("0") == 0);
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-3") == -3);
    CHECK(parse_rational("+2") == 2);
    CHECK(parse_rational("1/2") == Rat(1, 2));
    CHECK(parse_rational("-4/6") == Rat(-2, 3));
    CHECK(parse_rational("10/5") == 2);
    CHECK(parse_rational("010") == 10);  // decimal, never octal
    CHECK(parse_rational("007/010") == Rat(7, 10));
}

TEST_CASE("parse_rational canonicalizes") {
    CHECK(rat_to_string(parse_rational("4/8")) == "1/2");
    CHECK(rat_to_string(parse_rational("-0")) == "0");
    CHECK(rat_to_string(parse_rational("3/1")) == "3");
    CHECK(rat_to_string(Rat(-1, 2)) == "-1/2");
}

TEST_CASE("parse_rational rejects garbage") {
    for (const char* bad : {"", "a", "1.5", "1/", "/2", "1/0", "--1", "1/-2", "1 2", "0x1"})
        CHECK_THROWS_AS(parse_rational(bad), Error);
    try {
        parse_rational("1/0");
        FAIL("zero denominator accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::bad_syntax);
    }
}

TEST_CASE("round trip through rat_to_string") {
    for (const char* s : {"0", "5", "-5", "1/2", "-7/3", "1000000000000000000000/7"})
        CHECK(rat_to_string(parse_rational(s)) == s);
}
