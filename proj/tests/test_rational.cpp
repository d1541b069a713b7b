#include <catch2/catch_amalgamated.hpp>

#include "supalg/rational.hpp"

using namespace supalg;

TEST_CASE("make_rational canonicalizes") {
  REQUIRE(make_rational(2, 4) == make_rational(1, 2));
  REQUIRE(to_string(make_rational(2, 4)) == "1/2");
  REQUIRE(to_string(make_rational(3, -6)) == "-1/2");
  REQUIRE(to_string(make_rational(-3, -6)) == "1/2");
  REQUIRE(to_string(make_rational(0, 7)) == "0");
  REQUIRE(to_string(make_rational(6, 3)) == "2");
}

TEST_CASE("to_string canonical forms") {
  REQUIRE(to_string(Rational(0)) == "0");
  REQUIRE(to_string(Rational(5)) == "5");
  REQUIRE(to_string(Rational(-5)) == "-5");
  REQUIRE(to_string(make_rational(-3, 7)) == "-3/7");
  REQUIRE(to_string(make_rational(22, 7)) == "22/7");
  // Integers never render a denominator.
  REQUIRE(to_string(make_rational(3, 1)) == "3");
}

TEST_CASE("parse_rational accepts canonical text") {
  REQUIRE(parse_rational("0") == 0);
  REQUIRE(parse_rational("7") == 7);
  REQUIRE(parse_rational("-7") == -7);
  REQUIRE(parse_rational("1/2") == make_rational(1, 2));
  REQUIRE(parse_rational("-3/7") == make_rational(-3, 7));
  REQUIRE(parse_rational("123/457") == make_rational(123, 457));
  REQUIRE(parse_rational("100") == 100);
  // A denominator of one is in lowest terms and therefore legal input,
  // even though the serializer never produces it.
  REQUIRE(parse_rational("3/1") == 3);
}

TEST_CASE("parse_rational rejects non-canonical text") {
  const char* bad[] = {"",    "-0",  "00",   "01",  "1/0",  "2/4",   "1/-2", "+1",
                       " 1",  "1 ",  "1/",   "/2",  "a",    "1/2/3", "-",    "1.5",
                       "0/2", "--1", "-1/0", "3/03"};
  for (const char* text : bad) {
    INFO("input: \"" << text << "\"");
    REQUIRE_THROWS_AS(parse_rational(text), ParseError);
  }
}

TEST_CASE("parse and print round trip") {
  for (const char* text : {"0", "1", "-1", "22/7", "-22/7", "1000000007", "5/1000000007"}) {
    REQUIRE(to_string(parse_rational(text)) == text);
  }
}

TEST_CASE("arithmetic stays exact") {
  const Rational third = make_rational(1, 3);
  const Rational sixth = make_rational(1, 6);
  REQUIRE(third + sixth == make_rational(1, 2));
  REQUIRE(third * 3 == 1);
  Rational big = 1;
  for (int i = 0; i < 40; ++i) big *= make_rational(10, 3);
  REQUIRE(to_string(big).find('/') != std::string::npos);
  REQUIRE(big * Rational(0) == 0);
}
