#include "doctest.h"

#include <random>
#include <sstream>

#include "askey/rat.hpp"

using askey::Rat;

TEST_CASE("canonical form") {
  Rat r(6, -4);
  CHECK(r.str() == "-3/2");
  CHECK(r.denominator() == Rat(2));
  CHECK(Rat(4, 2).str() == "2");
  CHECK(Rat(0, 7).str() == "0");
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("parse and print round trip") {
  CHECK(Rat::parse("3/4") == Rat(3, 4));
  CHECK(Rat::parse("-10/4") == Rat(-5, 2));
  CHECK(Rat::parse("+7") == Rat(7));
  CHECK(Rat::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
  CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  std::ostringstream os;
  os << Rat(-1, 3);
  CHECK(os.str() == "-1/3");
}

TEST_CASE("arithmetic") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
  CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
  CHECK(Rat(2, 3) / Rat(4, 9) == Rat(3, 2));
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
  CHECK(pow(Rat(2, 3), 3) == Rat(8, 27));
  CHECK(pow(Rat(2, 3), -2) == Rat(9, 4));
  CHECK(pow(Rat(5), 0) == Rat(1));
  CHECK_THROWS_AS(pow(Rat(0), -1), std::domain_error);
  CHECK(Rat(-3, 4).abs() == Rat(3, 4));
  CHECK(Rat(-3, 4).inverse() == Rat(-4, 3));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(1, 4).to_double() == 0.25);
}

TEST_CASE("random field identities stay canonical") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-50, 50);
  std::uniform_int_distribution<long> pos(1, 50);
  for (int i = 0; i < 300; ++i) {
    const Rat a(d(rng), pos(rng)), b(d(rng), pos(rng)), c(d(rng), pos(rng));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == Rat(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    const Rat p = a * b + c;
    CHECK(p.denominator() > Rat(0));
    CHECK(Rat::parse(p.str()) == p);
  }
}
