#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "puiseux/rational.hpp"

using puiseux::BigInt;
using puiseux::ExtRat;
using puiseux::Rat;

TEST_CASE("construction reduces to canonical form") {
  Rat a(BigInt(6), BigInt(4));
  CHECK(a.num() == 3);
  CHECK(a.den() == 2);

  Rat zero(BigInt(0), BigInt(7));
  CHECK(zero.num() == 0);
  CHECK(zero.den() == 1);
  CHECK(zero.is_zero());
  CHECK(zero == Rat());

  Rat whole(BigInt(12), BigInt(4));
  CHECK(whole.num() == 3);
  CHECK(whole.den() == 1);
  CHECK(whole.is_integer());

  CHECK(Rat(BigInt(5)) == Rat(BigInt(5), BigInt(1)));
  CHECK(Rat(std::uint64_t{9}) == Rat(BigInt(9)));
}

TEST_CASE("construction rejects zero denominators and negatives") {
  CHECK_THROWS_AS(Rat(BigInt(1), BigInt(0)), std::invalid_argument);
  CHECK_THROWS_AS(Rat(BigInt(-1), BigInt(2)), std::invalid_argument);
  CHECK_THROWS_AS(Rat(BigInt(1), BigInt(-2)), std::invalid_argument);
}

TEST_CASE("parse accepts p/q and plain integers") {
  CHECK(Rat::parse("3/4") == Rat(BigInt(3), BigInt(4)));
  CHECK(Rat::parse("2/4") == Rat(BigInt(1), BigInt(2)));
  CHECK(Rat::parse("10") == Rat(BigInt(10)));
  CHECK(Rat::parse(" 7/2 ") == Rat(BigInt(7), BigInt(2)));
  CHECK(Rat::parse("0") == Rat());
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("-1/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("3/"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("/3"), std::invalid_argument);
}

TEST_CASE("ordering is the usual rational order") {
  Rat third(BigInt(1), BigInt(3));
  Rat half(BigInt(1), BigInt(2));
  Rat two_thirds(BigInt(2), BigInt(3));
  CHECK(third < half);
  CHECK(half < two_thirds);
  CHECK(two_thirds < Rat(BigInt(1)));
  CHECK(half == Rat(BigInt(2), BigInt(4)));
  CHECK(Rat() < third);
}

TEST_CASE("addition and multiplication stay reduced") {
  CHECK(Rat(BigInt(1), BigInt(2)) + Rat(BigInt(1), BigInt(3)) == Rat(BigInt(5), BigInt(6)));
  CHECK(Rat(BigInt(1), BigInt(4)) + Rat(BigInt(1), BigInt(4)) == Rat(BigInt(1), BigInt(2)));
  CHECK(Rat(BigInt(2), BigInt(3)) * Rat(BigInt(3), BigInt(4)) == Rat(BigInt(1), BigInt(2)));
  CHECK(Rat() + Rat(BigInt(5)) == Rat(BigInt(5)));
  CHECK(Rat() * Rat(BigInt(5)) == Rat());
}

TEST_CASE("pow follows the 0^0 = 1 convention") {
  Rat r(BigInt(2), BigInt(3));
  CHECK(pow(r, 0) == Rat(BigInt(1)));
  CHECK(pow(r, 1) == r);
  CHECK(pow(r, 3) == Rat(BigInt(8), BigInt(27)));
  CHECK(pow(Rat(), 0) == Rat(BigInt(1)));
  CHECK(pow(Rat(), 5) == Rat());
  Rat big = pow(Rat(BigInt(3), BigInt(2)), 64);
  CHECK(big.num() == pow(BigInt(3), 64));
  CHECK(big.den() == pow(BigInt(2), 64));
}

TEST_CASE("str abbreviates integers, frac_str never does") {
  CHECK(Rat(BigInt(3), BigInt(2)).str() == "3/2");
  CHECK(Rat(BigInt(4), BigInt(2)).str() == "2");
  CHECK(Rat(BigInt(4), BigInt(2)).frac_str() == "2/1");
  CHECK(Rat().str() == "0");
  CHECK(Rat().frac_str() == "0/1");
  CHECK(Rat(BigInt(2), BigInt(3)).approx() == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("extended rationals treat infinity as the greatest value") {
  ExtRat fin(Rat(BigInt(3), BigInt(2)));
  ExtRat inf = ExtRat::infinity();
  CHECK_FALSE(fin.is_infinite());
  CHECK(inf.is_infinite());
  CHECK(fin < inf);
  CHECK(inf == ExtRat::infinity());
  CHECK(fin.finite() == Rat(BigInt(3), BigInt(2)));
  CHECK_THROWS_AS(inf.finite(), std::domain_error);
  CHECK(inf.str() == "inf");
  CHECK(inf.frac_str() == "inf");
  CHECK(fin.str() == "3/2");
  CHECK(ExtRat().finite() == Rat());
  CHECK(ExtRat() < fin);
  CHECK(ExtRat(Rat(BigInt(2))) > fin);
}
