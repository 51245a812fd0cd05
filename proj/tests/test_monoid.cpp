#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "oracle.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/rational.hpp"

using namespace puiseux;

namespace {

Rat q(long long n, long long d = 1) { return Rat(BigInt(n), BigInt(d)); }

std::vector<Rat> rats(std::initializer_list<Rat> xs) { return std::vector<Rat>(xs); }

}  // namespace

TEST_CASE("normalize drops generators that are sums of others") {
  ReducedMonoid m = normalize(rats({q(2), q(1)}));
  CHECK(m.atoms == rats({q(1)}));
  REQUIRE(m.removed.size() == 1);
  CHECK(m.removed[0].kind == ReductionEvent::Kind::NonMinimal);
  CHECK(m.removed[0].value == q(2));

  ReducedMonoid n = normalize(rats({q(1, 2), q(1, 3), q(5, 6)}));
  CHECK(n.atoms == rats({q(1, 3), q(1, 2)}));
  REQUIRE(n.removed.size() == 1);
  CHECK(n.removed[0].value == q(5, 6));
}

TEST_CASE("normalize records duplicates") {
  ReducedMonoid m = normalize(rats({q(1, 2), q(1, 2), q(1, 3)}));
  CHECK(m.atoms == rats({q(1, 3), q(1, 2)}));
  REQUIRE(m.removed.size() == 1);
  CHECK(m.removed[0].kind == ReductionEvent::Kind::Duplicate);
  CHECK(m.removed[0].value == q(1, 2));
}

TEST_CASE("normalize computes the integer form") {
  ReducedMonoid m = normalize(rats({q(4), q(6), q(9)}));
  CHECK(m.atoms == rats({q(4), q(6), q(9)}));
  CHECK(m.scale == 1);
  CHECK(m.gens_int == std::vector<BigInt>{4, 6, 9});
  CHECK(m.content == 1);

  ReducedMonoid f = normalize(rats({q(1, 2), q(1, 3)}));
  CHECK(f.atoms == rats({q(1, 3), q(1, 2)}));
  CHECK(f.scale == 6);
  CHECK(f.gens_int == std::vector<BigInt>{2, 3});
  CHECK(f.content == 1);

  ReducedMonoid g = normalize(rats({q(2), q(6), q(4)}));
  CHECK(g.atoms == rats({q(2)}));
  CHECK(g.gens_int == std::vector<BigInt>{2});
  CHECK(g.content == 2);
}

TEST_CASE("normalize handles the empty list and rejects zero") {
  ReducedMonoid m = normalize({});
  CHECK(m.trivial());
  CHECK(m.atoms.empty());
  CHECK_THROWS_AS(normalize(rats({q(0)})), std::invalid_argument);
}

TEST_CASE("minimal_atoms agrees with normalize") {
  CHECK(minimal_atoms(rats({q(2), q(1), q(3)})) == rats({q(1)}));
  CHECK(minimal_atoms(rats({q(4), q(6), q(9), q(10)})) == rats({q(4), q(6), q(9)}));
}

TEST_CASE("membership matches the defining dynamic program") {
  ReducedMonoid m = normalize(rats({q(4), q(6), q(9)}));
  CHECK(member(m, q(0)));
  CHECK(member(m, q(18)));
  CHECK(member(m, q(4)));
  CHECK_FALSE(member(m, q(5)));
  CHECK_FALSE(member(m, q(1, 2)));
  CHECK_FALSE(member(m, q(7)));
  CHECK(member(m, q(13)));

  ReducedMonoid f = normalize(rats({q(1, 2), q(1, 3)}));
  CHECK(member(f, q(1)));
  CHECK(member(f, q(5, 6)));
  CHECK_FALSE(member(f, q(1, 6)));
  CHECK_FALSE(member(f, q(1, 5)));

  ReducedMonoid t = normalize({});
  CHECK(member(t, q(0)));
  CHECK_FALSE(member(t, q(1)));
}

TEST_CASE("factorizations of 18 over {4, 6, 9}") {
  ReducedMonoid m = normalize(rats({q(4), q(6), q(9)}));
  std::vector<Factorization> zs = factorizations(m, q(18));
  REQUIRE(zs.size() == 3);
  CHECK(zs[0].counts == std::vector<std::uint64_t>{0, 0, 2});
  CHECK(zs[1].counts == std::vector<std::uint64_t>{0, 3, 0});
  CHECK(zs[2].counts == std::vector<std::uint64_t>{3, 1, 0});
  for (const Factorization& z : zs) CHECK(evaluate_factorization(m, z) == q(18));
  CHECK(zs[0].length() == 2);
  CHECK(zs[2].length() == 4);
}

TEST_CASE("factorizations handle zero, non-members and fractions") {
  ReducedMonoid m = normalize(rats({q(4), q(6), q(9)}));
  std::vector<Factorization> zero = factorizations(m, q(0));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].counts == std::vector<std::uint64_t>{0, 0, 0});
  CHECK(zero[0].length() == 0);
  CHECK(factorizations(m, q(5)).empty());

  ReducedMonoid f = normalize(rats({q(1, 2), q(1, 3)}));
  std::vector<Factorization> zs = factorizations(f, q(1));
  REQUIRE(zs.size() == 2);
  // atoms ascending: 1/3, 1/2
  CHECK(zs[0].counts == std::vector<std::uint64_t>{0, 2});
  CHECK(zs[1].counts == std::vector<std::uint64_t>{3, 0});
}

TEST_CASE("factorizations agree with the naive oracle on fixed cases") {
  for (const std::vector<Rat>& gens :
       {rats({q(4), q(6), q(9)}), rats({q(1, 2), q(1, 3)}), rats({q(3, 2), q(9, 4)}),
        rats({q(2), q(3)}), rats({q(5, 6), q(7, 6), q(1, 2)})}) {
    ReducedMonoid m = normalize(gens);
    for (long long t = 0; t <= 12; ++t) {
      Rat x = q(t, 2);
      CHECK(factorizations(m, x) == test_oracle::naive_factorizations(m.atoms, x));
    }
  }
}

TEST_CASE("evaluate_factorization rejects wrong dimensions") {
  ReducedMonoid m = normalize(rats({q(4), q(6), q(9)}));
  CHECK_THROWS_AS(evaluate_factorization(m, Factorization{{1, 2}}), std::invalid_argument);
}

TEST_CASE("length sets, gaps and element elasticity") {
  ReducedMonoid m = normalize(rats({q(4), q(6), q(9)}));
  LengthSet l = length_set(m, q(18));
  CHECK(l.member);
  CHECK(l.lengths == std::vector<std::uint64_t>{2, 3, 4});

  DeltaSet d = delta_of_element(m, q(18));
  CHECK(d.member);
  CHECK(d.gaps == std::vector<std::uint64_t>{1});

  auto rho = elasticity_of_element(m, q(18));
  REQUIRE(rho.has_value());
  CHECK(*rho == q(2));

  CHECK(length_set(m, q(0)) == LengthSet{true, {0}});
  CHECK(delta_of_element(m, q(0)) == DeltaSet{true, {}});
  CHECK(*elasticity_of_element(m, q(0)) == q(1));

  CHECK_FALSE(length_set(m, q(5)).member);
  CHECK(length_set(m, q(5)).lengths.empty());
  CHECK_FALSE(elasticity_of_element(m, q(5)).has_value());

  // single length: 4 factors only as itself
  CHECK(length_set(m, q(4)) == LengthSet{true, {1}});
  CHECK(delta_of_element(m, q(4)) == DeltaSet{true, {}});
  CHECK(*elasticity_of_element(m, q(4)) == q(1));
}

TEST_CASE("length sets agree with the naive oracle on fractions") {
  ReducedMonoid f = normalize(rats({q(1, 2), q(1, 3)}));
  for (long long t = 0; t <= 30; ++t) {
    Rat x = q(t, 6);
    LengthSet l = length_set(f, x);
    CHECK(l.lengths == test_oracle::naive_length_set(f.atoms, x));
    CHECK(l.member == test_oracle::naive_member(f.atoms, x));
  }
}

TEST_CASE("scaling a monoid leaves lengths unchanged") {
  ReducedMonoid a = normalize(rats({q(4), q(6), q(9)}));
  ReducedMonoid b = normalize(rats({q(8), q(12), q(18)}));
  ReducedMonoid c = normalize(rats({q(4, 5), q(6, 5), q(9, 5)}));
  CHECK(length_set(a, q(18)).lengths == length_set(b, q(36)).lengths);
  CHECK(length_set(a, q(18)).lengths == length_set(c, q(18, 5)).lengths);
  CHECK(factorizations(a, q(18)).size() == factorizations(b, q(36)).size());
  CHECK(delta_of_element(a, q(18)).gaps == delta_of_element(c, q(18, 5)).gaps);
}

TEST_CASE("the factorization cap aborts loudly") {
  ReducedMonoid m = normalize(rats({q(4), q(6), q(9)}));
  Limits tight;
  tight.factorization_cap = 2;
  CHECK_THROWS_AS(factorizations(m, q(18), tight), CapExceeded);
}

TEST_CASE("length_set survives a tiny memory budget via enumeration") {
  ReducedMonoid m = normalize(rats({q(4), q(6), q(9)}));
  Limits tiny;
  tiny.memory_budget_bytes = 8;
  CHECK(length_set(m, q(18), tiny).lengths == std::vector<std::uint64_t>{2, 3, 4});
}
