#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "puiseux/families.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/rational.hpp"

using namespace puiseux;

namespace {

Rat q(long long n, long long d = 1) { return Rat(BigInt(n), BigInt(d)); }

std::vector<Rat> take(const AtomStream& s, std::uint64_t k) {
  std::vector<Rat> out;
  for (std::uint64_t i = 1; i <= k; ++i) out.push_back(s.at(i));
  return out;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("cyclic stream lists the powers of r") {
  AtomStream down = cyclic_stream(q(2, 3));
  CHECK(take(down, 5) == std::vector<Rat>{q(1), q(2, 3), q(4, 9), q(8, 27), q(16, 81)});
  CHECK(down.info().family == "cyclic");
  CHECK(down.info().atomic_guaranteed);
  CHECK_FALSE(down.info().ascending);
  CHECK(down.info().zero_limit_point == true);
  CHECK_FALSE(down.length().has_value());

  AtomStream up = cyclic_stream(q(3, 2));
  CHECK(take(up, 3) == std::vector<Rat>{q(1), q(3, 2), q(9, 4)});
  CHECK(up.info().ascending);
  CHECK(up.info().zero_limit_point == false);
}

TEST_CASE("cyclic stream rejects degenerate bases") {
  CHECK_THROWS_AS(cyclic_stream(q(2)), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_stream(q(1)), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_stream(q(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_stream(q(0)), std::invalid_argument);
  CHECK(message_of([] { cyclic_stream(q(2)); }).find("free monoid") != std::string::npos);
  CHECK(message_of([] { cyclic_stream(q(1, 2)); }).find("no atoms") != std::string::npos);
}

TEST_CASE("even powers with finitely many odd powers interleaved") {
  AtomStream s1 = example46_stream(q(3, 2), 1);
  CHECK(take(s1, 7) == std::vector<Rat>{q(1), q(3, 2), q(9, 4), q(81, 16), q(729, 64),
                                        q(6561, 256), q(59049, 1024)});
  CHECK(s1.info().family == "example46");
  CHECK(s1.info().ascending);
  CHECK(s1.info().zero_limit_point == false);

  AtomStream s2 = example46_stream(q(3, 2), 2);
  CHECK(take(s2, 7) == std::vector<Rat>{q(1), q(3, 2), q(9, 4), q(27, 8), q(81, 16), q(729, 64),
                                        q(6561, 256)});
}

TEST_CASE("example46 parameter validation") {
  CHECK_THROWS_AS(example46_stream(q(1, 2), 1), std::invalid_argument);
  CHECK_THROWS_AS(example46_stream(q(2), 1), std::invalid_argument);
  CHECK_THROWS_AS(example46_stream(q(3, 2), 0), std::invalid_argument);
}

TEST_CASE("multicyclic merge of ascending power sequences") {
  AtomStream s = multicyclic_stream({q(3, 2), q(8, 7)});
  CHECK(take(s, 9) == std::vector<Rat>{q(1), q(8, 7), q(64, 49), q(512, 343), q(3, 2),
                                       q(4096, 2401), q(32768, 16807), q(262144, 117649),
                                       q(9, 4)});
  CHECK(s.info().family == "multicyclic");
  CHECK(s.info().ascending);
  CHECK(s.info().zero_limit_point == false);
  REQUIRE(s.info().common_offset.has_value());
  CHECK(*s.info().common_offset == 1);

  // a single base degenerates to its power sequence
  CHECK(take(multicyclic_stream({q(3, 2)}), 3) == std::vector<Rat>{q(1), q(3, 2), q(9, 4)});
  // repeats collapse to one base
  CHECK(take(multicyclic_stream({q(3, 2), q(3, 2)}), 3) ==
        std::vector<Rat>{q(1), q(3, 2), q(9, 4)});
}

TEST_CASE("multicyclic rounds when a base sits below 1") {
  AtomStream s = multicyclic_stream({q(2, 3), q(5, 4)});
  CHECK(take(s, 7) == std::vector<Rat>{q(1), q(2, 3), q(5, 4), q(4, 9), q(25, 16), q(8, 27),
                                       q(125, 64)});
  CHECK_FALSE(s.info().ascending);
  CHECK(s.info().zero_limit_point == true);
}

TEST_CASE("multicyclic validation names the offending bases") {
  CHECK_THROWS_AS(multicyclic_stream({}), std::invalid_argument);
  CHECK_THROWS_AS(multicyclic_stream({q(1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(multicyclic_stream({q(2)}), std::invalid_argument);
  CHECK_THROWS_AS(multicyclic_stream({q(3, 2), q(5, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(multicyclic_stream({q(3, 2), q(7, 5)}), std::invalid_argument);

  std::string shared = message_of([] { multicyclic_stream({q(3, 2), q(5, 2)}); });
  CHECK(shared.find("3/2") != std::string::npos);
  CHECK(shared.find("5/2") != std::string::npos);
  CHECK(shared.find("coprime") != std::string::npos);

  std::string gaps = message_of([] { multicyclic_stream({q(3, 2), q(7, 5)}); });
  CHECK(gaps.find("7/5") != std::string::npos);
  CHECK(gaps.find("gap") != std::string::npos);
}

TEST_CASE("reciprocal primes form a finite stream with a shared numerator") {
  AtomStream s = unit_fraction_prime_stream(5);
  CHECK(take(s, 5) == std::vector<Rat>{q(1, 2), q(1, 3), q(1, 5), q(1, 7), q(1, 11)});
  REQUIRE(s.length().has_value());
  CHECK(*s.length() == 5);
  CHECK(s.info().family == "unit_fraction_primes");
  REQUIRE(s.info().stable_numerator.has_value());
  CHECK(*s.info().stable_numerator == 1);
  CHECK(s.info().zero_limit_point == true);
  CHECK_FALSE(s.info().ascending);

  CHECK(unit_fraction_prime_stream(10000).at(10000) == q(1, 104729));
  CHECK_THROWS_AS(unit_fraction_prime_stream(0), std::invalid_argument);
  CHECK_THROWS_AS(unit_fraction_prime_stream(10001), std::invalid_argument);
}

TEST_CASE("explicit streams keep the given order") {
  AtomStream s = explicit_stream({q(1, 2), q(2), q(1, 3)});
  CHECK(take(s, 3) == std::vector<Rat>{q(1, 2), q(2), q(1, 3)});
  CHECK(*s.length() == 3);
  CHECK_FALSE(s.info().ascending);
  CHECK_FALSE(s.info().zero_limit_point.has_value());

  CHECK(explicit_stream({q(1, 3), q(1, 2)}).info().ascending);
  CHECK_FALSE(explicit_stream({q(1), q(1)}).info().ascending);
  CHECK_THROWS_AS(explicit_stream({}), std::invalid_argument);
  CHECK_THROWS_AS(explicit_stream({q(1), q(0)}), std::invalid_argument);
}

TEST_CASE("make_stream dispatches on the family name") {
  FamilySpec cyclic;
  cyclic.family = "cyclic";
  cyclic.r = q(2, 3);
  CHECK(take(make_stream(cyclic), 2) == std::vector<Rat>{q(1), q(2, 3)});

  FamilySpec ex;
  ex.family = "example46";
  ex.r = q(3, 2);
  ex.i = 1;
  CHECK(make_stream(ex).at(4) == q(81, 16));

  FamilySpec multi;
  multi.family = "multicyclic";
  multi.base_list = {q(3, 2), q(8, 7)};
  CHECK(make_stream(multi).at(2) == q(8, 7));

  FamilySpec primes;
  primes.family = "unit_fraction_primes";
  primes.count = 3;
  CHECK(*make_stream(primes).length() == 3);

  FamilySpec expl;
  expl.family = "explicit";
  expl.atoms = {q(1, 2)};
  CHECK(make_stream(expl).at(1) == q(1, 2));
}

TEST_CASE("make_stream reports missing parameters and unknown families") {
  FamilySpec spec;
  spec.family = "cyclic";
  CHECK(message_of([&] { make_stream(spec); }).find("needs r") != std::string::npos);

  spec.family = "example46";
  spec.r = q(3, 2);
  CHECK(message_of([&] { make_stream(spec); }).find("needs i") != std::string::npos);

  spec = FamilySpec{};
  spec.family = "multicyclic";
  CHECK(message_of([&] { make_stream(spec); }).find("needs B") != std::string::npos);

  spec = FamilySpec{};
  spec.family = "unit_fraction_primes";
  CHECK(message_of([&] { make_stream(spec); }).find("needs count") != std::string::npos);

  spec = FamilySpec{};
  spec.family = "no_such_family";
  CHECK(message_of([&] { make_stream(spec); }).find("unknown family") != std::string::npos);
}

TEST_CASE("truncation keeps exactly the atoms at or below the cutoff") {
  CHECK(truncate_stream_below(example46_stream(q(3, 2), 1), q(81, 4)) ==
        std::vector<Rat>{q(1), q(3, 2), q(9, 4), q(81, 16), q(729, 64)});
  CHECK(truncate_stream_below(cyclic_stream(q(3, 2)), q(5)) ==
        std::vector<Rat>{q(1), q(3, 2), q(9, 4), q(27, 8)});
  CHECK(truncate_stream_below(cyclic_stream(q(3, 2)), q(9, 4)) ==
        std::vector<Rat>{q(1), q(3, 2), q(9, 4)});
  CHECK(truncate_stream_below(cyclic_stream(q(3, 2)), q(1, 2)).empty());
  CHECK(truncate_stream_below(explicit_stream({q(1, 2), q(2), q(1, 3)}), q(1)) ==
        std::vector<Rat>{q(1, 2), q(1, 3)});
}

TEST_CASE("truncation refuses unordered infinite streams and huge scans") {
  CHECK_THROWS_AS(truncate_stream_below(cyclic_stream(q(2, 3)), q(1)), std::invalid_argument);
  Limits tight;
  tight.truncation_scan_cap = 3;
  CHECK_THROWS_AS(truncate_stream_below(cyclic_stream(q(3, 2)), q(1000), tight), CapExceeded);
}
