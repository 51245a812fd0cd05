#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "puiseux/monoid.hpp"
#include "puiseux/rational.hpp"

namespace puiseux {

/// Elasticity of the whole monoid: max atom / min atom, together with the
/// least element realizing it. A missing witness below the search bound is
/// reported as such, never silently dropped.
struct ElasticityReport {
  enum class WitnessSearch { Found, NotFoundBelowBound };

  ExtRat value = ExtRat(Rat(BigInt(1), BigInt(1)));
  WitnessSearch search = WitnessSearch::NotFoundBelowBound;
  std::optional<Rat> witness;  // least x with elasticity(x) = value
  Rat search_bound;            // rational bound the search actually used

  bool accepted() const { return search == WitnessSearch::Found; }

  friend bool operator==(const ElasticityReport&, const ElasticityReport&) = default;
};

/// bound: overrides the default witness search extent of
/// lcm(gens_int) * max(gens_int), capped at 10^6, on the integer side.
ElasticityReport monoid_elasticity(const ReducedMonoid& m, std::optional<Rat> bound = {},
                                   const Limits& limits = {});

/// Union of the length sets of every element that admits a factorization of
/// length n. Such elements live in [n * min atom, n * max atom].
struct UnionReport {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> members;  // ascending; always contains n
  std::uint64_t rho = 0;               // max member (the local elasticity)
  std::uint64_t lambda = 0;            // min member

  friend bool operator==(const UnionReport&, const UnionReport&) = default;
};
UnionReport union_of_lengths(const ReducedMonoid& m, std::uint64_t n, const Limits& limits = {});

/// max of union_of_lengths(m, n).members.
std::uint64_t local_elasticity(const ReducedMonoid& m, std::uint64_t n,
                               const Limits& limits = {});

/// One element whose length set realizes a delta value: lengths lower_length
/// and lower_length + delta are consecutive in its length set.
struct DeltaWitness {
  Rat element;
  std::uint64_t lower_length = 0;

  friend bool operator==(const DeltaWitness&, const DeltaWitness&) = default;
};

/// Union of the delta sets of all monoid elements <= bound. Always a bounded
/// scan, so exact stays false: larger elements may contribute further gaps.
struct BoundedDeltaReport {
  std::vector<std::uint64_t> deltas;  // ascending
  std::map<std::uint64_t, DeltaWitness> witnesses;
  Rat bound;
  bool exact = false;

  friend bool operator==(const BoundedDeltaReport&, const BoundedDeltaReport&) = default;
};

/// bound defaults to 4 * max(gens_int)^2 on the integer side.
BoundedDeltaReport monoid_delta_bounded(const ReducedMonoid& m, std::optional<Rat> bound = {},
                                        const Limits& limits = {});

}  // namespace puiseux
