#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "puiseux/rational.hpp"

namespace puiseux {

/// Guards for the enumeration and sweep engines. Every limit aborts loudly;
/// nothing silently truncates.
struct Limits {
  std::uint64_t factorization_cap = 1'000'000;        // factorizations materialized per query
  std::uint64_t dp_value_cap = 8'000'000;             // integer-side table extent
  std::uint64_t memory_budget_bytes = 256ull << 20;   // length-set bitset tables
  std::uint64_t truncation_scan_cap = 10'000;         // stream indices scanned by truncation
  std::uint64_t oracle_value_limit = 300;             // integer-side target for the naive oracle
};

/// Thrown when a query exceeds a configured cap. Callers that can shrink the
/// query (smaller bound, smaller depth) should do so and retry.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ReductionEvent {
  enum class Kind { Duplicate, NonMinimal };
  Kind kind = Kind::Duplicate;
  Rat value;

  friend bool operator==(const ReductionEvent&, const ReductionEvent&) = default;
};

/// Finitely generated Puiseux monoid in reduced form. atoms holds the
/// minimal generators ascending; gens_int = scale * atoms is the integer
/// form with scale = lcm of atom denominators; content = gcd(gens_int), so
/// gens_int / content generates the associated numerical monoid.
struct ReducedMonoid {
  std::vector<Rat> atoms;
  std::vector<BigInt> gens_int;
  BigInt scale = 1;
  BigInt content = 1;
  std::vector<ReductionEvent> removed;  // duplicates and non-minimal inputs

  bool trivial() const { return atoms.empty(); }

  friend bool operator==(const ReducedMonoid&, const ReducedMonoid&) = default;
};

/// Canonicalizes a generator list: sorts, deduplicates, drops generators that
/// are sums of two or more others, recomputes the integer form from the
/// survivors. An empty list yields the trivial monoid. Rejects zero values.
ReducedMonoid normalize(const std::vector<Rat>& gens);

/// Minimal generators (the atoms) of the monoid the list generates.
std::vector<Rat> minimal_atoms(const std::vector<Rat>& gens);

/// Membership, decided by dynamic programming over achievable integer values
/// up to scale * x. Zero is always a member.
bool member(const ReducedMonoid& m, const Rat& x, const Limits& limits = {});

/// One factorization of an element: counts[k] copies of atoms[k].
struct Factorization {
  std::vector<std::uint64_t> counts;

  std::uint64_t length() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// The complete, duplicate-free set of factorizations of x, sorted by counts.
/// Non-members give an empty set; x = 0 gives the empty factorization.
/// Aborts with CapExceeded past limits.factorization_cap.
std::vector<Factorization> factorizations(const ReducedMonoid& m, const Rat& x,
                                          const Limits& limits = {});

/// Sum of counts[k] * atoms[k]; rejects count vectors of the wrong dimension.
Rat evaluate_factorization(const ReducedMonoid& m, const Factorization& z);

/// Set of factorization lengths of x. member distinguishes the empty set of
/// a non-member from real length sets; L(0) = {0}.
struct LengthSet {
  bool member = false;
  std::vector<std::uint64_t> lengths;  // ascending

  friend bool operator==(const LengthSet&, const LengthSet&) = default;
};
LengthSet length_set(const ReducedMonoid& m, const Rat& x, const Limits& limits = {});

/// Gaps between consecutive lengths of x (the delta set of the element).
struct DeltaSet {
  bool member = false;
  std::vector<std::uint64_t> gaps;  // ascending, duplicate-free

  friend bool operator==(const DeltaSet&, const DeltaSet&) = default;
};
DeltaSet delta_of_element(const ReducedMonoid& m, const Rat& x, const Limits& limits = {});

/// max L(x) / min L(x); 1 for x = 0 by convention; nullopt for non-members.
std::optional<Rat> elasticity_of_element(const ReducedMonoid& m, const Rat& x,
                                         const Limits& limits = {});

}  // namespace puiseux
