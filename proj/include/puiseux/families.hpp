#ifndef PUISEUX_FAMILIES_HPP
#define PUISEUX_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "puiseux/approximation.hpp"
#include "puiseux/rational.hpp"

namespace puiseux {

/// Parsed description of a built-in stream. `family` selects the variant;
/// the other fields are read as that variant requires.
struct FamilySpec {
  std::string family;  // cyclic | example46 | multicyclic | unit_fraction_primes | explicit
  std::optional<Rat> r;
  std::optional<std::uint64_t> i;
  std::vector<Rat> base_list;
  std::optional<std::uint64_t> count;
  std::vector<Rat> atoms;
};

/// Powers 1, r, r^2, ... of a positive non-integer rational. Rejects integral
/// r (a free monoid) and r < 1 with numerator 1 (no atoms at all).
AtomStream cyclic_stream(const Rat& r);

/// All even powers of r interleaved with the first i odd powers, ascending:
/// exponents 0, 1, ..., 2i, then 2i+2, 2i+4, ... Requires non-integer r > 1
/// and i >= 1.
AtomStream example46_stream(const Rat& r, std::uint64_t i);

/// Powers of several bases merged into one stream. Each base must be a
/// non-integer with numerator > 1; distinct bases need coprime denominators
/// and the same |numerator - denominator|. All bases > 1 gives an ascending
/// value merge; otherwise powers are emitted in rounds so every one has a
/// finite index.
AtomStream multicyclic_stream(const std::vector<Rat>& bases);

/// 1/2, 1/3, 1/5, ..., one reciprocal per prime, `count` atoms total.
/// Supported up to the 10^4-th prime.
AtomStream unit_fraction_prime_stream(std::uint64_t count);

/// Finite stream over the given positive values, in the given order.
AtomStream explicit_stream(std::vector<Rat> atoms);

/// Builds the stream a FamilySpec describes; unknown families and missing
/// parameters raise std::invalid_argument naming the problem.
AtomStream make_stream(const FamilySpec& spec);

/// Every stream atom <= x, in stream order. Atoms above x cannot take part
/// in a factorization of x, so the result generates enough of the monoid to
/// answer queries at x exactly. Infinite streams must be ascending; the scan
/// gives up past limits.truncation_scan_cap indices.
std::vector<Rat> truncate_stream_below(const AtomStream& s, const Rat& x,
                                       const Limits& limits = {});

}  // namespace puiseux

#endif  // PUISEUX_FAMILIES_HPP
