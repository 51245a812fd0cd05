#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "puiseux/monoid.hpp"

// Conversions between the rational surface and the content-reduced integer
// side all per-element computation runs on.

namespace puiseux::detail {

/// gens_int / content as machine integers, ascending. Guarded by the value cap.
std::vector<std::uint64_t> reduced_gens(const ReducedMonoid& m, const Limits& limits);

/// scale * x / content when that is a nonnegative integer; nullopt marks a
/// value no combination can reach (fractional or off the content lattice).
/// Guarded by the value cap.
std::optional<std::uint64_t> reduced_target(const ReducedMonoid& m, const Rat& x,
                                            const Limits& limits);

/// floor(scale * bound / content): the integer-side extent of a sweep over
/// all monoid elements <= bound. Guarded by the value cap.
std::uint64_t reduced_extent(const ReducedMonoid& m, const Rat& bound, const Limits& limits);

/// The rational element a reduced integer value stands for.
Rat element_from_reduced(const ReducedMonoid& m, std::uint64_t value);

}  // namespace puiseux::detail
