#pragma once

#include <cstdint>
#include <vector>

#include "puiseux/monoid.hpp"
#include "puiseux/rational.hpp"

namespace puiseux::test_oracle {

// Reference implementations straight from the definitions: clear the
// denominators with the lcm, then try every count vector by exhaustive
// recursion. Deliberately shares nothing with the optimized engine (no
// residue tables, no bitsets, no content reduction). Values are capped at
// limits.oracle_value_limit on the rescaled side.

std::vector<Factorization> naive_factorizations(const std::vector<Rat>& atoms, const Rat& x,
                                                const Limits& limits = {});

bool naive_member(const std::vector<Rat>& atoms, const Rat& x, const Limits& limits = {});

std::vector<std::uint64_t> naive_length_set(const std::vector<Rat>& atoms, const Rat& x,
                                            const Limits& limits = {});

}  // namespace puiseux::test_oracle
