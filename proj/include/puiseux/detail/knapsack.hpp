#pragma once

#include <cstdint>
#include <functional>
#include <vector>

// Integer-side engine shared by the element queries and the whole-monoid
// sweeps. All functions work on content-reduced generator lists; callers map
// rationals in and out.

namespace puiseux::detail {

inline constexpr std::uint64_t kUnreachable = ~std::uint64_t(0);

/// Dense bitset over achievable factorization lengths of one value.
struct BitRow {
  const std::uint64_t* words = nullptr;
  std::size_t nwords = 0;

  bool any() const;
  bool test(std::uint64_t bit) const;
  std::uint64_t lowest() const;   // pre: any()
  std::uint64_t highest() const;  // pre: any()
  std::vector<std::uint64_t> bits() const;  // set bits, ascending
};

/// Membership table: result[v] says whether v is a nonnegative integer
/// combination of gens, for v = 0..target. Generators above target are
/// ignored; they cannot contribute.
std::vector<bool> reachable_table(const std::vector<std::uint64_t>& gens, std::uint64_t target);

/// Per-value extreme factorization lengths over 0..target; -1 marks values
/// outside the monoid.
struct MinMaxLengths {
  std::vector<std::int64_t> min;
  std::vector<std::int64_t> max;
};
MinMaxLengths minmax_lengths(const std::vector<std::uint64_t>& gens, std::uint64_t target);

/// Streams the achievable-length bitset of every value 0..target, ascending,
/// through visit(value, row). Rows live in a ring buffer and are valid only
/// during the callback. Returns false without visiting anything when the
/// ring buffer would exceed memory_budget_bytes.
bool sweep_length_rows(const std::vector<std::uint64_t>& gens, std::uint64_t target,
                       std::uint64_t memory_budget_bytes,
                       const std::function<void(std::uint64_t, const BitRow&)>& visit);

/// tables[i][r]: least value congruent to r (mod gens[0]) representable over
/// gens[0..i], kUnreachable when the class is empty. gens must be ascending
/// and duplicate-free. v is representable over gens[0..i] exactly when
/// tables[i][v % gens[0]] <= v, which is what the enumeration uses to prune.
std::vector<std::vector<std::uint64_t>> apery_tables(const std::vector<std::uint64_t>& gens);

}  // namespace puiseux::detail
