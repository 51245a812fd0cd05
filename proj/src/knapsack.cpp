#include "puiseux/detail/knapsack.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <limits>

namespace puiseux::detail {

bool BitRow::any() const {
  for (std::size_t j = 0; j < nwords; ++j) {
    if (words[j] != 0) return true;
  }
  return false;
}

bool BitRow::test(std::uint64_t bit) const {
  std::size_t j = bit / 64;
  if (j >= nwords) return false;
  return (words[j] >> (bit % 64)) & 1u;
}

std::uint64_t BitRow::lowest() const {
  for (std::size_t j = 0; j < nwords; ++j) {
    if (words[j] != 0) return j * 64 + std::countr_zero(words[j]);
  }
  return kUnreachable;
}

std::uint64_t BitRow::highest() const {
  for (std::size_t j = nwords; j-- > 0;) {
    if (words[j] != 0) return j * 64 + (63 - std::countl_zero(words[j]));
  }
  return kUnreachable;
}

std::vector<std::uint64_t> BitRow::bits() const {
  std::vector<std::uint64_t> out;
  for (std::size_t j = 0; j < nwords; ++j) {
    std::uint64_t w = words[j];
    while (w != 0) {
      out.push_back(j * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

namespace {

std::vector<std::uint64_t> filter_gens(const std::vector<std::uint64_t>& gens, std::uint64_t target) {
  std::vector<std::uint64_t> out;
  out.reserve(gens.size());
  for (std::uint64_t g : gens) {
    if (g != 0 && g <= target) out.push_back(g);
  }
  return out;
}

}  // namespace

std::vector<bool> reachable_table(const std::vector<std::uint64_t>& gens, std::uint64_t target) {
  std::vector<bool> table(target + 1, false);
  table[0] = true;
  std::vector<std::uint64_t> use = filter_gens(gens, target);
  for (std::uint64_t v = 1; v <= target; ++v) {
    for (std::uint64_t g : use) {
      if (g <= v && table[v - g]) {
        table[v] = true;
        break;
      }
    }
  }
  return table;
}

MinMaxLengths minmax_lengths(const std::vector<std::uint64_t>& gens, std::uint64_t target) {
  MinMaxLengths mm;
  mm.min.assign(target + 1, -1);
  mm.max.assign(target + 1, -1);
  mm.min[0] = 0;
  mm.max[0] = 0;
  std::vector<std::uint64_t> use = filter_gens(gens, target);
  for (std::uint64_t v = 1; v <= target; ++v) {
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = -1;
    for (std::uint64_t g : use) {
      if (g > v) continue;
      std::int64_t prev = mm.min[v - g];
      if (prev < 0) continue;
      lo = std::min(lo, prev + 1);
      hi = std::max(hi, mm.max[v - g] + 1);
    }
    if (hi >= 0) {
      mm.min[v] = lo;
      mm.max[v] = hi;
    }
  }
  return mm;
}

bool sweep_length_rows(const std::vector<std::uint64_t>& gens, std::uint64_t target,
                       std::uint64_t memory_budget_bytes,
                       const std::function<void(std::uint64_t, const BitRow&)>& visit) {
  std::vector<std::uint64_t> use = filter_gens(gens, target);

  std::uint64_t max_len = use.empty() ? 0 : target / use.front();
  std::size_t nwords = static_cast<std::size_t>(max_len / 64 + 1);
  std::uint64_t ring_rows = use.empty() ? 1 : use.back() + 1;  // lookback covers the largest generator
  if (ring_rows * nwords > memory_budget_bytes / 8) return false;

  std::vector<std::uint64_t> ring(static_cast<std::size_t>(ring_rows) * nwords, 0);
  std::vector<unsigned char> nonzero(static_cast<std::size_t>(ring_rows), 0);

  for (std::uint64_t v = 0; v <= target; ++v) {
    std::size_t slot = static_cast<std::size_t>(v % ring_rows);
    std::uint64_t* row = ring.data() + slot * nwords;
    std::memset(row, 0, nwords * sizeof(std::uint64_t));
    bool has = false;
    if (v == 0) {
      row[0] = 1;  // the empty factorization of 0
      has = true;
    } else {
      for (std::uint64_t g : use) {
        if (g > v) break;  // ascending generators
        std::size_t src_slot = static_cast<std::size_t>((v - g) % ring_rows);
        if (!nonzero[src_slot]) continue;
        const std::uint64_t* src = ring.data() + src_slot * nwords;
        for (std::size_t j = nwords; j-- > 1;) {
          row[j] |= (src[j] << 1) | (src[j - 1] >> 63);
        }
        row[0] |= src[0] << 1;
        has = true;
      }
    }
    nonzero[slot] = has ? 1 : 0;
    visit(v, BitRow{row, nwords});
  }
  return true;
}

std::vector<std::vector<std::uint64_t>> apery_tables(const std::vector<std::uint64_t>& gens) {
  std::vector<std::vector<std::uint64_t>> tables;
  if (gens.empty()) return tables;
  std::uint64_t g0 = gens.front();

  std::vector<std::uint64_t> cur(static_cast<std::size_t>(g0), kUnreachable);
  cur[0] = 0;
  tables.push_back(cur);

  for (std::size_t i = 1; i < gens.size(); ++i) {
    std::uint64_t g = gens[i];
    // Relax each +g residue cycle once, starting from its minimal entry.
    // The minimum of a cycle cannot improve, so one pass settles the rest.
    std::vector<unsigned char> seen(static_cast<std::size_t>(g0), 0);
    for (std::uint64_t r0 = 0; r0 < g0; ++r0) {
      if (seen[static_cast<std::size_t>(r0)]) continue;
      std::vector<std::uint64_t> cycle;
      std::uint64_t r = r0;
      do {
        cycle.push_back(r);
        seen[static_cast<std::size_t>(r)] = 1;
        r = (r + g) % g0;
      } while (r != r0);

      std::size_t start = 0;
      for (std::size_t k = 1; k < cycle.size(); ++k) {
        if (cur[static_cast<std::size_t>(cycle[k])] < cur[static_cast<std::size_t>(cycle[start])]) start = k;
      }
      if (cur[static_cast<std::size_t>(cycle[start])] == kUnreachable) continue;
      for (std::size_t step = 1; step < cycle.size(); ++step) {
        std::size_t a = static_cast<std::size_t>(cycle[(start + step - 1) % cycle.size()]);
        std::size_t b = static_cast<std::size_t>(cycle[(start + step) % cycle.size()]);
        if (cur[a] != kUnreachable && cur[a] + g < cur[b]) cur[b] = cur[a] + g;
      }
    }
    tables.push_back(cur);
  }
  return tables;
}

}  // namespace puiseux::detail
