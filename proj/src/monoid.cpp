#include "puiseux/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "puiseux/detail/intform.hpp"
#include "puiseux/detail/knapsack.hpp"

namespace puiseux {

namespace detail {

namespace {

std::uint64_t to_u64_checked(const BigInt& v, const char* what) {
  if (v < 0 || v > BigInt(~std::uint64_t(0))) {
    throw CapExceeded(std::string(what) + " does not fit the integer engine");
  }
  return v.convert_to<std::uint64_t>();
}

}  // namespace

std::vector<std::uint64_t> reduced_gens(const ReducedMonoid& m, const Limits& limits) {
  std::vector<std::uint64_t> out;
  out.reserve(m.gens_int.size());
  for (const BigInt& g : m.gens_int) {
    BigInt r = g / m.content;
    if (r > BigInt(limits.dp_value_cap)) {
      throw CapExceeded("generator " + r.str() + " exceeds the integer-side value cap of " +
                        std::to_string(limits.dp_value_cap));
    }
    out.push_back(to_u64_checked(r, "generator"));
  }
  return out;
}

std::optional<std::uint64_t> reduced_target(const ReducedMonoid& m, const Rat& x,
                                            const Limits& limits) {
  BigInt t = m.scale * x.num();
  if (t % x.den() != 0) return std::nullopt;  // scale * x is not an integer
  t /= x.den();
  if (t % m.content != 0) return std::nullopt;  // off the content lattice
  t /= m.content;
  if (t > BigInt(limits.dp_value_cap)) {
    throw CapExceeded("element " + x.str() + " needs integer-side extent " + t.str() +
                      ", above the value cap of " + std::to_string(limits.dp_value_cap));
  }
  return to_u64_checked(t, "target");
}

std::uint64_t reduced_extent(const ReducedMonoid& m, const Rat& bound, const Limits& limits) {
  BigInt e = (m.scale * bound.num()) / (bound.den() * m.content);  // floor
  if (e > BigInt(limits.dp_value_cap)) {
    throw CapExceeded("bound " + bound.str() + " needs integer-side extent " + e.str() +
                      ", above the value cap of " + std::to_string(limits.dp_value_cap));
  }
  return to_u64_checked(e, "extent");
}

Rat element_from_reduced(const ReducedMonoid& m, std::uint64_t value) {
  return Rat(BigInt(value) * m.content, m.scale);
}

}  // namespace detail

namespace {

// Minimality test: a generator is an atom unless it splits as a sum of two
// nonzero members, decided over the content-reduced integer form.
std::vector<bool> minimal_mask(const std::vector<BigInt>& ints, const Limits& limits) {
  BigInt content = 0;
  for (const BigInt& g : ints) content = boost::multiprecision::gcd(content, g);
  if (content.is_zero()) content = 1;

  std::vector<std::uint64_t> red;
  red.reserve(ints.size());
  for (const BigInt& g : ints) {
    BigInt r = g / content;
    if (r > BigInt(limits.dp_value_cap)) {
      throw CapExceeded("generator " + g.str() + " exceeds the integer-side value cap of " +
                        std::to_string(limits.dp_value_cap) + " during reduction");
    }
    red.push_back(r.convert_to<std::uint64_t>());
  }

  std::uint64_t maxg = *std::max_element(red.begin(), red.end());
  std::vector<bool> reach = detail::reachable_table(red, maxg);

  std::vector<bool> minimal(ints.size(), true);
  for (std::size_t k = 0; k < red.size(); ++k) {
    std::uint64_t g = red[k];
    for (std::uint64_t a = 1; a <= g / 2; ++a) {
      if (reach[a] && reach[g - a]) {  // values below g never use g itself
        minimal[k] = false;
        break;
      }
    }
  }
  return minimal;
}

BigInt lcm_of_denominators(const std::vector<Rat>& values) {
  BigInt l = 1;
  for (const Rat& v : values) l = boost::multiprecision::lcm(l, v.den());
  return l;
}

}  // namespace

ReducedMonoid normalize(const std::vector<Rat>& gens) {
  for (const Rat& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("generators must be positive");
  }

  ReducedMonoid m;
  std::vector<Rat> sorted = gens;
  std::sort(sorted.begin(), sorted.end());

  std::vector<Rat> unique;
  for (const Rat& g : sorted) {
    if (!unique.empty() && unique.back() == g) {
      m.removed.push_back({ReductionEvent::Kind::Duplicate, g});
    } else {
      unique.push_back(g);
    }
  }
  if (unique.empty()) return m;  // trivial monoid, scale = content = 1

  Limits limits;
  BigInt sigma0 = lcm_of_denominators(unique);
  std::vector<BigInt> ints0;
  ints0.reserve(unique.size());
  for (const Rat& g : unique) ints0.push_back(g.num() * (sigma0 / g.den()));

  std::vector<bool> minimal = minimal_mask(ints0, limits);
  for (std::size_t k = 0; k < unique.size(); ++k) {
    if (minimal[k]) {
      m.atoms.push_back(unique[k]);
    } else {
      m.removed.push_back({ReductionEvent::Kind::NonMinimal, unique[k]});
    }
  }

  m.scale = lcm_of_denominators(m.atoms);
  BigInt content = 0;
  for (const Rat& a : m.atoms) {
    m.gens_int.push_back(a.num() * (m.scale / a.den()));
    content = boost::multiprecision::gcd(content, m.gens_int.back());
  }
  m.content = content.is_zero() ? BigInt(1) : content;
  return m;
}

std::vector<Rat> minimal_atoms(const std::vector<Rat>& gens) { return normalize(gens).atoms; }

bool member(const ReducedMonoid& m, const Rat& x, const Limits& limits) {
  if (x.is_zero()) return true;
  if (m.trivial()) return false;
  std::optional<std::uint64_t> t = detail::reduced_target(m, x, limits);
  if (!t) return false;
  std::vector<std::uint64_t> gens = detail::reduced_gens(m, limits);
  return detail::reachable_table(gens, *t)[*t];
}

std::uint64_t Factorization::length() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t(0));
}

namespace {

// Descending-index enumeration. At index idx with a remainder r, recursion
// continues only while r stays representable over gens[0..idx], checked
// against the residue tables.
struct Enumerator {
  const std::vector<std::uint64_t>& gens;
  const std::vector<std::vector<std::uint64_t>>& apery;
  std::uint64_t cap;
  std::vector<std::uint64_t> counts;
  std::vector<std::vector<std::uint64_t>>& out;

  void run(std::size_t idx, std::uint64_t remaining) {
    if (idx == 0) {
      if (remaining % gens[0] == 0) {
        counts[0] = remaining / gens[0];
        if (out.size() >= cap) {
          throw CapExceeded("factorization cap of " + std::to_string(cap) + " exceeded");
        }
        out.push_back(counts);
        counts[0] = 0;
      }
      return;
    }
    std::uint64_t g = gens[idx];
    std::uint64_t g0 = gens[0];
    const std::vector<std::uint64_t>& below = apery[idx - 1];
    for (std::uint64_t c = 0; c <= remaining / g; ++c) {
      std::uint64_t rest = remaining - c * g;
      if (below[static_cast<std::size_t>(rest % g0)] <= rest) {
        counts[idx] = c;
        run(idx - 1, rest);
        counts[idx] = 0;
      }
    }
  }
};

}  // namespace

std::vector<Factorization> factorizations(const ReducedMonoid& m, const Rat& x,
                                          const Limits& limits) {
  if (x.is_zero()) return {Factorization{std::vector<std::uint64_t>(m.atoms.size(), 0)}};
  if (m.trivial()) return {};
  std::optional<std::uint64_t> target = detail::reduced_target(m, x, limits);
  if (!target) return {};

  std::vector<std::uint64_t> gens = detail::reduced_gens(m, limits);
  std::vector<std::uint64_t> use;
  std::vector<std::size_t> index_of;  // position in the full atom list
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k] <= *target) {
      use.push_back(gens[k]);
      index_of.push_back(k);
    }
  }
  if (use.empty()) return {};

  std::vector<std::vector<std::uint64_t>> apery = detail::apery_tables(use);
  if (apery.back()[static_cast<std::size_t>(*target % use[0])] > *target) return {};

  std::vector<std::vector<std::uint64_t>> raw;
  Enumerator e{use, apery, limits.factorization_cap, std::vector<std::uint64_t>(use.size(), 0),
               raw};
  e.run(use.size() - 1, *target);

  std::vector<Factorization> result;
  result.reserve(raw.size());
  for (const std::vector<std::uint64_t>& counts : raw) {
    Factorization z{std::vector<std::uint64_t>(m.atoms.size(), 0)};
    for (std::size_t j = 0; j < counts.size(); ++j) z.counts[index_of[j]] = counts[j];
    result.push_back(std::move(z));
  }
  std::sort(result.begin(), result.end(),
            [](const Factorization& a, const Factorization& b) { return a.counts < b.counts; });
  return result;
}

Rat evaluate_factorization(const ReducedMonoid& m, const Factorization& z) {
  if (z.counts.size() != m.atoms.size()) {
    throw std::invalid_argument("factorization has " + std::to_string(z.counts.size()) +
                                " entries for a monoid with " + std::to_string(m.atoms.size()) +
                                " atoms");
  }
  Rat total;
  for (std::size_t k = 0; k < z.counts.size(); ++k) {
    total = total + Rat(BigInt(z.counts[k]) * m.atoms[k].num(), m.atoms[k].den());
  }
  return total;
}

LengthSet length_set(const ReducedMonoid& m, const Rat& x, const Limits& limits) {
  if (x.is_zero()) return {true, {0}};
  if (m.trivial()) return {false, {}};
  std::optional<std::uint64_t> target = detail::reduced_target(m, x, limits);
  if (!target) return {false, {}};

  std::vector<std::uint64_t> gens = detail::reduced_gens(m, limits);
  std::vector<std::uint64_t> lengths;
  bool swept = detail::sweep_length_rows(
      gens, *target, limits.memory_budget_bytes,
      [&](std::uint64_t v, const detail::BitRow& row) {
        if (v == *target) lengths = row.bits();
      });
  if (!swept) {
    // Ring buffer would not fit; fall back to enumerating factorizations.
    std::set<std::uint64_t> set;
    for (const Factorization& z : factorizations(m, x, limits)) set.insert(z.length());
    lengths.assign(set.begin(), set.end());
  }
  if (lengths.empty()) return {false, {}};
  return {true, std::move(lengths)};
}

DeltaSet delta_of_element(const ReducedMonoid& m, const Rat& x, const Limits& limits) {
  LengthSet ls = length_set(m, x, limits);
  if (!ls.member) return {false, {}};
  std::set<std::uint64_t> gaps;
  for (std::size_t j = 1; j < ls.lengths.size(); ++j) {
    gaps.insert(ls.lengths[j] - ls.lengths[j - 1]);
  }
  return {true, std::vector<std::uint64_t>(gaps.begin(), gaps.end())};
}

std::optional<Rat> elasticity_of_element(const ReducedMonoid& m, const Rat& x,
                                         const Limits& limits) {
  LengthSet ls = length_set(m, x, limits);
  if (!ls.member) return std::nullopt;
  if (ls.lengths.front() == 0) return Rat(BigInt(1), BigInt(1));  // x = 0
  return Rat(BigInt(ls.lengths.back()), BigInt(ls.lengths.front()));
}

}  // namespace puiseux
