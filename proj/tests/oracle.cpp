#include "oracle.hpp"

#include <algorithm>
#include <set>

namespace puiseux::test_oracle {

namespace {

struct Scaled {
  BigInt target;           // sigma * x, nonnegative integer
  std::vector<BigInt> gens;  // sigma * atom, aligned with the input order
  bool integral = false;   // false: x cannot be a sum of these atoms
};

Scaled rescale(const std::vector<Rat>& atoms, const Rat& x, const Limits& limits) {
  BigInt sigma = 1;
  for (const Rat& a : atoms) sigma = boost::multiprecision::lcm(sigma, a.den());

  Scaled s;
  BigInt scaled_num = x.num() * sigma;
  if (scaled_num % x.den() != 0) return s;  // denominator survives: not a member
  s.integral = true;
  s.target = scaled_num / x.den();
  if (s.target > limits.oracle_value_limit) {
    throw CapExceeded("oracle works on rescaled values up to " +
                      std::to_string(limits.oracle_value_limit));
  }
  for (const Rat& a : atoms) s.gens.push_back(a.num() * (sigma / a.den()));
  return s;
}

void enumerate(const std::vector<BigInt>& gens, std::size_t idx, const BigInt& remaining,
               std::vector<std::uint64_t>& counts, std::vector<Factorization>& out) {
  if (idx == gens.size()) {
    if (remaining.is_zero()) out.push_back(Factorization{counts});
    return;
  }
  for (BigInt c = 0; c * gens[idx] <= remaining; ++c) {
    counts[idx] = c.convert_to<std::uint64_t>();
    enumerate(gens, idx + 1, remaining - c * gens[idx], counts, out);
  }
  counts[idx] = 0;
}

}  // namespace

std::vector<Factorization> naive_factorizations(const std::vector<Rat>& atoms, const Rat& x,
                                                const Limits& limits) {
  if (x.is_zero()) return {Factorization{std::vector<std::uint64_t>(atoms.size(), 0)}};
  if (atoms.empty()) return {};
  Scaled s = rescale(atoms, x, limits);
  if (!s.integral) return {};

  std::vector<Factorization> out;
  std::vector<std::uint64_t> counts(atoms.size(), 0);
  enumerate(s.gens, 0, s.target, counts, out);
  std::sort(out.begin(), out.end(),
            [](const Factorization& a, const Factorization& b) { return a.counts < b.counts; });
  return out;
}

bool naive_member(const std::vector<Rat>& atoms, const Rat& x, const Limits& limits) {
  return !naive_factorizations(atoms, x, limits).empty();
}

std::vector<std::uint64_t> naive_length_set(const std::vector<Rat>& atoms, const Rat& x,
                                            const Limits& limits) {
  std::set<std::uint64_t> lengths;
  for (const Factorization& z : naive_factorizations(atoms, x, limits)) {
    lengths.insert(z.length());
  }
  return {lengths.begin(), lengths.end()};
}

}  // namespace puiseux::test_oracle
