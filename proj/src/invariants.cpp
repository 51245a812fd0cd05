#include "puiseux/invariants.hpp"

#include <algorithm>
#include <set>

#include "puiseux/detail/intform.hpp"
#include "puiseux/detail/knapsack.hpp"

namespace puiseux {

namespace {

constexpr std::uint64_t kDefaultWitnessExtent = 1'000'000;

}  // namespace

ElasticityReport monoid_elasticity(const ReducedMonoid& m, std::optional<Rat> bound,
                                   const Limits& limits) {
  ElasticityReport report;
  if (m.trivial()) {
    // Only 0 lives here; its elasticity is 1 by convention.
    report.value = ExtRat(Rat(BigInt(1), BigInt(1)));
    report.search = ElasticityReport::WitnessSearch::Found;
    report.witness = Rat();
    report.search_bound = Rat();
    return report;
  }

  const Rat& lo = m.atoms.front();
  const Rat& hi = m.atoms.back();
  report.value = ExtRat(Rat(hi.num() * lo.den(), hi.den() * lo.num()));

  std::vector<std::uint64_t> gens = detail::reduced_gens(m, limits);
  std::uint64_t g0 = gens.front();
  std::uint64_t gmax = gens.back();

  std::uint64_t extent;
  if (bound) {
    extent = detail::reduced_extent(m, *bound, limits);
  } else {
    BigInt l = 1;
    for (std::uint64_t g : gens) l = boost::multiprecision::lcm(l, BigInt(g));
    BigInt e = l * gmax;
    BigInt cap = std::min<BigInt>(BigInt(kDefaultWitnessExtent), BigInt(limits.dp_value_cap));
    extent = (e > cap ? cap : e).convert_to<std::uint64_t>();
  }
  report.search_bound = detail::element_from_reduced(m, extent);

  if (gmax > extent) return report;  // value needs the largest atom; nothing below qualifies
  if ((extent + 1) * 16 > limits.memory_budget_bytes) {
    throw CapExceeded("witness search extent " + std::to_string(extent) +
                      " exceeds the memory budget");
  }

  detail::MinMaxLengths mm = detail::minmax_lengths(gens, extent);
  for (std::uint64_t u = 1; u <= extent; ++u) {
    if (mm.min[u] <= 0) continue;
    // elasticity(u) = max/min equals gmax/g0 exactly when the cross products agree
    if (static_cast<std::uint64_t>(mm.max[u]) * g0 ==
        static_cast<std::uint64_t>(mm.min[u]) * gmax) {
      report.search = ElasticityReport::WitnessSearch::Found;
      report.witness = detail::element_from_reduced(m, u);
      break;
    }
  }
  return report;
}

UnionReport union_of_lengths(const ReducedMonoid& m, std::uint64_t n, const Limits& limits) {
  if (n == 0) throw std::invalid_argument("union of sets of lengths needs n >= 1");
  if (m.trivial()) throw std::invalid_argument("union of sets of lengths needs at least one atom");

  std::vector<std::uint64_t> gens = detail::reduced_gens(m, limits);
  std::uint64_t g0 = gens.front();
  std::uint64_t gmax = gens.back();
  if (gmax != 0 && n > limits.dp_value_cap / gmax) {
    throw CapExceeded("union sweep extent " + std::to_string(n) + " * " + std::to_string(gmax) +
                      " exceeds the integer-side value cap");
  }
  std::uint64_t extent = n * gmax;
  std::uint64_t first = n * g0;

  std::set<std::uint64_t> members;
  bool swept = detail::sweep_length_rows(
      gens, extent, limits.memory_budget_bytes,
      [&](std::uint64_t v, const detail::BitRow& row) {
        if (v < first || !row.test(n)) return;
        for (std::uint64_t l : row.bits()) members.insert(l);
      });
  if (!swept) {
    throw CapExceeded("union sweep to " + std::to_string(extent) +
                      " exceeds the memory budget for length tables");
  }

  UnionReport report;
  report.n = n;
  report.members.assign(members.begin(), members.end());
  report.lambda = report.members.front();
  report.rho = report.members.back();
  return report;
}

std::uint64_t local_elasticity(const ReducedMonoid& m, std::uint64_t n, const Limits& limits) {
  return union_of_lengths(m, n, limits).rho;
}

BoundedDeltaReport monoid_delta_bounded(const ReducedMonoid& m, std::optional<Rat> bound,
                                        const Limits& limits) {
  BoundedDeltaReport report;
  if (m.trivial()) {
    report.bound = bound.value_or(Rat());
    return report;
  }

  if (bound) {
    report.bound = *bound;
  } else {
    BigInt gmax = m.gens_int.back();
    report.bound = Rat(4 * gmax * gmax, m.scale);
  }
  std::uint64_t extent = detail::reduced_extent(m, report.bound, limits);
  std::vector<std::uint64_t> gens = detail::reduced_gens(m, limits);

  std::set<std::uint64_t> deltas;
  bool swept = detail::sweep_length_rows(
      gens, extent, limits.memory_budget_bytes,
      [&](std::uint64_t v, const detail::BitRow& row) {
        std::vector<std::uint64_t> lengths = row.bits();
        for (std::size_t j = 1; j < lengths.size(); ++j) {
          std::uint64_t d = lengths[j] - lengths[j - 1];
          if (deltas.insert(d).second) {
            report.witnesses.emplace(
                d, DeltaWitness{detail::element_from_reduced(m, v), lengths[j - 1]});
          }
        }
      });
  if (!swept) {
    throw CapExceeded("delta sweep to extent " + std::to_string(extent) +
                      " exceeds the memory budget for length tables");
  }

  report.deltas.assign(deltas.begin(), deltas.end());
  return report;
}

}  // namespace puiseux
