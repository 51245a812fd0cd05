#include "puiseux/families.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace puiseux {

namespace {

const Rat& one() {
  static const Rat value{BigInt(1)};
  return value;
}

BigInt offset_of(const Rat& b) {
  return b.num() > b.den() ? BigInt(b.num() - b.den()) : BigInt(b.den() - b.num());
}

/// Ascending merge of the power sequences of several bases > 1. Lazily
/// extended behind a mutex so the stream stays a pure index -> value view.
struct AscendingPowers {
  std::vector<Rat> bases;
  std::mutex mu;
  std::vector<Rat> emitted{one()};  // every base contributes b^0 = 1 once

  struct Entry {
    Rat value;
    std::size_t base;
    std::uint64_t exponent;
  };
  struct ByValueDesc {
    bool operator()(const Entry& a, const Entry& b) const { return b.value < a.value; }
  };
  std::priority_queue<Entry, std::vector<Entry>, ByValueDesc> heap;

  explicit AscendingPowers(std::vector<Rat> bs) : bases(std::move(bs)) {
    for (std::size_t k = 0; k < bases.size(); ++k) heap.push(Entry{bases[k], k, 1});
  }

  Rat at(std::uint64_t i) {
    std::lock_guard<std::mutex> lock(mu);
    while (emitted.size() < i) {
      Entry e = heap.top();
      heap.pop();
      heap.push(Entry{e.value * bases[e.base], e.base, e.exponent + 1});
      if (e.value == emitted.back()) continue;
      emitted.push_back(e.value);
    }
    return emitted[i - 1];
  }
};

}  // namespace

AtomStream cyclic_stream(const Rat& r) {
  if (r.is_zero()) throw std::invalid_argument("cyclic base must be positive");
  if (r.is_integer()) {
    throw std::invalid_argument("cyclic base " + r.str() +
                                " is a natural number; its powers generate a free monoid");
  }
  if (r < one() && r.num() == 1) {
    throw std::invalid_argument("cyclic base " + r.str() +
                                " has numerator 1 and lies below 1; that monoid has no atoms");
  }
  StreamInfo info;
  info.family = "cyclic";
  info.atomic_guaranteed = true;
  info.ascending = one() < r;
  info.zero_limit_point = r < one();
  return AtomStream([r](std::uint64_t i) { return pow(r, i - 1); }, std::nullopt, info);
}

AtomStream example46_stream(const Rat& r, std::uint64_t i) {
  if (r.is_zero() || !(one() < r)) {
    throw std::invalid_argument("base must exceed 1, got " + r.str());
  }
  if (r.is_integer()) {
    throw std::invalid_argument("base " + r.str() +
                                " is a natural number; its powers generate a free monoid");
  }
  if (i == 0) throw std::invalid_argument("the odd-power count i must be at least 1");

  StreamInfo info;
  info.family = "example46";
  info.atomic_guaranteed = true;
  info.ascending = true;
  info.zero_limit_point = false;
  // Exponents ascend 0, 1, ..., 2i, then continue through the even numbers.
  return AtomStream(
      [r, i](std::uint64_t j) {
        std::uint64_t e = (j <= 2 * i + 1) ? j - 1 : 2 * j - 2 * i - 2;
        return pow(r, e);
      },
      std::nullopt, info);
}

AtomStream multicyclic_stream(const std::vector<Rat>& bases) {
  if (bases.empty()) throw std::invalid_argument("the base list must be nonempty");

  std::vector<Rat> unique;
  for (const Rat& b : bases) {
    if (std::find(unique.begin(), unique.end(), b) == unique.end()) unique.push_back(b);
  }
  for (const Rat& b : unique) {
    if (b.is_zero()) throw std::invalid_argument("base must be positive");
    if (b.is_integer()) {
      throw std::invalid_argument("base " + b.str() +
                                  " is a natural number; bases must be non-integer");
    }
    if (b.num() == 1) {
      throw std::invalid_argument("base " + b.str() + " has numerator 1; numerators must exceed 1");
    }
  }
  for (std::size_t a = 0; a < unique.size(); ++a) {
    for (std::size_t b = a + 1; b < unique.size(); ++b) {
      BigInt g = boost::multiprecision::gcd(unique[a].den(), unique[b].den());
      if (g != 1) {
        std::ostringstream os;
        os << "bases " << unique[a].str() << " and " << unique[b].str()
           << " share the denominator factor " << g << "; denominators must be pairwise coprime";
        throw std::invalid_argument(os.str());
      }
      if (offset_of(unique[a]) != offset_of(unique[b])) {
        std::ostringstream os;
        os << "bases " << unique[a].str() << " and " << unique[b].str()
           << " have different numerator-denominator gaps (" << offset_of(unique[a]) << " vs "
           << offset_of(unique[b]) << "); the gap must be shared";
        throw std::invalid_argument(os.str());
      }
    }
  }

  bool all_above_one = std::all_of(unique.begin(), unique.end(),
                                   [](const Rat& b) { return one() < b; });
  StreamInfo info;
  info.family = "multicyclic";
  info.atomic_guaranteed = true;
  info.ascending = all_above_one;
  info.zero_limit_point = !all_above_one;
  info.common_offset = offset_of(unique.front());

  if (all_above_one) {
    auto state = std::make_shared<AscendingPowers>(unique);
    return AtomStream([state](std::uint64_t i) { return state->at(i); }, std::nullopt, info);
  }
  // With a base below 1 no ascending order exists; emit 1 and then the
  // exponent-t powers of every base in rounds, so each power has a finite
  // index. Distinct bases never collide past exponent 0: their reduced
  // denominators are coprime powers of distinct values.
  std::size_t width = unique.size();
  auto shared = std::make_shared<std::vector<Rat>>(unique);
  return AtomStream(
      [shared, width](std::uint64_t i) {
        if (i == 1) return one();
        std::uint64_t t = (i - 2) / width + 1;
        std::size_t pos = static_cast<std::size_t>((i - 2) % width);
        return pow((*shared)[pos], t);
      },
      std::nullopt, info);
}

namespace {

const std::vector<std::uint64_t>& first_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    const std::size_t bound = 104730;  // the 10^4-th prime is 104729
    std::vector<bool> composite(bound + 1, false);
    std::vector<std::uint64_t> ps;
    for (std::size_t p = 2; p <= bound; ++p) {
      if (composite[p]) continue;
      ps.push_back(p);
      for (std::size_t q = p * p; q <= bound; q += p) composite[q] = true;
    }
    return ps;
  }();
  return primes;
}

}  // namespace

AtomStream unit_fraction_prime_stream(std::uint64_t count) {
  if (count == 0) throw std::invalid_argument("count must be at least 1");
  if (count > 10'000) {
    throw std::invalid_argument("count " + std::to_string(count) +
                                " exceeds the supported 10^4 primes");
  }
  auto atoms = std::make_shared<std::vector<Rat>>();
  atoms->reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    atoms->push_back(Rat(BigInt(1), BigInt(first_primes()[k])));
  }
  StreamInfo info;
  info.family = "unit_fraction_primes";
  info.atomic_guaranteed = true;
  info.ascending = false;
  info.stable_numerator = BigInt(1);
  // Family-level hint: the full reciprocal-prime family accumulates at 0.
  info.zero_limit_point = true;
  return AtomStream([atoms](std::uint64_t i) { return (*atoms)[i - 1]; }, count, info);
}

AtomStream explicit_stream(std::vector<Rat> atoms) {
  if (atoms.empty()) throw std::invalid_argument("the atom list must be nonempty");
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (atoms[k].is_zero()) {
      throw std::invalid_argument("atom " + std::to_string(k + 1) + " must be positive");
    }
  }
  StreamInfo info;
  info.family = "explicit";
  info.ascending = std::adjacent_find(atoms.begin(), atoms.end(), [](const Rat& a, const Rat& b) {
                     return !(a < b);
                   }) == atoms.end();
  std::uint64_t length = atoms.size();
  auto shared = std::make_shared<std::vector<Rat>>(std::move(atoms));
  return AtomStream([shared](std::uint64_t i) { return (*shared)[i - 1]; }, length, info);
}

AtomStream make_stream(const FamilySpec& spec) {
  if (spec.family == "cyclic") {
    if (!spec.r) throw std::invalid_argument("the cyclic family needs r");
    return cyclic_stream(*spec.r);
  }
  if (spec.family == "example46") {
    if (!spec.r) throw std::invalid_argument("the example46 family needs r");
    if (!spec.i) throw std::invalid_argument("the example46 family needs i");
    return example46_stream(*spec.r, *spec.i);
  }
  if (spec.family == "multicyclic") {
    if (spec.base_list.empty()) throw std::invalid_argument("the multicyclic family needs B");
    return multicyclic_stream(spec.base_list);
  }
  if (spec.family == "unit_fraction_primes") {
    if (!spec.count) throw std::invalid_argument("the unit_fraction_primes family needs count");
    return unit_fraction_prime_stream(*spec.count);
  }
  if (spec.family == "explicit") {
    if (spec.atoms.empty()) throw std::invalid_argument("the explicit family needs atoms");
    return explicit_stream(spec.atoms);
  }
  throw std::invalid_argument("unknown family '" + spec.family + "'");
}

std::vector<Rat> truncate_stream_below(const AtomStream& s, const Rat& x, const Limits& limits) {
  std::vector<Rat> kept;
  if (s.length()) {
    for (std::uint64_t i = 1; i <= *s.length(); ++i) {
      Rat a = s.at(i);
      if (!(x < a)) kept.push_back(a);
    }
    return kept;
  }
  if (!s.info().ascending) {
    throw std::invalid_argument(
        "truncation needs a finite or ascending stream; this stream's atoms never all exceed " +
        x.str());
  }
  for (std::uint64_t i = 1;; ++i) {
    if (i > limits.truncation_scan_cap) {
      throw CapExceeded("truncation scanned " + std::to_string(limits.truncation_scan_cap) +
                        " atoms without exceeding " + x.str());
    }
    Rat a = s.at(i);
    if (x < a) break;
    kept.push_back(a);
  }
  return kept;
}

}  // namespace puiseux
