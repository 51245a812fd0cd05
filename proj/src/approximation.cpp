#include "puiseux/approximation.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>

#include "puiseux/invariants.hpp"

namespace puiseux {

AtomStream::AtomStream(std::function<Rat(std::uint64_t)> generator,
                       std::optional<std::uint64_t> length, StreamInfo info)
    : generator_(std::move(generator)), length_(length), info_(std::move(info)) {}

Rat AtomStream::at(std::uint64_t i) const {
  if (i == 0) throw std::invalid_argument("stream indices are 1-based");
  if (length_ && i > *length_) {
    throw std::invalid_argument("stream has " + std::to_string(*length_) + " atoms, index " +
                                std::to_string(i) + " is out of range");
  }
  Rat value = generator_(i);
  if (value.is_zero()) throw std::logic_error("stream produced a zero atom");
  return value;
}

ReducedMonoid prefix_monoid(const AtomStream& s, std::uint64_t i) {
  if (i == 0) throw std::invalid_argument("prefix length must be at least 1");
  std::vector<Rat> atoms;
  atoms.reserve(i);
  for (std::uint64_t j = 1; j <= i; ++j) atoms.push_back(s.at(j));
  return normalize(atoms);
}

namespace {

ApproximationCheck validity_of(const std::vector<std::vector<Rat>>& step_atoms) {
  ApproximationCheck check;
  if (step_atoms.size() < 2) return check;  // Unchecked
  for (std::size_t k = 1; k < step_atoms.size(); ++k) {
    const std::vector<Rat>& prev = step_atoms[k - 1];
    const std::vector<Rat>& cur = step_atoms[k];
    if (!std::includes(cur.begin(), cur.end(), prev.begin(), prev.end())) {
      check.state = ApproximationCheck::State::Violated;
      check.violated_at = k + 1;  // steps are 1-based; k+1 broke the chain
      for (const Rat& a : prev) {
        if (!std::binary_search(cur.begin(), cur.end(), a)) {
          check.lost_atom = a;
          break;
        }
      }
      return check;
    }
  }
  check.state = ApproximationCheck::State::Valid;
  return check;
}

std::string reduction_warning(std::uint64_t step, const ReductionEvent& event) {
  std::ostringstream os;
  os << "step " << step << ": generator " << event.value.str()
     << (event.kind == ReductionEvent::Kind::Duplicate ? " dropped (duplicate)"
                                                       : " dropped (sum of other generators)");
  return os.str();
}

struct StepOutcome {
  ReducedMonoid monoid;
  StepValue value;
};

/// Evaluates one invariant on every prefix monoid. Steps are independent, so
/// they run concurrently; assembly stays in index order.
std::vector<StepOutcome> run_steps(const AtomStream& s, std::uint64_t depth, const Limits& limits,
                                   const std::function<StepValue(const ReducedMonoid&, const Limits&)>& eval) {
  if (depth == 0) throw std::invalid_argument("depth must be at least 1");
  if (s.length() && depth > *s.length()) {
    throw std::invalid_argument("depth " + std::to_string(depth) + " exceeds the stream length " +
                                std::to_string(*s.length()));
  }
  std::vector<Rat> atoms;
  atoms.reserve(depth);
  for (std::uint64_t i = 1; i <= depth; ++i) atoms.push_back(s.at(i));

  std::vector<std::future<StepOutcome>> futures;
  futures.reserve(depth);
  for (std::uint64_t i = 1; i <= depth; ++i) {
    futures.push_back(std::async(std::launch::async, [&atoms, i, limits, &eval]() {
      ReducedMonoid m = normalize(std::vector<Rat>(atoms.begin(), atoms.begin() + i));
      StepValue v = eval(m, limits);
      return StepOutcome{std::move(m), std::move(v)};
    }));
  }
  std::vector<StepOutcome> outcomes;
  outcomes.reserve(depth);
  for (auto& f : futures) outcomes.push_back(f.get());
  return outcomes;
}

ApproxReport assemble(SweepKind kind, const AtomStream& s, std::uint64_t depth,
                      const Limits& limits,
                      const std::function<StepValue(const ReducedMonoid&, const Limits&)>& eval) {
  std::vector<StepOutcome> outcomes = run_steps(s, depth, limits, eval);

  ApproxReport report;
  report.kind = kind;
  std::vector<std::vector<Rat>> step_atoms;
  for (std::uint64_t i = 0; i < depth; ++i) {
    report.steps.push_back(ApproxStep{i + 1, outcomes[i].monoid.atoms, outcomes[i].value});
    step_atoms.push_back(outcomes[i].monoid.atoms);
    for (const ReductionEvent& event : outcomes[i].monoid.removed) {
      report.warnings.push_back(reduction_warning(i + 1, event));
    }
  }
  report.validity = validity_of(step_atoms);
  return report;
}

const SetValue& step_set(const ApproxStep& step) { return std::get<SetValue>(step.value.value); }

std::vector<SetValue> set_payloads(const ApproxReport& report) {
  std::vector<SetValue> sets;
  sets.reserve(report.steps.size());
  for (const ApproxStep& step : report.steps) sets.push_back(step_set(step));
  return sets;
}

template <typename T>
std::size_t trailing_run_start(const std::vector<T>& values) {
  std::size_t first = values.size();
  while (first > 1 && values[first - 2] == values.back()) --first;
  return first;
}

/// Stabilization of the member-step ratio values, with stabilized_at mapped
/// back to step indices. A fully consumed finite stream is an exact chain:
/// its last value is the limit, so it counts as stabilized (window 1).
Stabilization ratio_stabilization(const ApproxReport& report, std::uint64_t window,
                                  bool whole_stream) {
  std::vector<ExtRat> values;
  std::vector<std::uint64_t> step_of;
  for (const ApproxStep& step : report.steps) {
    if (!step.value.member) continue;
    values.push_back(std::get<ExtRat>(step.value.value));
    step_of.push_back(step.index);
  }
  if (values.empty()) return Stabilization{Stabilization::Kind::TooShort, std::nullopt, window};
  if (whole_stream) {
    return Stabilization{Stabilization::Kind::Stabilized,
                         step_of[trailing_run_start(values) - 1], 1};
  }
  std::uint64_t w = std::min<std::uint64_t>(window, values.size());
  Stabilization st = detect_stabilization(values, w);
  st.window = window;
  if (st.stabilized_at) st.stabilized_at = step_of[static_cast<std::size_t>(*st.stabilized_at - 1)];
  return st;
}

Stabilization set_stabilization(const ApproxReport& report, std::uint64_t window,
                                bool whole_stream) {
  std::vector<SetValue> sets = set_payloads(report);
  if (sets.empty()) return Stabilization{Stabilization::Kind::TooShort, std::nullopt, window};
  if (whole_stream) {
    return Stabilization{Stabilization::Kind::Stabilized, trailing_run_start(sets), 1};
  }
  std::uint64_t w = std::min<std::uint64_t>(window, sets.size());
  Stabilization st = detect_stabilization(sets, w);
  st.window = window;
  return st;
}

/// A fully consumed finite stream IS the limit monoid, unless the family
/// metadata says the true family extends past the stream (a numerator shared
/// by infinitely many atoms, or 0 as a limit point); then the stream is just
/// a truncation and windowed semantics stay in force.
bool exact_chain(const AtomStream& s, std::uint64_t depth) {
  if (!s.length() || depth != *s.length()) return false;
  if (s.info().stable_numerator) return false;
  if (s.info().zero_limit_point && *s.info().zero_limit_point) return false;
  return true;
}

std::vector<ExtRat> member_ratios(const ApproxReport& report) {
  std::vector<ExtRat> values;
  for (const ApproxStep& step : report.steps) {
    if (step.value.member) values.push_back(std::get<ExtRat>(step.value.value));
  }
  return values;
}

bool strictly_increasing_tail(const std::vector<ExtRat>& values, std::uint64_t window) {
  if (window < 2 || values.size() < window) return false;
  for (std::size_t j = values.size() - window + 1; j < values.size(); ++j) {
    if (!(values[j - 1] < values[j])) return false;
  }
  return true;
}

void ratio_divergence(ApproxReport& report, const AtomStream& s, std::uint64_t window) {
  // An exact chain reached the limit monoid itself; nothing diverges.
  if (exact_chain(s, report.steps.size())) return;
  std::vector<ExtRat> values = member_ratios(report);
  const ExtRat threshold{Rat(BigInt(1000), BigInt(1))};

  if (strictly_increasing_tail(values, window) && !values.empty() && values.back() > threshold) {
    report.divergence.reasons.push_back(
        "values strictly increase across the final window and exceed 1000");
  }
  if (report.kind == SweepKind::MonoidElasticity) {
    if (s.info().zero_limit_point.has_value()) {
      if (*s.info().zero_limit_point) {
        report.divergence.reasons.push_back(
            "family metadata: 0 is a limit point of the atoms, so elasticities grow without bound");
      }
    } else if (!report.steps.empty() && !report.steps.back().atoms.empty()) {
      const Rat& smallest = report.steps.back().atoms.front();
      if (smallest < Rat(BigInt(1), BigInt(1'000'000))) {
        report.divergence.reasons.push_back(
            "smallest atom in the window is below 1/1000000 (0 may be a limit point)");
      }
    }
  }
  if (report.kind == SweepKind::LocalElasticity && s.info().stable_numerator &&
      strictly_increasing_tail(values, std::min<std::uint64_t>(window, values.size()))) {
    report.divergence.reasons.push_back(
        "family metadata: infinitely many atoms share the numerator " +
        s.info().stable_numerator->str() + ", so local elasticities are eventually unbounded");
  }
  report.divergence.suspected = !report.divergence.reasons.empty();
}

void ratio_monotone(ApproxReport& report) {
  if (report.validity.state != ApproximationCheck::State::Valid) return;
  std::vector<ExtRat> values = member_ratios(report);
  bool ok = true;
  for (std::size_t j = 1; j < values.size(); ++j) {
    if (values[j] < values[j - 1]) ok = false;
  }
  report.monotone = ok;
}

void ratio_limit(ApproxReport& report) {
  std::vector<ExtRat> values = member_ratios(report);
  if (values.empty()) {
    report.limit_estimate = StepValue{false, SetValue{}};
  } else {
    report.limit_estimate = StepValue{true, values.back()};
  }
}

}  // namespace

ApproximationCheck check_approximation(const AtomStream& s, std::uint64_t depth,
                                       const Limits& limits) {
  (void)limits;
  if (depth == 0) throw std::invalid_argument("depth must be at least 1");
  if (s.length() && depth > *s.length()) {
    throw std::invalid_argument("depth " + std::to_string(depth) + " exceeds the stream length " +
                                std::to_string(*s.length()));
  }
  std::vector<std::vector<Rat>> step_atoms;
  std::vector<Rat> atoms;
  for (std::uint64_t i = 1; i <= depth; ++i) {
    atoms.push_back(s.at(i));
    step_atoms.push_back(normalize(atoms).atoms);
  }
  return validity_of(step_atoms);
}

ApproxReport approx_length_set(const AtomStream& s, const Rat& x, std::uint64_t depth,
                               std::uint64_t window, const Limits& limits) {
  if (window == 0) throw std::invalid_argument("window must be at least 1");
  ApproxReport report = assemble(
      SweepKind::LengthSet, s, depth, limits,
      [&x](const ReducedMonoid& m, const Limits& l) {
        LengthSet ls = length_set(m, x, l);
        return StepValue{ls.member, SetValue(ls.lengths)};
      });
  report.x = x;

  std::set<std::uint64_t> running;
  for (const ApproxStep& step : report.steps) {
    const SetValue& sv = step_set(step);
    running.insert(sv.begin(), sv.end());
  }
  bool any_member = std::any_of(report.steps.begin(), report.steps.end(),
                                [](const ApproxStep& st) { return st.value.member; });
  report.limit_estimate = StepValue{any_member, SetValue(running.begin(), running.end())};
  report.stabilization = set_stabilization(report, window, exact_chain(s, depth));
  return report;
}

ApproxReport approx_elasticity(const AtomStream& s, std::uint64_t depth, std::optional<Rat> x,
                               std::uint64_t window, const Limits& limits) {
  if (window == 0) throw std::invalid_argument("window must be at least 1");
  SweepKind kind = x ? SweepKind::ElementElasticity : SweepKind::MonoidElasticity;
  ApproxReport report = assemble(
      kind, s, depth, limits,
      [&x](const ReducedMonoid& m, const Limits& l) {
        if (x) {
          std::optional<Rat> rho = elasticity_of_element(m, *x, l);
          if (!rho) return StepValue{false, ExtRat()};
          return StepValue{true, ExtRat(*rho)};
        }
        const Rat& lo = m.atoms.front();
        const Rat& hi = m.atoms.back();
        return StepValue{true, ExtRat(Rat(hi.num() * lo.den(), hi.den() * lo.num()))};
      });
  report.x = x;
  ratio_limit(report);
  report.stabilization = ratio_stabilization(report, window, exact_chain(s, depth));
  ratio_divergence(report, s, window);
  ratio_monotone(report);
  return report;
}

ApproxReport approx_local_elasticity(const AtomStream& s, std::uint64_t n, std::uint64_t depth,
                                     std::uint64_t window, const Limits& limits) {
  if (window == 0) throw std::invalid_argument("window must be at least 1");
  ApproxReport report = assemble(
      SweepKind::LocalElasticity, s, depth, limits,
      [n](const ReducedMonoid& m, const Limits& l) {
        return StepValue{true, ExtRat(Rat(BigInt(local_elasticity(m, n, l)), BigInt(1)))};
      });
  report.n = n;
  ratio_limit(report);
  report.stabilization = ratio_stabilization(report, window, exact_chain(s, depth));
  ratio_divergence(report, s, window);
  ratio_monotone(report);
  return report;
}

ApproxReport approx_delta(const AtomStream& s, std::uint64_t depth, std::optional<Rat> x,
                          std::optional<Rat> bound, std::uint64_t window, const Limits& limits) {
  if (window == 0) throw std::invalid_argument("window must be at least 1");
  if (depth < 2) throw std::invalid_argument("a delta sweep needs depth at least 2");
  if (x && bound) throw std::invalid_argument("delta sweep takes x or a bound, not both");

  SweepKind kind = x ? SweepKind::ElementDelta : SweepKind::MonoidDelta;
  std::optional<Rat> resolved = bound;
  if (!x && !resolved) {
    // Fixed bound across steps, taken from the deepest prefix's default.
    ReducedMonoid deepest = prefix_monoid(s, depth);
    BigInt gmax = deepest.trivial() ? BigInt(1) : deepest.gens_int.back();
    resolved = Rat(4 * gmax * gmax, deepest.scale);
  }

  ApproxReport report = assemble(
      kind, s, depth, limits,
      [&x, &resolved](const ReducedMonoid& m, const Limits& l) {
        if (x) {
          DeltaSet d = delta_of_element(m, *x, l);
          return StepValue{d.member, SetValue(d.gaps)};
        }
        BoundedDeltaReport d = monoid_delta_bounded(m, resolved, l);
        return StepValue{true, SetValue(d.deltas)};
      });
  report.x = x;
  report.bound = x ? std::optional<Rat>{} : resolved;
  report.limit_estimate = StepValue{true, set_liminf_estimate(set_payloads(report))};
  report.stabilization = set_stabilization(report, window, exact_chain(s, depth));
  return report;
}

SetValue set_liminf_estimate(const std::vector<SetValue>& sets) {
  if (sets.empty()) throw std::invalid_argument("liminf estimate needs at least one set");
  if (sets.size() == 1) return sets[0];

  bool nested = true;
  for (std::size_t j = 1; j < sets.size() && nested; ++j) {
    nested = std::includes(sets[j].begin(), sets[j].end(), sets[j - 1].begin(), sets[j - 1].end());
  }
  if (nested) return sets.back();  // increasing chain: the limit is the union

  // Union over start points of tail intersections; the single-set tail term
  // is excluded so the last step cannot absorb the estimate on its own.
  std::set<std::uint64_t> acc;
  for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
    SetValue inter = sets[i];
    for (std::size_t j = i + 1; j < sets.size() && !inter.empty(); ++j) {
      SetValue next;
      std::set_intersection(inter.begin(), inter.end(), sets[j].begin(), sets[j].end(),
                            std::back_inserter(next));
      inter = std::move(next);
    }
    acc.insert(inter.begin(), inter.end());
  }
  return SetValue(acc.begin(), acc.end());
}

SetValue set_limsup_estimate(const std::vector<SetValue>& sets) {
  if (sets.empty()) throw std::invalid_argument("limsup estimate needs at least one set");
  if (sets.size() == 1) return sets[0];

  std::vector<SetValue> suffix_union(sets.size());
  suffix_union.back() = sets.back();
  for (std::size_t j = sets.size() - 1; j-- > 0;) {
    SetValue u;
    std::set_union(sets[j].begin(), sets[j].end(), suffix_union[j + 1].begin(),
                   suffix_union[j + 1].end(), std::back_inserter(u));
    suffix_union[j] = std::move(u);
  }
  SetValue inter = suffix_union[0];
  for (std::size_t i = 1; i + 1 < sets.size(); ++i) {  // single-set tail excluded
    SetValue next;
    std::set_intersection(inter.begin(), inter.end(), suffix_union[i].begin(),
                          suffix_union[i].end(), std::back_inserter(next));
    inter = std::move(next);
  }
  return inter;
}

namespace {

template <typename T>
Stabilization detect_impl(const std::vector<T>& values, std::uint64_t window,
                          bool ratios_may_increase) {
  if (window == 0) throw std::invalid_argument("window must be at least 1");
  if (values.empty() || window > values.size()) {
    throw std::invalid_argument("window of " + std::to_string(window) + " exceeds the " +
                                std::to_string(values.size()) + " collected values");
  }
  const T& last = values.back();
  bool constant = true;
  for (std::size_t j = values.size() - window; j < values.size(); ++j) {
    if (!(values[j] == last)) constant = false;
  }
  if (constant) {
    std::size_t first = values.size();
    while (first > 1 && values[first - 2] == last) --first;
    return Stabilization{Stabilization::Kind::Stabilized, first, window};
  }
  if (ratios_may_increase) {
    bool increasing = window >= 2;
    for (std::size_t j = values.size() - window + 1; j < values.size() && increasing; ++j) {
      if (!(values[j - 1] < values[j])) increasing = false;
    }
    if (increasing) return Stabilization{Stabilization::Kind::Increasing, std::nullopt, window};
  }
  return Stabilization{Stabilization::Kind::Varying, std::nullopt, window};
}

}  // namespace

Stabilization detect_stabilization(const std::vector<SetValue>& values, std::uint64_t window) {
  return detect_impl(values, window, false);
}

Stabilization detect_stabilization(const std::vector<ExtRat>& values, std::uint64_t window) {
  return detect_impl(values, window, true);
}

}  // namespace puiseux
