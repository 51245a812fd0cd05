#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "puiseux/monoid.hpp"
#include "puiseux/rational.hpp"

namespace puiseux {

/// Metadata a family attaches to its stream. Flags that cannot be decided
/// from a finite window (atomicity, zero as a limit point, a shared
/// numerator across infinitely many atoms) travel here.
struct StreamInfo {
  std::string family = "explicit";
  bool atomic_guaranteed = false;
  bool ascending = false;                    // values strictly increase with the index
  std::optional<BigInt> stable_numerator;    // infinitely many atoms share this numerator
  std::optional<bool> zero_limit_point;      // 0 is a limit point of the limit monoid
  std::optional<BigInt> common_offset;       // shared |numerator - denominator| of the bases

  friend bool operator==(const StreamInfo&, const StreamInfo&) = default;
};

/// Pure 1-based index -> atom view of a (possibly infinite) generator
/// sequence. Values must be positive; finite streams reject indices past
/// their length.
class AtomStream {
 public:
  AtomStream(std::function<Rat(std::uint64_t)> generator, std::optional<std::uint64_t> length,
             StreamInfo info);

  Rat at(std::uint64_t i) const;
  std::optional<std::uint64_t> length() const { return length_; }
  const StreamInfo& info() const { return info_; }

 private:
  std::function<Rat(std::uint64_t)> generator_;
  std::optional<std::uint64_t> length_;
  StreamInfo info_;
};

/// Monoid generated by the first i stream atoms (normalized, so prefix atoms
/// eliminated as non-minimal are recorded in the result).
ReducedMonoid prefix_monoid(const AtomStream& s, std::uint64_t i);

/// Do the first `depth` prefixes form an increasing chain whose atom sets
/// nest? Violated means some atom of step k-1 is no longer an atom at step k.
struct ApproximationCheck {
  enum class State { Valid, Violated, Unchecked };
  State state = State::Unchecked;
  std::optional<std::uint64_t> violated_at;  // the breaking step k
  std::optional<Rat> lost_atom;

  friend bool operator==(const ApproximationCheck&, const ApproximationCheck&) = default;
};
ApproximationCheck check_approximation(const AtomStream& s, std::uint64_t depth,
                                       const Limits& limits = {});

// ---------------------------------------------------------------------------
// Sweeps: evaluate one invariant on every prefix monoid N_1 .. N_depth.
// ---------------------------------------------------------------------------

enum class SweepKind {
  LengthSet,
  ElementElasticity,
  MonoidElasticity,
  LocalElasticity,
  ElementDelta,
  MonoidDelta,
};

using SetValue = std::vector<std::uint64_t>;  // ascending, duplicate-free

/// Value of one step: a length/delta/union set or a ratio, with member false
/// when the queried element is not yet in that prefix.
struct StepValue {
  bool member = true;
  std::variant<SetValue, ExtRat> value = SetValue{};

  friend bool operator==(const StepValue&, const StepValue&) = default;
};

struct ApproxStep {
  std::uint64_t index = 0;  // i, 1-based
  std::vector<Rat> atoms;   // atoms of N_i
  StepValue value;

  friend bool operator==(const ApproxStep&, const ApproxStep&) = default;
};

struct Stabilization {
  enum class Kind { Stabilized, Increasing, Varying, TooShort };
  Kind kind = Kind::TooShort;
  std::optional<std::uint64_t> stabilized_at;  // first index of the constant tail
  std::uint64_t window = 3;

  friend bool operator==(const Stabilization&, const Stabilization&) = default;
};

struct Divergence {
  bool suspected = false;
  std::vector<std::string> reasons;

  friend bool operator==(const Divergence&, const Divergence&) = default;
};

struct ApproxReport {
  SweepKind kind = SweepKind::LengthSet;
  std::optional<Rat> x;
  std::optional<std::uint64_t> n;
  std::optional<Rat> bound;
  std::vector<ApproxStep> steps;
  ApproximationCheck validity;
  std::vector<std::string> warnings;
  StepValue limit_estimate;
  Stabilization stabilization;
  Divergence divergence;
  std::optional<bool> monotone;  // ratio sweeps under a valid chain

  friend bool operator==(const ApproxReport&, const ApproxReport&) = default;
};

/// L_{N_i}(x) per step; the limit estimate is the running union, which
/// exhausts the length set of the limit monoid from below on valid chains.
ApproxReport approx_length_set(const AtomStream& s, const Rat& x, std::uint64_t depth,
                               std::uint64_t window = 3, const Limits& limits = {});

/// Elasticity per step: of x when given, of the whole prefix otherwise.
ApproxReport approx_elasticity(const AtomStream& s, std::uint64_t depth,
                               std::optional<Rat> x = {}, std::uint64_t window = 3,
                               const Limits& limits = {});

/// Local elasticity (max of the union of length sets at n) per step.
ApproxReport approx_local_elasticity(const AtomStream& s, std::uint64_t n, std::uint64_t depth,
                                     std::uint64_t window = 3, const Limits& limits = {});

/// Delta sets per step: of x when given, of the whole prefix below `bound`
/// otherwise. The limit estimate is the finite-window liminf, which contains
/// the delta set of the limit monoid (the containment can be strict).
ApproxReport approx_delta(const AtomStream& s, std::uint64_t depth, std::optional<Rat> x = {},
                          std::optional<Rat> bound = {}, std::uint64_t window = 3,
                          const Limits& limits = {});

// ---------------------------------------------------------------------------
// Set-sequence limits over a finite window.
// ---------------------------------------------------------------------------

/// Finite-window liminf estimate. Windows that are nested ascending return
/// the running union (their limit); otherwise the union of tail
/// intersections, excluding the degenerate single-set tail term.
SetValue set_liminf_estimate(const std::vector<SetValue>& sets);

/// Finite-window limsup estimate: intersection of tail unions, excluding the
/// degenerate single-set tail term.
SetValue set_limsup_estimate(const std::vector<SetValue>& sets);

/// Classifies the last `window` values. Sets are either constant or varying;
/// ratios may also be strictly increasing. stabilized_at is the first index
/// (1-based) of the run of values equal to the final one.
Stabilization detect_stabilization(const std::vector<SetValue>& values, std::uint64_t window);
Stabilization detect_stabilization(const std::vector<ExtRat>& values, std::uint64_t window);

}  // namespace puiseux
