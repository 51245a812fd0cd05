#ifndef PUISEUX_REPORT_JSON_HPP
#define PUISEUX_REPORT_JSON_HPP

#include <optional>
#include <vector>

#include <json.hpp>

#include "puiseux/approximation.hpp"
#include "puiseux/families.hpp"
#include "puiseux/invariants.hpp"
#include "puiseux/monoid.hpp"

namespace puiseux {

// Insertion-ordered documents keep every emission byte-stable.
using Json = nlohmann::ordered_json;

/// Everything the element subcommands report about one x: its length set,
/// the gaps, the elasticity, and optionally the factorizations themselves.
struct ElementReport {
  bool member = true;
  std::vector<std::uint64_t> lengths;
  std::vector<std::uint64_t> gaps;
  std::optional<Rat> rho;  // absent exactly when x is not in the monoid
  std::optional<std::vector<Factorization>> factorizations;

  friend bool operator==(const ElementReport&, const ElementReport&) = default;
};

ElementReport element_report(const ReducedMonoid& m, const Rat& x, bool with_factorizations,
                             const Limits& limits = {});

Json to_json(const ElementReport& r);
Json to_json(const ElasticityReport& r);
Json to_json(const UnionReport& r);
Json to_json(const BoundedDeltaReport& r);
Json to_json(const ApproxReport& r);
Json to_json(const FamilySpec& spec);
Json monoid_to_json(const ReducedMonoid& m);

ElementReport element_report_from_json(const Json& j);
ElasticityReport elasticity_report_from_json(const Json& j);
UnionReport union_report_from_json(const Json& j);
BoundedDeltaReport bounded_delta_report_from_json(const Json& j);
ApproxReport approx_report_from_json(const Json& j);
FamilySpec family_spec_from_json(const Json& j);

/// True when the document describes a family rather than a plain atom list.
bool is_family_document(const Json& j);

/// Atom list of a {"atoms": [...]} document.
std::vector<Rat> atoms_from_json(const Json& j);

const char* sweep_kind_name(SweepKind kind);
SweepKind sweep_kind_from_name(const std::string& name);

}  // namespace puiseux

#endif  // PUISEUX_REPORT_JSON_HPP
