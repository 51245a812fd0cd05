#include "puiseux/report_json.hpp"

#include <algorithm>
#include <stdexcept>

namespace puiseux {

namespace {

Json rat_json(const Rat& x) { return Json(x.frac_str()); }

Rat rat_from(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a rational as a \"p/q\" string");
  return Rat::parse(j.get<std::string>());
}

Json extrat_json(const ExtRat& x) { return Json(x.frac_str()); }

ExtRat extrat_from(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a ratio as a \"p/q\" or \"inf\" string");
  std::string s = j.get<std::string>();
  if (s == "inf") return ExtRat::infinity();
  return ExtRat(Rat::parse(s));
}

std::vector<std::uint64_t> u64_list_from(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<std::uint64_t> out;
  for (const Json& e : j) {
    if (!e.is_number_unsigned()) {
      throw std::invalid_argument(std::string(what) + " entries must be nonnegative integers");
    }
    out.push_back(e.get<std::uint64_t>());
  }
  return out;
}

std::vector<Rat> rat_list_from(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<Rat> out;
  for (const Json& e : j) out.push_back(rat_from(e));
  return out;
}

}  // namespace

ElementReport element_report(const ReducedMonoid& m, const Rat& x, bool with_factorizations,
                             const Limits& limits) {
  ElementReport r;
  LengthSet ls = length_set(m, x, limits);
  r.member = ls.member;
  r.lengths = ls.lengths;
  for (std::size_t k = 1; k < r.lengths.size(); ++k) {
    r.gaps.push_back(r.lengths[k] - r.lengths[k - 1]);
  }
  std::sort(r.gaps.begin(), r.gaps.end());
  r.gaps.erase(std::unique(r.gaps.begin(), r.gaps.end()), r.gaps.end());
  if (r.member) {
    r.rho = r.lengths.front() == 0 ? Rat(BigInt(1))
                                   : Rat(BigInt(r.lengths.back()), BigInt(r.lengths.front()));
  }
  if (with_factorizations && r.member) r.factorizations = factorizations(m, x, limits);
  return r;
}

Json to_json(const ElementReport& r) {
  Json j = Json::object();
  if (!r.member) j["member"] = false;
  j["L"] = r.lengths;
  j["delta"] = r.gaps;
  j["rho"] = r.rho ? rat_json(*r.rho) : Json(nullptr);
  if (r.factorizations) {
    Json rows = Json::array();
    for (const Factorization& z : *r.factorizations) rows.push_back(z.counts);
    j["factorizations"] = rows;
  }
  return j;
}

ElementReport element_report_from_json(const Json& j) {
  ElementReport r;
  r.member = !(j.contains("member") && j.at("member").is_boolean() && !j.at("member").get<bool>());
  r.lengths = u64_list_from(j.at("L"), "L");
  r.gaps = u64_list_from(j.at("delta"), "delta");
  if (!j.at("rho").is_null()) r.rho = rat_from(j.at("rho"));
  if (j.contains("factorizations")) {
    std::vector<Factorization> zs;
    for (const Json& row : j.at("factorizations")) {
      zs.push_back(Factorization{u64_list_from(row, "factorization")});
    }
    r.factorizations = std::move(zs);
  }
  return r;
}

Json to_json(const ElasticityReport& r) {
  Json j = Json::object();
  j["rho"] = extrat_json(r.value);
  j["accepted"] = r.accepted();
  j["search"] = r.search == ElasticityReport::WitnessSearch::Found ? "found"
                                                                   : "not-found-below-bound";
  j["witness"] = r.witness ? rat_json(*r.witness) : Json(nullptr);
  j["bound"] = rat_json(r.search_bound);
  return j;
}

ElasticityReport elasticity_report_from_json(const Json& j) {
  ElasticityReport r;
  r.value = extrat_from(j.at("rho"));
  std::string search = j.at("search").get<std::string>();
  if (search == "found") {
    r.search = ElasticityReport::WitnessSearch::Found;
  } else if (search == "not-found-below-bound") {
    r.search = ElasticityReport::WitnessSearch::NotFoundBelowBound;
  } else {
    throw std::invalid_argument("unknown search state '" + search + "'");
  }
  if (!j.at("witness").is_null()) r.witness = rat_from(j.at("witness"));
  r.search_bound = rat_from(j.at("bound"));
  return r;
}

Json to_json(const UnionReport& r) {
  Json j = Json::object();
  j["n"] = r.n;
  j["U"] = r.members;
  j["rho"] = r.rho;
  j["lambda"] = r.lambda;
  return j;
}

UnionReport union_report_from_json(const Json& j) {
  UnionReport r;
  r.n = j.at("n").get<std::uint64_t>();
  r.members = u64_list_from(j.at("U"), "U");
  r.rho = j.at("rho").get<std::uint64_t>();
  r.lambda = j.at("lambda").get<std::uint64_t>();
  return r;
}

Json to_json(const BoundedDeltaReport& r) {
  Json j = Json::object();
  j["delta"] = r.deltas;
  j["bound"] = rat_json(r.bound);
  j["exact"] = r.exact;
  Json rows = Json::array();
  for (const auto& [d, w] : r.witnesses) {
    Json row = Json::object();
    row["delta"] = d;
    row["x"] = rat_json(w.element);
    row["length"] = w.lower_length;
    rows.push_back(row);
  }
  j["witnesses"] = rows;
  return j;
}

BoundedDeltaReport bounded_delta_report_from_json(const Json& j) {
  BoundedDeltaReport r;
  r.deltas = u64_list_from(j.at("delta"), "delta");
  r.bound = rat_from(j.at("bound"));
  r.exact = j.at("exact").get<bool>();
  for (const Json& row : j.at("witnesses")) {
    DeltaWitness w;
    w.element = rat_from(row.at("x"));
    w.lower_length = row.at("length").get<std::uint64_t>();
    r.witnesses.emplace(row.at("delta").get<std::uint64_t>(), std::move(w));
  }
  return r;
}

const char* sweep_kind_name(SweepKind kind) {
  switch (kind) {
    case SweepKind::LengthSet: return "length_set";
    case SweepKind::ElementElasticity: return "element_elasticity";
    case SweepKind::MonoidElasticity: return "monoid_elasticity";
    case SweepKind::LocalElasticity: return "local_elasticity";
    case SweepKind::ElementDelta: return "element_delta";
    case SweepKind::MonoidDelta: return "monoid_delta";
  }
  throw std::logic_error("unhandled sweep kind");
}

SweepKind sweep_kind_from_name(const std::string& name) {
  if (name == "length_set") return SweepKind::LengthSet;
  if (name == "element_elasticity") return SweepKind::ElementElasticity;
  if (name == "monoid_elasticity") return SweepKind::MonoidElasticity;
  if (name == "local_elasticity") return SweepKind::LocalElasticity;
  if (name == "element_delta") return SweepKind::ElementDelta;
  if (name == "monoid_delta") return SweepKind::MonoidDelta;
  throw std::invalid_argument("unknown sweep kind '" + name + "'");
}

namespace {

bool is_set_sweep(SweepKind kind) {
  return kind == SweepKind::LengthSet || kind == SweepKind::ElementDelta ||
         kind == SweepKind::MonoidDelta;
}

Json step_value_json(const StepValue& v) {
  if (std::holds_alternative<SetValue>(v.value)) return Json(std::get<SetValue>(v.value));
  if (!v.member) return Json(nullptr);  // placeholder ratio, not a value
  return extrat_json(std::get<ExtRat>(v.value));
}

StepValue step_value_from(const Json& member, const Json& value, bool set_payload) {
  StepValue v;
  v.member = member.get<bool>();
  if (set_payload) {
    v.value = u64_list_from(value, "value");
  } else if (value.is_null()) {
    v.value = ExtRat();
  } else {
    v.value = extrat_from(value);
  }
  return v;
}

std::string validity_string(const ApproximationCheck& c) {
  switch (c.state) {
    case ApproximationCheck::State::Valid: return "valid";
    case ApproximationCheck::State::Unchecked: return "unchecked";
    case ApproximationCheck::State::Violated:
      return "violated-at-step-" + std::to_string(c.violated_at.value_or(0));
  }
  throw std::logic_error("unhandled validity state");
}

const char* stabilization_name(Stabilization::Kind kind) {
  switch (kind) {
    case Stabilization::Kind::Stabilized: return "stabilized";
    case Stabilization::Kind::Increasing: return "increasing";
    case Stabilization::Kind::Varying: return "varying";
    case Stabilization::Kind::TooShort: return "too-short";
  }
  throw std::logic_error("unhandled stabilization kind");
}

Stabilization::Kind stabilization_from_name(const std::string& name) {
  if (name == "stabilized") return Stabilization::Kind::Stabilized;
  if (name == "increasing") return Stabilization::Kind::Increasing;
  if (name == "varying") return Stabilization::Kind::Varying;
  if (name == "too-short") return Stabilization::Kind::TooShort;
  throw std::invalid_argument("unknown stabilization state '" + name + "'");
}

}  // namespace

Json to_json(const ApproxReport& r) {
  Json j = Json::object();
  j["kind"] = sweep_kind_name(r.kind);
  if (r.x) j["x"] = rat_json(*r.x);
  if (r.n) j["n"] = *r.n;
  if (r.bound) j["bound"] = rat_json(*r.bound);

  Json steps = Json::array();
  for (const ApproxStep& step : r.steps) {
    Json row = Json::object();
    row["i"] = step.index;
    Json atoms = Json::array();
    for (const Rat& a : step.atoms) atoms.push_back(rat_json(a));
    row["atoms"] = atoms;
    row["member"] = step.value.member;
    row["value"] = step_value_json(step.value);
    steps.push_back(row);
  }
  j["steps"] = steps;

  j["valid"] = validity_string(r.validity);
  if (r.validity.lost_atom) j["lost_atom"] = rat_json(*r.validity.lost_atom);
  j["warnings"] = r.warnings;

  Json estimate = Json::object();
  estimate["member"] = r.limit_estimate.member;
  estimate["value"] = step_value_json(r.limit_estimate);
  j["limit_estimate"] = estimate;

  j["stabilized_at"] =
      r.stabilization.stabilized_at ? Json(*r.stabilization.stabilized_at) : Json(nullptr);
  j["stabilization"] = stabilization_name(r.stabilization.kind);
  j["window"] = r.stabilization.window;

  if (!is_set_sweep(r.kind)) {
    Json d = Json::object();
    d["suspected"] = r.divergence.suspected;
    d["reasons"] = r.divergence.reasons;
    j["divergence"] = d;
  }
  if (r.monotone) j["monotone"] = *r.monotone;
  return j;
}

ApproxReport approx_report_from_json(const Json& j) {
  ApproxReport r;
  r.kind = sweep_kind_from_name(j.at("kind").get<std::string>());
  if (j.contains("x")) r.x = rat_from(j.at("x"));
  if (j.contains("n")) r.n = j.at("n").get<std::uint64_t>();
  if (j.contains("bound")) r.bound = rat_from(j.at("bound"));

  bool set_payload = is_set_sweep(r.kind);
  for (const Json& row : j.at("steps")) {
    ApproxStep step;
    step.index = row.at("i").get<std::uint64_t>();
    step.atoms = rat_list_from(row.at("atoms"), "atoms");
    step.value = step_value_from(row.at("member"), row.at("value"), set_payload);
    r.steps.push_back(std::move(step));
  }

  std::string valid = j.at("valid").get<std::string>();
  const std::string prefix = "violated-at-step-";
  if (valid == "valid") {
    r.validity.state = ApproximationCheck::State::Valid;
  } else if (valid == "unchecked") {
    r.validity.state = ApproximationCheck::State::Unchecked;
  } else if (valid.rfind(prefix, 0) == 0) {
    r.validity.state = ApproximationCheck::State::Violated;
    r.validity.violated_at = std::stoull(valid.substr(prefix.size()));
  } else {
    throw std::invalid_argument("unknown validity state '" + valid + "'");
  }
  if (j.contains("lost_atom")) r.validity.lost_atom = rat_from(j.at("lost_atom"));

  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  r.limit_estimate =
      step_value_from(j.at("limit_estimate").at("member"), j.at("limit_estimate").at("value"),
                      set_payload);

  if (!j.at("stabilized_at").is_null()) {
    r.stabilization.stabilized_at = j.at("stabilized_at").get<std::uint64_t>();
  }
  r.stabilization.kind = stabilization_from_name(j.at("stabilization").get<std::string>());
  r.stabilization.window = j.at("window").get<std::uint64_t>();

  if (j.contains("divergence")) {
    r.divergence.suspected = j.at("divergence").at("suspected").get<bool>();
    r.divergence.reasons = j.at("divergence").at("reasons").get<std::vector<std::string>>();
  }
  if (j.contains("monotone")) r.monotone = j.at("monotone").get<bool>();
  return r;
}

Json to_json(const FamilySpec& spec) {
  Json j = Json::object();
  j["family"] = spec.family;
  if (spec.r) j["r"] = rat_json(*spec.r);
  if (spec.i) j["i"] = *spec.i;
  if (!spec.base_list.empty()) {
    Json bs = Json::array();
    for (const Rat& b : spec.base_list) bs.push_back(rat_json(b));
    j["B"] = bs;
  }
  if (spec.count) j["count"] = *spec.count;
  if (!spec.atoms.empty()) {
    Json as = Json::array();
    for (const Rat& a : spec.atoms) as.push_back(rat_json(a));
    j["atoms"] = as;
  }
  return j;
}

FamilySpec family_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family")) {
    throw std::invalid_argument("a family document needs a \"family\" key");
  }
  FamilySpec spec;
  spec.family = j.at("family").get<std::string>();
  // Parameters sit either beside "family" or inside a nested "params" object.
  const Json& params = j.contains("params") ? j.at("params") : j;
  if (params.contains("r")) spec.r = rat_from(params.at("r"));
  if (params.contains("i")) spec.i = params.at("i").get<std::uint64_t>();
  if (params.contains("B")) spec.base_list = rat_list_from(params.at("B"), "B");
  if (params.contains("count")) spec.count = params.at("count").get<std::uint64_t>();
  if (params.contains("atoms")) spec.atoms = rat_list_from(params.at("atoms"), "atoms");
  return spec;
}

bool is_family_document(const Json& j) { return j.is_object() && j.contains("family"); }

Json monoid_to_json(const ReducedMonoid& m) {
  Json j = Json::object();
  Json atoms = Json::array();
  for (const Rat& a : m.atoms) atoms.push_back(rat_json(a));
  j["atoms"] = atoms;
  j["scale"] = m.scale.str();
  Json gens = Json::array();
  for (const BigInt& g : m.gens_int) gens.push_back(g.str());
  j["gens"] = gens;
  j["content"] = m.content.str();
  Json removed = Json::array();
  for (const ReductionEvent& e : m.removed) {
    Json row = Json::object();
    row["value"] = rat_json(e.value);
    row["reason"] = e.kind == ReductionEvent::Kind::Duplicate ? "duplicate" : "sum-of-others";
    removed.push_back(row);
  }
  j["removed"] = removed;
  return j;
}

std::vector<Rat> atoms_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("atoms")) {
    throw std::invalid_argument("a monoid document needs an \"atoms\" key");
  }
  return rat_list_from(j.at("atoms"), "atoms");
}

}  // namespace puiseux
