#include "rectree/json.hpp"

#include "rectree/errors.hpp"

namespace rectree {

void to_json(Json& j, const Rational& r) { j = r.str(); }

void from_json(const Json& j, Rational& r) {
  if (j.is_string()) {
    r = Rational::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    r = Rational(j.get<long>());
  } else {
    throw InvalidArgument("expected a rational string, got " + j.dump());
  }
}

void to_json(Json& j, const ParamPoint& c) { j = Json{{"c1", c.c1}, {"c2", c.c2}}; }

namespace {

Json family_parameters(const Family& f) {
  if (const auto* p = std::get_if<family::FirstOrderQuadratic>(&f)) {
    return Json{{"A1", p->A1}, {"A2", p->A2}, {"B1", p->B1}, {"B2", p->B2}};
  }
  if (const auto* p = std::get_if<family::SomosRatioQuadratic>(&f)) return p->c;
  if (const auto* p = std::get_if<family::Order3SomosUnfolding>(&f)) return p->c;
  if (const auto* p = std::get_if<family::ExplicitM1>(&f)) {
    Json out = p->c;
    out["kind"] = p->kind == family::ExplicitKind::Somos4 ? "somos4" : "ratio-of-ratios";
    return out;
  }
  return Json{{"name", std::get<family::Custom>(f).name}};
}

}  // namespace

void to_json(Json& j, const Recurrence& r) {
  j = Json{{"family", family_name(r.family())},
           {"parameters", family_parameters(r.family())},
           {"order", r.order()},
           {"degree", r.degree()}};
}

void to_json(Json& j, const TreeNode& node) {
  j = Json{{"value", node.value},
           {"depth", node.depth},
           {"multiplicity", node.multiplicity},
           {"status", to_string(node.status)}};
  if (node.status == LeafStatus::NonRationalCutoff) j["cutoff"] = to_string(node.cutoff);
  j["children"] = node.children;
}

void to_json(Json& j, const RecurrenceTree& t) {
  j = Json{{"recurrence", t.recurrence},
           {"initial_window", t.initial_window},
           {"max_depth", t.max_depth},
           {"memoized", t.memoized},
           {"root", t.root}};
}

void to_json(Json& j, const LevelStats& s) {
  j = Json{{"depth", s.depth},
           {"total_nodes", s.total_nodes},
           {"distinct_values", s.distinct_values},
           {"new_values", s.new_values},
           {"all_rational_so_far", s.all_rational_so_far}};
}

void to_json(Json& j, const SomosRun& run) {
  j = Json{{"c", run.c}, {"s", run.s}, {"t", run.t}, {"a", run.a}};
}

void to_json(Json& j, const ClosedFormReport& report) {
  Json alternatives = Json::array();
  for (const auto& alt : report.alternatives) {
    alternatives.push_back(alt ? Json(*alt) : Json(nullptr));
  }
  j = Json{{"c", report.c},
           {"depth_checked", report.depth_checked},
           {"matched", report.matched},
           {"expected", report.expected},
           {"found_path", report.found_path},
           {"alternatives", alternatives}};
  if (report.mismatch_depth) {
    j["mismatch_depth"] = *report.mismatch_depth;
    j["message"] = report.message;
  }
}

void to_json(Json& j, const FactorWitness& w) {
  j = Json{{"numerator", w.numerator}, {"denominator", w.denominator}};
}

void to_json(Json& j, const ConjectureReport& report) {
  Json witnesses = Json::object();
  for (const auto& [value, w] : report.witnesses) witnesses[value.str()] = w;
  j = Json{{"c", report.c},
           {"depth", report.depth},
           {"somos_horizon", report.somos_horizon},
           {"values_checked", report.values_checked},
           {"all_factorable", report.all_factorable},
           {"convention", report.convention},
           {"witnesses", witnesses},
           {"failures", report.failures}};
}

void to_json(Json& j, const IntRange& r) { j = Json::array({r.lo, r.hi}); }
void from_json(const Json& j, IntRange& r) {
  r.lo = j.at(0).get<long>();
  r.hi = j.at(1).get<long>();
}

void to_json(Json& j, const Coefficients& k) { j = Json::array({k.A1, k.A2, k.B1, k.B2}); }
void from_json(const Json& j, Coefficients& k) {
  k.A1 = j.at(0).get<long>();
  k.A2 = j.at(1).get<long>();
  k.B1 = j.at(2).get<long>();
  k.B2 = j.at(3).get<long>();
}

void to_json(Json& j, const SearchSpec& spec) {
  j = Json{{"A1", spec.A1},
           {"A2", spec.A2},
           {"B1", spec.B1},
           {"B2", spec.B2},
           {"enforce_A1_eq_B2", spec.enforce_A1_eq_B2},
           {"initial_value", spec.initial_value},
           {"test_depth", spec.test_depth}};
}
void from_json(const Json& j, SearchSpec& spec) {
  spec.A1 = j.at("A1").get<IntRange>();
  spec.A2 = j.at("A2").get<IntRange>();
  spec.B1 = j.at("B1").get<IntRange>();
  spec.B2 = j.at("B2").get<IntRange>();
  spec.enforce_A1_eq_B2 = j.at("enforce_A1_eq_B2").get<bool>();
  spec.initial_value = j.at("initial_value").get<Rational>();
  spec.test_depth = j.at("test_depth").get<int>();
}

void to_json(Json& j, const SearchHit& hit) {
  j = Json{{"coefficients", hit.coeffs},
           {"verified_depth", hit.verified_depth},
           {"level2_roots", hit.level2_roots}};
}
void from_json(const Json& j, SearchHit& hit) {
  hit.coeffs = j.at("coefficients").get<Coefficients>();
  hit.verified_depth = j.at("verified_depth").get<int>();
  hit.level2_roots = j.at("level2_roots").get<std::vector<Rational>>();
}

void to_json(Json& j, const SearchReport& report) {
  j = Json{{"spec", report.spec},
           {"scanned", report.scanned},
           {"pruned_at_level2", report.pruned_at_level2},
           {"pruned_nonsquare", report.pruned_nonsquare},
           {"pruned_degenerate", report.pruned_degenerate},
           {"failed_deeper", report.failed_deeper},
           {"hit_count", report.hits.size()},
           {"hits", report.hits}};
}
void from_json(const Json& j, SearchReport& report) {
  report.spec = j.at("spec").get<SearchSpec>();
  report.scanned = j.at("scanned").get<std::size_t>();
  report.pruned_at_level2 = j.at("pruned_at_level2").get<std::size_t>();
  report.pruned_nonsquare = j.at("pruned_nonsquare").get<std::size_t>();
  report.pruned_degenerate = j.at("pruned_degenerate").get<std::size_t>();
  report.failed_deeper = j.at("failed_deeper").get<std::size_t>();
  report.hits = j.at("hits").get<std::vector<SearchHit>>();
}

void to_json(Json& j, const SearchCheckpoint& cp) {
  j = Json{{"last_scanned", cp.last_scanned ? Json(*cp.last_scanned) : Json(nullptr)},
           {"report", cp.partial}};
}
void from_json(const Json& j, SearchCheckpoint& cp) {
  const auto& last = j.at("last_scanned");
  if (last.is_null()) {
    cp.last_scanned.reset();
  } else {
    cp.last_scanned = last.get<Coefficients>();
  }
  cp.partial = j.at("report").get<SearchReport>();
}

}  // namespace rectree
