#include "srtrace/verdict.hpp"

#include <array>
#include <utility>

#include "srtrace/error.hpp"

namespace srtrace {

TriState tri_and(const TriState& a, const TriState& b) {
  if (a.is_no()) return a;
  if (b.is_no()) return b;
  if (a.is_unknown()) return a;
  if (b.is_unknown()) return b;
  return TriState::yes();
}

TriState tri_not(const TriState& a) {
  if (a.is_unknown()) return a;
  return TriState::from_bool(a.is_no());
}

std::string_view to_string(Tri value) {
  switch (value) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

Tri tri_from_string(std::string_view text) {
  if (text == "yes") return Tri::Yes;
  if (text == "no") return Tri::No;
  if (text == "unknown") return Tri::Unknown;
  throw Error(ErrorCode::MalformedInput, "expected yes|no|unknown, got '" + std::string(text) + "'");
}

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 20> kRuleNames{{
    {Rule::ReisnerCriterion, "reisner_criterion"},
    {Rule::HochsterGorenstein, "hochster_gorenstein"},
    {Rule::VertexLinkLocalization, "vertex_link_localization"},
    {Rule::OrientablePseudomanifoldQuasiGorenstein, "orientable_pseudomanifold_quasi_gorenstein"},
    {Rule::NonorientableTraceInM2, "nonorientable_trace_in_m2"},
    {Rule::PseudomanifoldFromLinks, "pseudomanifold_from_links"},
    {Rule::NoConePoint, "no_cone_point"},
    {Rule::DegreeOneTrace, "degree_one_trace"},
    {Rule::CanonicalPowerClassification, "canonical_power_classification"},
    {Rule::NearlyGorensteinPath, "nearly_gorenstein_path"},
    {Rule::NonorientableManifoldSquare, "nonorientable_manifold_square"},
    {Rule::TeterType, "teter_type"},
    {Rule::DaggerTrace, "dagger_trace"},
    {Rule::FiberProductTrace, "fiber_product_trace"},
    {Rule::FiberProductMaxIdeal, "fiber_product_max_ideal"},
    {Rule::FiberProductPrimary, "fiber_product_primary"},
    {Rule::FiberProductNeverQuasiGorenstein, "fiber_product_never_quasi_gorenstein"},
    {Rule::DisjointUnionTrace, "disjoint_union_trace"},
    {Rule::DisjointUnionPowers, "disjoint_union_powers"},
    {Rule::PathLengthConvention, "path_length_convention"},
}};

}  // namespace

std::string_view to_string(Rule rule) {
  for (const auto& [r, name] : kRuleNames)
    if (r == rule) return name;
  return "unknown_rule";
}

Rule rule_from_string(std::string_view text) {
  for (const auto& [r, name] : kRuleNames)
    if (name == text) return r;
  throw Error(ErrorCode::MalformedInput, "unknown rule tag '" + std::string(text) + "'");
}

std::vector<Rule> all_rules() {
  std::vector<Rule> out;
  for (const auto& entry : kRuleNames) out.push_back(entry.first);
  return out;
}

}  // namespace srtrace
