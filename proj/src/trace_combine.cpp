#include "srtrace/trace_combine.hpp"

#include <algorithm>

#include "srtrace/error.hpp"
#include "srtrace/homology.hpp"

namespace srtrace {

std::string_view to_string(IdealClass value) {
  switch (value) {
    case IdealClass::WholeRing: return "WholeRing";
    case IdealClass::EqualsM: return "EqualsM";
    case IdealClass::EqualsM2: return "EqualsM2";
    case IdealClass::ContainsM: return "ContainsM";
    case IdealClass::RadicalEqualsM: return "RadicalEqualsM";
    case IdealClass::Other: return "Other";
    case IdealClass::Unknown: return "Unknown";
  }
  return "Unknown";
}

IdealClass ideal_class_from_string(std::string_view text) {
  for (auto c : {IdealClass::WholeRing, IdealClass::EqualsM, IdealClass::EqualsM2,
                 IdealClass::ContainsM, IdealClass::RadicalEqualsM, IdealClass::Other,
                 IdealClass::Unknown}) {
    if (to_string(c) == text) return c;
  }
  throw Error(ErrorCode::InvalidDescriptor, "unknown trace class '" + std::string(text) + "'");
}

std::string_view to_string(SummandKind value) {
  switch (value) {
    case SummandKind::Dagger: return "Dagger";
    case SummandKind::Socle: return "Socle";
    case SummandKind::Zero: return "Zero";
  }
  return "Zero";
}

SummandKind summand_kind_from_string(std::string_view text) {
  for (auto k : {SummandKind::Dagger, SummandKind::Socle, SummandKind::Zero})
    if (to_string(k) == text) return k;
  throw Error(ErrorCode::MalformedInput, "unknown summand kind '" + std::string(text) + "'");
}

RingDescriptor RingDescriptor::normalized() const {
  auto invalid = [&](const std::string& why) {
    return Error(ErrorCode::InvalidDescriptor, "descriptor '" + name + "': " + why);
  };
  if (dim < 0) throw invalid("negative dimension");
  RingDescriptor out = *this;
  // m^2 = 0 makes m nilpotent, so only Artinian rings can have it.
  if (dim >= 1) {
    if (socle_square_zero.is_yes())
      throw invalid("a ring of positive dimension cannot have m^2 = 0");
    out.socle_square_zero = TriState::no();
  }
  if (reduced && dim == 0 && nontrivial)
    throw invalid("a reduced zero-dimensional graded ring with A_0 = k is k itself");
  if (dim == 0 && trace_class == IdealClass::Other)
    throw invalid("every ideal of an Artinian ring other than 0 has radical m");
  if (!nontrivial && out.socle_square_zero.is_unknown())
    out.socle_square_zero = TriState::yes();
  return out;
}

IdealClass dagger(IdealClass trace_class) {
  switch (trace_class) {
    case IdealClass::WholeRing:
    case IdealClass::ContainsM:
      return IdealClass::EqualsM;
    default:
      return trace_class;
  }
}

namespace {

// Containment facts about an ideal class of a nontrivial graded ring. For
// such rings m != m^2 (graded Nakayama), which separates EqualsM from EqualsM2.

TriState contains_m(IdealClass c) {
  switch (c) {
    case IdealClass::WholeRing:
    case IdealClass::EqualsM:
    case IdealClass::ContainsM:
      return TriState::yes();
    case IdealClass::EqualsM2:
    case IdealClass::Other:
      return TriState::no();
    case IdealClass::RadicalEqualsM:
      return TriState::unknown("radical equals m does not decide whether tr contains m");
    case IdealClass::Unknown:
      break;
  }
  return TriState::unknown("component trace class unknown");
}

TriState radical_contains_m(const RingDescriptor& d) {
  if (d.is_artinian()) return TriState::yes();
  switch (d.trace_class) {
    case IdealClass::Other: return TriState::no();
    case IdealClass::Unknown: return TriState::unknown("component trace class unknown");
    default: return TriState::yes();
  }
}

TriState dagger_contains_m2(IdealClass c) {
  switch (dagger(c)) {
    case IdealClass::EqualsM:
    case IdealClass::EqualsM2:
      return TriState::yes();
    case IdealClass::Other:
      return TriState::no();
    case IdealClass::RadicalEqualsM:
      return TriState::unknown("radical equals m does not decide whether tr contains m^2");
    default:
      return TriState::unknown("component trace class unknown");
  }
}

TriState dagger_equals_m2(IdealClass c) {
  switch (dagger(c)) {
    case IdealClass::EqualsM2: return TriState::yes();
    case IdealClass::EqualsM:
    case IdealClass::Other:
      return TriState::no();
    case IdealClass::RadicalEqualsM:
      return TriState::unknown("radical equals m does not decide whether tr equals m^2");
    default:
      return TriState::unknown("component trace class unknown");
  }
}

// Socle summand of a lower-dimensional factor. In positive dimension m is not
// nilpotent, so the socle cannot contain m^2.
TriState socle_contains_m2(const RingDescriptor& d) {
  if (d.socle_square_zero.is_yes()) return TriState::yes();
  if (d.dim >= 1) return TriState::no();
  return TriState::unknown("socle versus m^2 undetermined for '" + d.name + "'");
}

TriState socle_equals_m2(const RingDescriptor& d) {
  if (d.dim >= 1 || d.socle_square_zero.is_yes()) return TriState::no();
  return TriState::unknown("socle versus m^2 undetermined for '" + d.name + "'");
}

void check_factors(std::span<const RingDescriptor> factors) {
  if (factors.size() < 2)
    throw Error(ErrorCode::InvalidDescriptor, "a fiber product needs at least two factors");
  int top = 0;
  for (const auto& d : factors) {
    if (!d.nontrivial)
      throw Error(ErrorCode::TrivialFactor,
                  "factor '" + d.name +
                      "' is trivial (A = A_0); the formula needs A != A_0 for every "
                      "factor (stated elsewhere as A_0 != k)");
    top = std::max(top, d.dim);
  }
  if (top == 1)
    throw Error(ErrorCode::Dim1Unsupported,
                "fiber products of dimension 1 are unsupported: the direct-sum trace "
                "formula fails there (k[x] x_k k[y] = k[x,y]/(xy) is Gorenstein)");
}

}  // namespace

FiberTraceReport combine_many(std::span<const RingDescriptor> raw) {
  check_factors(raw);
  std::vector<RingDescriptor> factors;
  for (const auto& d : raw) factors.push_back(d.normalized());

  FiberTraceReport report;
  for (const auto& d : factors) report.overall_dim = std::max(report.overall_dim, d.dim);

  TriState equals_m = TriState::yes();
  TriState m_primary = TriState::yes();
  TriState contains_m2 = TriState::yes();
  TriState equals_m2 = TriState::yes();
  bool all_reduced = true;
  TriState reduced_equals_m = TriState::yes();
  TriState reduced_primary = TriState::yes();

  for (const auto& d : factors) {
    all_reduced = all_reduced && d.reduced;
    const bool top = d.dim == report.overall_dim;
    if (top) {
      report.summands.push_back({d.name, SummandKind::Dagger, dagger(d.trace_class)});
      equals_m = tri_and(equals_m, contains_m(d.trace_class));
      m_primary = tri_and(m_primary, radical_contains_m(d));
      contains_m2 = tri_and(contains_m2, dagger_contains_m2(d.trace_class));
      equals_m2 = tri_and(equals_m2, dagger_equals_m2(d.trace_class));
    } else {
      const bool zero = d.reduced && d.dim >= 1;
      report.summands.push_back({d.name, zero ? SummandKind::Zero : SummandKind::Socle,
                                 IdealClass::Unknown});
      equals_m = tri_and(equals_m, d.socle_square_zero);
      m_primary = tri_and(m_primary, TriState::from_bool(d.dim == 0));
      contains_m2 = tri_and(contains_m2, socle_contains_m2(d));
      equals_m2 = tri_and(equals_m2, socle_equals_m2(d));
    }
    reduced_equals_m = tri_and(reduced_equals_m,
                               tri_and(contains_m(d.trace_class), TriState::from_bool(top)));
    reduced_primary = tri_and(reduced_primary,
                              tri_and(radical_contains_m(d), TriState::from_bool(top)));
  }

  report.equals_m = equals_m;
  report.m_primary = m_primary;
  report.contains_m2 = contains_m2;
  report.equals_m2 = equals_m2;

  auto add = [&](std::string predicate, std::string result, Rule rule) {
    report.evidence.push_back({std::move(predicate), std::move(result), rule});
  };
  add("summands", "top-dimensional factors contribute tr^dagger, the rest their socle",
      Rule::FiberProductTrace);
  add("equals_ring", "no", Rule::FiberProductNeverQuasiGorenstein);
  add("equals_m", std::string(to_string(equals_m.value)), Rule::FiberProductMaxIdeal);
  add("m_primary", std::string(to_string(m_primary.value)), Rule::FiberProductPrimary);

  if (all_reduced) {
    // Reduced fiber products: both verdicts need every factor top-dimensional.
    if ((!equals_m.is_unknown() && !reduced_equals_m.is_unknown() &&
         equals_m.value != reduced_equals_m.value) ||
        (!m_primary.is_unknown() && !reduced_primary.is_unknown() &&
         m_primary.value != reduced_primary.value))
      throw Error(ErrorCode::InvariantViolation,
                  "reduced-case fiber product rules disagree with the general rules");
    add("reduced_rules", "agree: all factors reduced", Rule::FiberProductMaxIdeal);
  }

  if (report.equals_m.is_yes() && !report.m_primary.is_yes())
    throw Error(ErrorCode::InvariantViolation, "equals_m without m_primary");
  return report;
}

FiberTraceReport combine_pair(const RingDescriptor& a, const RingDescriptor& b) {
  const RingDescriptor factors[] = {a, b};
  return combine_many(factors);
}

RingDescriptor descriptor_from_report(std::string name, const SimplicialComplex& component,
                                      const TraceReport& report) {
  RingDescriptor d;
  d.name = std::move(name);
  d.dim = component.dim() + 1;
  d.nontrivial = component.vertex_count() > 0;
  d.reduced = true;
  d.socle_square_zero = TriState::no();
  switch (report.trace_class) {
    case TraceClass::EqualsRing: d.trace_class = IdealClass::WholeRing; break;
    case TraceClass::EqualsMaxIdeal: d.trace_class = IdealClass::EqualsM; break;
    case TraceClass::EqualsMaxIdealSquared: d.trace_class = IdealClass::EqualsM2; break;
    case TraceClass::NotMPrimary: d.trace_class = IdealClass::Other; break;
    case TraceClass::ContainedInMSquared:
    case TraceClass::Unknown: d.trace_class = IdealClass::Unknown; break;
  }
  return d;
}

namespace {

// Cross-check of the summand algebra against the purely combinatorial
// conditions available for disjoint unions of normal connected complexes.
void check_disjoint_union_powers(const std::vector<SimplicialComplex>& comps,
                                 const std::vector<TraceReport>& reports, int top_dim,
                                 FiberTraceReport& fiber) {
  auto add = [&](std::string predicate, std::string result) {
    fiber.evidence.push_back({std::move(predicate), std::move(result), Rule::DisjointUnionPowers});
  };
  auto reconcile = [&](TriState& verdict, const TriState& expected, const char* name) {
    if (expected.is_unknown()) return;
    if (verdict.is_unknown()) {
      verdict = expected;
    } else if (verdict.value != expected.value) {
      throw Error(ErrorCode::InvariantViolation,
                  std::string("disjoint-union rule disagrees with summand algebra on ") + name);
    }
    add(name, std::string(to_string(expected.value)));
  };

  bool all_normal = true;
  bool all_cm_punctured = true;
  for (const auto& r : reports) {
    all_normal = all_normal && r.flags.normal;
    all_cm_punctured = all_cm_punctured && r.flags.cm_punctured;
  }
  if (!all_normal) return;

  TriState path_or_qg = TriState::yes();
  bool equal_dims = true;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    equal_dims = equal_dims && comps[i].dim() == top_dim;
    const TriState qg = reports[i].flags.quasi_gorenstein;
    path_or_qg = tri_and(path_or_qg,
                         is_path(comps[i], 1) ? TriState::yes() : qg);
  }
  reconcile(fiber.equals_m, tri_and(TriState::from_bool(equal_dims), path_or_qg), "equals_m");

  if (!all_cm_punctured) return;
  TriState powers = TriState::from_bool(equal_dims);
  TriState squares = TriState::from_bool(equal_dims);
  for (const auto& r : reports) {
    const auto c = r.trace_class;
    if (c == TraceClass::Unknown) {
      powers = tri_and(powers, TriState::unknown("component trace unknown"));
    } else {
      powers = tri_and(powers, TriState::from_bool(c == TraceClass::EqualsRing ||
                                                   c == TraceClass::EqualsMaxIdeal ||
                                                   c == TraceClass::EqualsMaxIdealSquared));
    }
    squares = tri_and(squares, TriState::from_bool(r.flags.homology_manifold &&
                                                   r.flags.orientable.is_no()));
  }
  reconcile(fiber.m_primary, powers, "m_primary");
  reconcile(fiber.contains_m2, powers, "contains_m2");
  reconcile(fiber.equals_m2, squares, "equals_m2");
}

}  // namespace

SrTraceResult classify_sr(const SimplicialComplex& complex, const FieldSpec& field,
                          const ClassifyOptions& options) {
  SrTraceResult result;
  auto comps = connected_components(complex);
  if (comps.size() <= 1) {
    result.components.push_back(classify_trace_connected(complex, field, options));
    result.component_names.push_back("C1");
    return result;
  }
  if (complex.dim() <= 0)
    throw Error(ErrorCode::Dim1Unsupported,
                "disjoint union of points: k[Δ] has dimension 1 where the fiber-product "
                "trace formula is unsupported");

  std::vector<RingDescriptor> descriptors;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    result.component_names.push_back("C" + std::to_string(i + 1));
    result.components.push_back(classify_trace_connected(comps[i], field, options));
    descriptors.push_back(
        descriptor_from_report(result.component_names.back(), comps[i], result.components.back()));
  }
  auto fiber = combine_many(descriptors);
  fiber.evidence.push_back({"components", std::to_string(comps.size()) + " connected components",
                            Rule::DisjointUnionTrace});
  check_disjoint_union_powers(comps, result.components, complex.dim(), fiber);
  result.fiber = std::move(fiber);
  return result;
}

}  // namespace srtrace
