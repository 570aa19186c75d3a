#include "srtrace/classify.hpp"

#include <algorithm>

#include "srtrace/error.hpp"
#include "srtrace/homology.hpp"

namespace srtrace {

bool is_cohen_macaulay(const SimplicialComplex& complex, const FieldSpec& field) {
  for (const auto& face : complex.all_faces()) {
    const auto lk = link(complex, face);
    const auto betti = reduced_betti(lk, field);
    for (int i = -1; i < lk.dim(); ++i)
      if (betti.at(i) != 0) return false;
  }
  return true;
}

bool is_cm_on_punctured(const SimplicialComplex& complex, const FieldSpec& field) {
  for (VertexId v = 0; v < complex.vertex_count(); ++v)
    if (!is_cohen_macaulay(link(complex, Face{v}), field)) return false;
  return true;
}

bool is_gorenstein(const SimplicialComplex& complex, const FieldSpec& field) {
  return is_homology_sphere(link(complex, cone_points(complex)), field);
}

bool is_gorenstein_on_punctured(const SimplicialComplex& complex, const FieldSpec& field,
                                bool all_faces) {
  if (!all_faces) {
    for (VertexId v = 0; v < complex.vertex_count(); ++v)
      if (!is_gorenstein(link(complex, Face{v}), field)) return false;
    return true;
  }
  for (const auto& face : complex.all_faces())
    if (!face.empty() && !is_gorenstein(link(complex, face), field)) return false;
  return true;
}

namespace {

struct QuasiGorensteinDecision {
  TriState verdict;
  Rule rule;
};

QuasiGorensteinDecision decide_quasi_gorenstein(const SimplicialComplex& complex,
                                                const FieldSpec& field) {
  if (is_cohen_macaulay(complex, field)) {
    // For Cohen-Macaulay rings quasi-Gorenstein and Gorenstein coincide.
    return {TriState::from_bool(is_gorenstein(complex, field)), Rule::HochsterGorenstein};
  }
  if (is_normal(complex) && is_pseudomanifold(complex)) {
    if (is_orientable_over(complex, field))
      return {TriState::yes(), Rule::OrientablePseudomanifoldQuasiGorenstein};
    return {TriState::no(), Rule::NonorientableTraceInM2};
  }
  return {TriState::unknown(
              "not Cohen-Macaulay and not a normal pseudomanifold: neither the "
              "Hochster criterion nor the orientable-pseudomanifold rule applies"),
          Rule::OrientablePseudomanifoldQuasiGorenstein};
}

void require_connected(const SimplicialComplex& complex) {
  if (!is_connected(complex))
    throw Error(ErrorCode::Disconnected, "complex must be connected");
}

}  // namespace

TriState is_quasi_gorenstein(const SimplicialComplex& complex, const FieldSpec& field) {
  require_connected(complex);
  return decide_quasi_gorenstein(complex, field).verdict;
}

TriState is_teter_type(const SimplicialComplex& complex, const FieldSpec& field) {
  if (!is_pure(complex))
    return TriState::unknown("Teter type criterion requires an unmixed (pure) complex");
  return is_quasi_gorenstein(complex, field);
}

std::string_view to_string(TraceClass value) {
  switch (value) {
    case TraceClass::EqualsRing: return "EqualsRing";
    case TraceClass::EqualsMaxIdeal: return "EqualsMaxIdeal";
    case TraceClass::EqualsMaxIdealSquared: return "EqualsMaxIdealSquared";
    case TraceClass::NotMPrimary: return "NotMPrimary";
    case TraceClass::ContainedInMSquared: return "ContainedInMSquared";
    case TraceClass::Unknown: return "Unknown";
  }
  return "Unknown";
}

TraceClass trace_class_from_string(std::string_view text) {
  for (auto c : {TraceClass::EqualsRing, TraceClass::EqualsMaxIdeal,
                 TraceClass::EqualsMaxIdealSquared, TraceClass::NotMPrimary,
                 TraceClass::ContainedInMSquared, TraceClass::Unknown})
    if (to_string(c) == text) return c;
  throw Error(ErrorCode::MalformedInput, "unknown trace class '" + std::string(text) + "'");
}

ScopeFlags compute_scope_flags(const SimplicialComplex& complex, const FieldSpec& field,
                               const ClassifyOptions& options) {
  ScopeFlags flags;
  flags.connected = is_connected(complex);
  flags.normal = is_normal(complex);
  flags.pure = is_pure(complex);
  flags.cm = is_cohen_macaulay(complex, field);
  flags.cm_punctured = is_cm_on_punctured(complex, field);
  flags.gorenstein = is_gorenstein(complex, field);
  flags.gorenstein_punctured = is_gorenstein_on_punctured(complex, field, options.all_faces);
  flags.quasi_gorenstein =
      flags.connected ? decide_quasi_gorenstein(complex, field).verdict
                      : TriState::unknown("quasi-Gorenstein test needs a connected complex");
  flags.pseudomanifold = is_pseudomanifold(complex);
  if (flags.pseudomanifold) {
    flags.orientable = TriState::from_bool(is_orientable_over(complex, field));
    flags.orientable_integral = TriState::from_bool(is_orientable_integral(complex));
  } else {
    flags.orientable = TriState::unknown("orientability is defined for pseudomanifolds only");
    flags.orientable_integral = flags.orientable;
  }
  flags.homology_manifold = is_homology_manifold(complex, field);
  flags.homology_sphere = is_homology_sphere(complex, field);
  flags.long_path = is_path(complex, 3);
  flags.cone_points = complex.face_labels(cone_points(complex));
  return flags;
}

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

/// Quasi-Gorenstein status of a vertex link, which may be disconnected when
/// Δ has dimension one.
TriState link_quasi_gorenstein(const SimplicialComplex& lk, const FieldSpec& field) {
  if (is_cohen_macaulay(lk, field)) return TriState::from_bool(is_gorenstein(lk, field));
  if (!is_connected(lk)) return TriState::unknown("disconnected non-Cohen-Macaulay link");
  return decide_quasi_gorenstein(lk, field).verdict;
}

}  // namespace

TraceReport classify_trace_connected(const SimplicialComplex& complex, const FieldSpec& field,
                                     const ClassifyOptions& options) {
  require_connected(complex);
  TraceReport report;
  report.field = field;
  report.flags = compute_scope_flags(complex, field, options);
  const ScopeFlags& f = report.flags;
  auto add = [&](std::string predicate, std::string result, Rule rule) {
    report.evidence.push_back({std::move(predicate), std::move(result), rule});
  };
  auto unknown = [&](std::string why) {
    report.trace_class = TraceClass::Unknown;
    report.unknown_reason = std::move(why);
    return report;
  };

  add("cohen_macaulay", yes_no(f.cm), Rule::ReisnerCriterion);
  add("gorenstein", yes_no(f.gorenstein), Rule::HochsterGorenstein);
  add("gorenstein_on_punctured", yes_no(f.gorenstein_punctured), Rule::VertexLinkLocalization);

  if (!f.normal) {
    add("normal", "false", Rule::CanonicalPowerClassification);
    return unknown("complex is not normal (Serre S2 fails); the power classification needs S2");
  }

  const bool nonorientable_normal_pm = f.pseudomanifold && f.orientable.is_no();
  if (nonorientable_normal_pm) {
    report.contained_in_m_squared = true;
    add("contained_in_m_squared", "true: non-orientable normal pseudomanifold",
        Rule::NonorientableTraceInM2);
  }
  const auto qg_rule = decide_quasi_gorenstein(complex, field).rule;
  add("quasi_gorenstein", std::string(to_string(f.quasi_gorenstein.value)), qg_rule);

  // (a) quasi-Gorenstein: tr = R.
  if (f.quasi_gorenstein.is_yes()) {
    report.trace_class = TraceClass::EqualsRing;
    add("trace", "R = m^0", Rule::CanonicalPowerClassification);
    if (!f.gorenstein_punctured)
      add("gorenstein_on_punctured",
          "false although quasi-Gorenstein: power classification reported from the "
          "quasi-Gorenstein branch",
          Rule::CanonicalPowerClassification);
    return report;
  }
  if (f.quasi_gorenstein.is_unknown())
    return unknown(f.quasi_gorenstein.reason);

  if (complex.dim() >= 2)
    add("equals_max_ideal", "excluded: not quasi-Gorenstein and dim >= 2", Rule::DegreeOneTrace);

  // (b) Gorenstein on the punctured spectrum: tr is m or m^2.
  if (f.gorenstein_punctured) {
    if (f.long_path) {
      report.trace_class = TraceClass::EqualsMaxIdeal;
      add("path", "true: path with at least 3 edges", Rule::NearlyGorensteinPath);
      add("path_length", "length counts edges", Rule::PathLengthConvention);
      add("trace", "m", Rule::CanonicalPowerClassification);
      return report;
    }
    if (f.homology_manifold && f.orientable.is_no()) {
      report.trace_class = TraceClass::EqualsMaxIdealSquared;
      report.contained_in_m_squared = true;
      add("homology_manifold", "true, not orientable over " + field.to_string(),
          Rule::NonorientableManifoldSquare);
      add("trace", "m^2", Rule::CanonicalPowerClassification);
      return report;
    }
    throw Error(ErrorCode::InvariantViolation,
                "Gorenstein on the punctured spectrum, not quasi-Gorenstein, yet neither a "
                "long path nor a non-orientable homology manifold");
  }

  // (c) Not Gorenstein on the punctured spectrum: tr is no power of m. It is
  // not m-primary as soon as some vertex link fails to be quasi-Gorenstein.
  TriState some_link_not_qg = TriState::no();
  for (VertexId v = 0; v < complex.vertex_count(); ++v) {
    const auto lk = link(complex, Face{v});
    if (is_gorenstein(lk, field)) continue;
    const auto qg = link_quasi_gorenstein(lk, field);
    if (qg.is_no()) {
      some_link_not_qg = TriState::yes();
      add("vertex_link_quasi_gorenstein",
          "false at vertex " + complex.label(v), Rule::VertexLinkLocalization);
      break;
    }
    if (qg.is_unknown()) some_link_not_qg = TriState::unknown(qg.reason);
  }
  if (some_link_not_qg.is_yes()) {
    report.trace_class = TraceClass::NotMPrimary;
    add("trace", "not m-primary", Rule::CanonicalPowerClassification);
    return report;
  }
  if (nonorientable_normal_pm) {
    report.trace_class = TraceClass::ContainedInMSquared;
    add("trace", "no power of m, contained in m^2", Rule::CanonicalPowerClassification);
    return report;
  }
  if (some_link_not_qg.is_unknown()) return unknown(some_link_not_qg.reason);
  return unknown(
      "quasi-Gorenstein on the punctured spectrum without being Gorenstein there; "
      "trace is m-primary but not a power of m");
}

}  // namespace srtrace
