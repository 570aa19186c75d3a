#include "srtrace/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "srtrace/error.hpp"

namespace srtrace {

using nlohmann::json;

InputSummary summarize(const SimplicialComplex& complex) {
  InputSummary s;
  s.vertices = complex.vertex_count();
  s.facets = complex.is_irrelevant() ? 0 : complex.facets().size();
  s.dim = complex.dim();
  s.f_vector = f_vector(complex);
  s.components = connected_components(complex).size();
  return s;
}

void to_json(json& j, const TriState& t) {
  j = json{{"value", to_string(t.value)}};
  if (!t.reason.empty()) j["reason"] = t.reason;
}

void from_json(const json& j, TriState& t) {
  if (j.is_string()) {
    t = {tri_from_string(j.get<std::string>()), {}};
    return;
  }
  t.value = tri_from_string(j.at("value").get<std::string>());
  t.reason = j.value("reason", std::string{});
}

void to_json(json& j, const Evidence& e) {
  j = json{{"predicate", e.predicate}, {"result", e.result}, {"rule", to_string(e.rule)}};
}

void from_json(const json& j, Evidence& e) {
  e.predicate = j.at("predicate").get<std::string>();
  e.result = j.at("result").get<std::string>();
  e.rule = rule_from_string(j.at("rule").get<std::string>());
}

void to_json(json& j, const ScopeFlags& f) {
  j = json{{"connected", f.connected},
           {"normal", f.normal},
           {"pure", f.pure},
           {"cm", f.cm},
           {"cm_punctured", f.cm_punctured},
           {"gorenstein", f.gorenstein},
           {"gorenstein_punctured", f.gorenstein_punctured},
           {"quasi_gorenstein", f.quasi_gorenstein},
           {"pseudomanifold", f.pseudomanifold},
           {"orientable", f.orientable},
           {"orientable_integral", f.orientable_integral},
           {"homology_manifold", f.homology_manifold},
           {"homology_sphere", f.homology_sphere},
           {"long_path", f.long_path},
           {"cone_points", f.cone_points}};
}

void from_json(const json& j, ScopeFlags& f) {
  j.at("connected").get_to(f.connected);
  j.at("normal").get_to(f.normal);
  j.at("pure").get_to(f.pure);
  j.at("cm").get_to(f.cm);
  j.at("cm_punctured").get_to(f.cm_punctured);
  j.at("gorenstein").get_to(f.gorenstein);
  j.at("gorenstein_punctured").get_to(f.gorenstein_punctured);
  j.at("quasi_gorenstein").get_to(f.quasi_gorenstein);
  j.at("pseudomanifold").get_to(f.pseudomanifold);
  j.at("orientable").get_to(f.orientable);
  j.at("orientable_integral").get_to(f.orientable_integral);
  j.at("homology_manifold").get_to(f.homology_manifold);
  j.at("homology_sphere").get_to(f.homology_sphere);
  j.at("long_path").get_to(f.long_path);
  j.at("cone_points").get_to(f.cone_points);
}

void to_json(json& j, const HomologyProfile& h) {
  json betti = json::object();
  for (int i = -1; i <= h.max_index(); ++i) betti[std::to_string(i)] = h.at(i);
  j = json{{"field", h.field().to_string()}, {"reduced_betti", betti}};
}

HomologyProfile homology_from_json(const json& j) {
  const auto field = FieldSpec::parse(j.at("field").get<std::string>());
  std::vector<std::size_t> values;
  const auto& betti = j.at("reduced_betti");
  for (int i = -1; betti.contains(std::to_string(i)); ++i)
    values.push_back(betti.at(std::to_string(i)).get<std::size_t>());
  return HomologyProfile(field, std::move(values));
}

void to_json(json& j, const TraceReport& r) {
  j = json{{"trace_class", to_string(r.trace_class)},
           {"contained_in_m_squared", r.contained_in_m_squared},
           {"field", r.field.to_string()},
           {"scope_flags", r.flags},
           {"evidence", r.evidence}};
  if (!r.unknown_reason.empty()) j["unknown_reason"] = r.unknown_reason;
}

void from_json(const json& j, TraceReport& r) {
  r.trace_class = trace_class_from_string(j.at("trace_class").get<std::string>());
  j.at("contained_in_m_squared").get_to(r.contained_in_m_squared);
  r.field = FieldSpec::parse(j.at("field").get<std::string>());
  j.at("scope_flags").get_to(r.flags);
  j.at("evidence").get_to(r.evidence);
  r.unknown_reason = j.value("unknown_reason", std::string{});
}

void to_json(json& j, const Summand& s) {
  j = json{{"component", s.component}, {"kind", to_string(s.kind)}};
  if (s.kind == SummandKind::Dagger) j["ideal"] = to_string(s.ideal);
}

void from_json(const json& j, Summand& s) {
  s.component = j.at("component").get<std::string>();
  s.kind = summand_kind_from_string(j.at("kind").get<std::string>());
  s.ideal = j.contains("ideal") ? ideal_class_from_string(j.at("ideal").get<std::string>())
                                : IdealClass::Unknown;
}

void to_json(json& j, const FiberTraceReport& r) {
  j = json{{"overall_dim", r.overall_dim},
           {"summands", r.summands},
           {"equals_ring", r.equals_ring},
           {"equals_m", r.equals_m},
           {"m_primary", r.m_primary},
           {"contains_m2", r.contains_m2},
           {"equals_m2", r.equals_m2},
           {"evidence", r.evidence}};
}

void from_json(const json& j, FiberTraceReport& r) {
  j.at("overall_dim").get_to(r.overall_dim);
  j.at("summands").get_to(r.summands);
  j.at("equals_ring").get_to(r.equals_ring);
  j.at("equals_m").get_to(r.equals_m);
  j.at("m_primary").get_to(r.m_primary);
  j.at("contains_m2").get_to(r.contains_m2);
  j.at("equals_m2").get_to(r.equals_m2);
  j.at("evidence").get_to(r.evidence);
}

void to_json(json& j, const InputSummary& s) {
  j = json{{"vertices", s.vertices}, {"facets", s.facets},     {"dim", s.dim},
           {"f_vector", s.f_vector}, {"components", s.components}};
}

void from_json(const json& j, InputSummary& s) {
  j.at("vertices").get_to(s.vertices);
  j.at("facets").get_to(s.facets);
  j.at("dim").get_to(s.dim);
  j.at("f_vector").get_to(s.f_vector);
  j.at("components").get_to(s.components);
}

void to_json(json& j, const Report& r) {
  j = json{{"command", r.command}, {"warnings", r.warnings}};
  if (r.input) j["input"] = *r.input;
  if (r.field) j["field"] = *r.field;
  if (r.scope_flags) j["scope_flags"] = *r.scope_flags;
  if (r.homology) j["homology"] = *r.homology;
  if (!r.components.empty()) {
    json comps = json::array();
    for (std::size_t i = 0; i < r.components.size(); ++i) {
      json c = r.components[i];
      c["name"] = i < r.component_names.size() ? r.component_names[i] : "C" + std::to_string(i + 1);
      comps.push_back(std::move(c));
    }
    j["components"] = std::move(comps);
  }
  if (r.fiber) j["fiber_product"] = *r.fiber;
}

void from_json(const json& j, Report& r) {
  r = Report{};
  r.command = j.at("command").get<std::string>();
  j.at("warnings").get_to(r.warnings);
  if (j.contains("input")) r.input = j.at("input").get<InputSummary>();
  if (j.contains("field")) r.field = j.at("field").get<std::string>();
  if (j.contains("scope_flags")) r.scope_flags = j.at("scope_flags").get<ScopeFlags>();
  if (j.contains("homology")) r.homology = homology_from_json(j.at("homology"));
  if (j.contains("components")) {
    for (const auto& c : j.at("components")) {
      r.component_names.push_back(c.at("name").get<std::string>());
      r.components.push_back(c.get<TraceReport>());
    }
  }
  if (j.contains("fiber_product")) r.fiber = j.at("fiber_product").get<FiberTraceReport>();
}

Report analyze_report(const SimplicialComplex& complex, const FieldSpec& field,
                      const ClassifyOptions& options, std::vector<std::string> warnings) {
  Report r;
  r.command = "analyze";
  r.input = summarize(complex);
  r.field = field.to_string();
  r.warnings = std::move(warnings);
  r.scope_flags = compute_scope_flags(complex, field, options);
  r.homology = reduced_betti(complex, field);
  return r;
}

Report homology_report(const SimplicialComplex& complex, const FieldSpec& field,
                       std::vector<std::string> warnings) {
  Report r;
  r.command = "homology";
  r.input = summarize(complex);
  r.field = field.to_string();
  r.warnings = std::move(warnings);
  r.homology = reduced_betti(complex, field);
  if (field.is_rational()) {
    const auto integral = integral_homology(complex);
    for (int i = -1; i <= complex.dim(); ++i) {
      const auto torsion = integral.torsion_at(i);
      if (torsion.empty()) continue;
      std::string text = "integral H~_" + std::to_string(i) + " has torsion";
      for (const auto& t : torsion) text += " Z/" + t.get_str();
      r.warnings.push_back(text);
    }
  }
  return r;
}

Report classify_report(const SimplicialComplex& complex, const FieldSpec& field,
                       const ClassifyOptions& options, std::vector<std::string> warnings) {
  Report r;
  r.command = "classify";
  r.input = summarize(complex);
  r.field = field.to_string();
  r.warnings = std::move(warnings);
  auto result = classify_sr(complex, field, options);
  if (result.components.size() == 1) r.scope_flags = result.components.front().flags;
  r.component_names = std::move(result.component_names);
  r.components = std::move(result.components);
  r.fiber = std::move(result.fiber);
  if (has_non_normal_component(r))
    r.warnings.push_back("non-normal component: the trace classification does not apply");
  return r;
}

Report combine_report(std::span<const RingDescriptor> descriptors) {
  Report r;
  r.command = "combine";
  r.fiber = combine_many(descriptors);
  return r;
}

bool has_non_normal_component(const Report& report) {
  return std::any_of(report.components.begin(), report.components.end(),
                     [](const TraceReport& c) { return !c.flags.normal; });
}

// ---------------------------------------------------------------------------

namespace {

std::string normalize_class_name(std::string text) {
  std::string out;
  for (char c : text)
    if (c != '_' && c != '-') out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

void to_json(json& j, const RingDescriptor& d) {
  j = json{{"name", d.name},
           {"dim", d.dim},
           {"trace_class", to_string(d.trace_class)},
           {"socle_square_zero", to_string(d.socle_square_zero.value)},
           {"reduced", d.reduced},
           {"nontrivial", d.nontrivial}};
}

void from_json(const json& j, RingDescriptor& d) {
  try {
    d.name = j.at("name").get<std::string>();
    d.dim = j.at("dim").get<int>();
    const auto wanted = normalize_class_name(j.at("trace_class").get<std::string>());
    bool found = false;
    for (auto c : {IdealClass::WholeRing, IdealClass::EqualsM, IdealClass::EqualsM2,
                   IdealClass::ContainsM, IdealClass::RadicalEqualsM, IdealClass::Other,
                   IdealClass::Unknown}) {
      if (normalize_class_name(std::string(to_string(c))) == wanted) {
        d.trace_class = c;
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::InvalidDescriptor, "unknown trace_class '" + wanted + "'");
    const auto socle = j.value("socle_square_zero", std::string("unknown"));
    d.socle_square_zero = {tri_from_string(socle), socle == "unknown" ? "not supplied" : ""};
    d.reduced = j.value("reduced", false);
    d.nontrivial = j.value("nontrivial", true);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidDescriptor, std::string("malformed descriptor: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

namespace {

std::string tri_text(const TriState& t) {
  std::string out(to_string(t.value));
  if (t.is_unknown() && !t.reason.empty()) out += " (" + t.reason + ")";
  return out;
}

void render_flags(std::ostringstream& out, const ScopeFlags& f, const std::string& indent) {
  auto b = [](bool v) { return v ? "yes" : "no"; };
  out << indent << "connected:            " << b(f.connected) << '\n'
      << indent << "normal:               " << b(f.normal) << '\n'
      << indent << "pure:                 " << b(f.pure) << '\n'
      << indent << "cohen-macaulay:       " << b(f.cm) << '\n'
      << indent << "cm on punctured:      " << b(f.cm_punctured) << '\n'
      << indent << "gorenstein:           " << b(f.gorenstein) << '\n'
      << indent << "gor. on punctured:    " << b(f.gorenstein_punctured) << '\n'
      << indent << "quasi-gorenstein:     " << tri_text(f.quasi_gorenstein) << '\n'
      << indent << "pseudomanifold:       " << b(f.pseudomanifold) << '\n'
      << indent << "orientable (field):   " << tri_text(f.orientable) << '\n'
      << indent << "orientable (Z):       " << tri_text(f.orientable_integral) << '\n'
      << indent << "homology manifold:    " << b(f.homology_manifold) << '\n'
      << indent << "homology sphere:      " << b(f.homology_sphere) << '\n'
      << indent << "cone points:          ";
  if (f.cone_points.empty()) out << "none";
  for (const auto& c : f.cone_points) out << c << ' ';
  out << '\n';
}

std::string ideal_text(const Summand& s) {
  switch (s.kind) {
    case SummandKind::Zero: return "0 (socle of " + s.component + ")";
    case SummandKind::Socle: return "socle(" + s.component + ")";
    case SummandKind::Dagger: break;
  }
  switch (s.ideal) {
    case IdealClass::EqualsM: return "m_" + s.component;
    case IdealClass::EqualsM2: return "m_" + s.component + "^2";
    default: return "tr^dagger(" + s.component + ") [" + std::string(to_string(s.ideal)) + "]";
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  if (r.input) {
    out << "complex: " << r.input->vertices << " vertices, " << r.input->facets
        << " facets, dim " << r.input->dim << ", " << r.input->components
        << " component(s)\n";
  }
  if (r.field) out << "field: " << *r.field << '\n';
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
  if (r.homology) {
    out << "reduced homology over " << r.homology->field().to_string() << ":\n";
    for (int i = -1; i <= r.homology->max_index(); ++i)
      out << "  H~_" << i << " = " << r.homology->at(i) << '\n';
  }
  if (r.scope_flags) {
    out << "properties:\n";
    render_flags(out, *r.scope_flags, "  ");
  }
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    const auto& c = r.components[i];
    out << "component " << (i < r.component_names.size() ? r.component_names[i] : "?")
        << ": trace class " << to_string(c.trace_class);
    if (c.contained_in_m_squared) out << " (tr in m^2)";
    out << '\n';
    if (!c.unknown_reason.empty()) out << "  reason: " << c.unknown_reason << '\n';
    for (const auto& e : c.evidence)
      out << "  [" << to_string(e.rule) << "] " << e.predicate << " = " << e.result << '\n';
  }
  if (r.fiber) {
    const auto& f = *r.fiber;
    out << "fiber product (dim " << f.overall_dim << "): tr =";
    for (std::size_t i = 0; i < f.summands.size(); ++i)
      out << (i ? " + " : " ") << ideal_text(f.summands[i]);
    out << '\n'
        << "  tr = R:        " << tri_text(f.equals_ring) << '\n'
        << "  tr = m:        " << tri_text(f.equals_m) << '\n'
        << "  sqrt(tr) = m:  " << tri_text(f.m_primary) << '\n'
        << "  tr >= m^2:     " << tri_text(f.contains_m2) << '\n'
        << "  tr = m^2:      " << tri_text(f.equals_m2) << '\n';
    for (const auto& e : f.evidence)
      out << "  [" << to_string(e.rule) << "] " << e.predicate << " = " << e.result << '\n';
  }
  return out.str();
}

}  // namespace srtrace
