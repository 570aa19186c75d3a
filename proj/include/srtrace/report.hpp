#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "srtrace/classify.hpp"
#include "srtrace/homology.hpp"
#include "srtrace/trace_combine.hpp"

namespace srtrace {

struct InputSummary {
  std::size_t vertices = 0;
  std::size_t facets = 0;
  int dim = -1;
  std::vector<std::size_t> f_vector;
  std::size_t components = 0;

  friend bool operator==(const InputSummary&, const InputSummary&) = default;
};

InputSummary summarize(const SimplicialComplex& complex);

/// Everything a CLI command reports. Sections a command does not produce
/// stay empty and are omitted from JSON.
struct Report {
  std::string command;
  std::optional<InputSummary> input;
  std::optional<std::string> field;
  std::optional<ScopeFlags> scope_flags;
  std::optional<HomologyProfile> homology;
  std::vector<std::string> component_names;
  std::vector<TraceReport> components;
  std::optional<FiberTraceReport> fiber;
  std::vector<std::string> warnings;

  friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const TriState& t);
void from_json(const nlohmann::json& j, TriState& t);
void to_json(nlohmann::json& j, const Evidence& e);
void from_json(const nlohmann::json& j, Evidence& e);
void to_json(nlohmann::json& j, const ScopeFlags& f);
void from_json(const nlohmann::json& j, ScopeFlags& f);
void to_json(nlohmann::json& j, const HomologyProfile& h);
HomologyProfile homology_from_json(const nlohmann::json& j);
void to_json(nlohmann::json& j, const TraceReport& r);
void from_json(const nlohmann::json& j, TraceReport& r);
void to_json(nlohmann::json& j, const Summand& s);
void from_json(const nlohmann::json& j, Summand& s);
void to_json(nlohmann::json& j, const FiberTraceReport& r);
void from_json(const nlohmann::json& j, FiberTraceReport& r);
void to_json(nlohmann::json& j, const InputSummary& s);
void from_json(const nlohmann::json& j, InputSummary& s);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

/// RingDescriptor JSON: {"name", "dim", "trace_class", "socle_square_zero":
/// "yes"|"no"|"unknown", "reduced", "nontrivial"}. trace_class accepts the
/// IdealClass names case-insensitively and snake_case ("whole_ring").
void to_json(nlohmann::json& j, const RingDescriptor& d);
void from_json(const nlohmann::json& j, RingDescriptor& d);

/// Report builders shared by the CLI and the Python bindings. `warnings`
/// seeds the warning list (e.g. parser messages).
Report analyze_report(const SimplicialComplex& complex, const FieldSpec& field,
                      const ClassifyOptions& options = {},
                      std::vector<std::string> warnings = {});
/// Over Q the integral torsion is listed among the warnings.
Report homology_report(const SimplicialComplex& complex, const FieldSpec& field,
                       std::vector<std::string> warnings = {});
Report classify_report(const SimplicialComplex& complex, const FieldSpec& field,
                       const ClassifyOptions& options = {},
                       std::vector<std::string> warnings = {});
Report combine_report(std::span<const RingDescriptor> descriptors);

/// True when some classified component is not normal.
bool has_non_normal_component(const Report& report);

/// Human-readable rendering of a report.
std::string render_text(const Report& report);

}  // namespace srtrace
