#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace srtrace {

enum class Tri { Yes, No, Unknown };

/// Three-valued verdict. Unknown always carries the reason a criterion could
/// not decide.
struct TriState {
  Tri value = Tri::Unknown;
  std::string reason;

  static TriState yes() { return {Tri::Yes, {}}; }
  static TriState no() { return {Tri::No, {}}; }
  static TriState unknown(std::string why) { return {Tri::Unknown, std::move(why)}; }
  static TriState from_bool(bool b) { return b ? yes() : no(); }

  bool is_yes() const { return value == Tri::Yes; }
  bool is_no() const { return value == Tri::No; }
  bool is_unknown() const { return value == Tri::Unknown; }

  friend bool operator==(const TriState&, const TriState&) = default;
};

/// Kleene conjunction; the first Unknown reason is kept.
TriState tri_and(const TriState& a, const TriState& b);
TriState tri_not(const TriState& a);

std::string_view to_string(Tri value);
Tri tri_from_string(std::string_view text);

/// Identifiers of the classification rules a verdict can rest on.
enum class Rule {
  ReisnerCriterion,                // Cohen-Macaulay via reduced homology of links
  HochsterGorenstein,              // Gorenstein iff link of the cone face is a homology sphere
  VertexLinkLocalization,          // punctured-spectrum properties from vertex links
  OrientablePseudomanifoldQuasiGorenstein,
  NonorientableTraceInM2,          // non-orientable normal pseudomanifold: tr ⊆ m^2
  PseudomanifoldFromLinks,
  NoConePoint,
  DegreeOneTrace,                  // dim >= 2: tr ⊇ m with [tr]_1 != 0 forces tr = R
  CanonicalPowerClassification,    // Gorenstein on punctured spectrum iff tr = m^i, i <= 2
  NearlyGorensteinPath,
  NonorientableManifoldSquare,
  TeterType,
  DaggerTrace,
  FiberProductTrace,
  FiberProductMaxIdeal,
  FiberProductPrimary,
  FiberProductNeverQuasiGorenstein,
  DisjointUnionTrace,
  DisjointUnionPowers,
  PathLengthConvention,
};

std::string_view to_string(Rule rule);
Rule rule_from_string(std::string_view text);
std::vector<Rule> all_rules();

struct Evidence {
  std::string predicate;
  std::string result;
  Rule rule;

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

}  // namespace srtrace
