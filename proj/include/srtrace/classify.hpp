#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "srtrace/complex.hpp"
#include "srtrace/field_arith.hpp"
#include "srtrace/verdict.hpp"

namespace srtrace {

// Ring-theoretic properties of the Stanley-Reisner ring k[Δ], decided from
// the combinatorics and homology of Δ.

/// Reisner: H̃_i(lk σ; k) = 0 for i < dim lk σ, for every face σ including ∅.
bool is_cohen_macaulay(const SimplicialComplex& complex, const FieldSpec& field);

/// Every vertex link is Cohen-Macaulay.
bool is_cm_on_punctured(const SimplicialComplex& complex, const FieldSpec& field);

/// Hochster: the link of the maximal cone face is a k-homology sphere.
bool is_gorenstein(const SimplicialComplex& complex, const FieldSpec& field);

/// Every vertex link is Gorenstein. With `all_faces` every nonempty face's
/// link is checked instead, which agrees by induction on the face.
bool is_gorenstein_on_punctured(const SimplicialComplex& complex, const FieldSpec& field,
                                bool all_faces = false);

/// Yes/No where a criterion applies, Unknown otherwise. Throws Disconnected.
TriState is_quasi_gorenstein(const SimplicialComplex& complex, const FieldSpec& field);

/// Teter type coincides with quasi-Gorenstein for unmixed (pure) complexes.
TriState is_teter_type(const SimplicialComplex& complex, const FieldSpec& field);

enum class TraceClass {
  EqualsRing,
  EqualsMaxIdeal,
  EqualsMaxIdealSquared,
  NotMPrimary,
  ContainedInMSquared,
  Unknown,
};

std::string_view to_string(TraceClass value);
TraceClass trace_class_from_string(std::string_view text);

struct ScopeFlags {
  bool connected = false;
  bool normal = false;
  bool pure = false;
  bool cm = false;
  bool cm_punctured = false;
  bool gorenstein = false;
  bool gorenstein_punctured = false;
  TriState quasi_gorenstein;
  bool pseudomanifold = false;
  /// k-orientability; Unknown when Δ is not a pseudomanifold.
  TriState orientable;
  TriState orientable_integral;
  bool homology_manifold = false;
  bool homology_sphere = false;
  /// Path graph with at least three edges.
  bool long_path = false;
  std::vector<std::string> cone_points;

  friend bool operator==(const ScopeFlags&, const ScopeFlags&) = default;
};

struct ClassifyOptions {
  /// Gorenstein-on-punctured via all nonempty faces rather than vertices.
  bool all_faces = false;
};

ScopeFlags compute_scope_flags(const SimplicialComplex& complex, const FieldSpec& field,
                               const ClassifyOptions& options = {});

struct TraceReport {
  TraceClass trace_class = TraceClass::Unknown;
  /// tr ⊆ m^2 is known (non-orientable normal pseudomanifold).
  bool contained_in_m_squared = false;
  FieldSpec field = FieldSpec::rationals();
  ScopeFlags flags;
  std::vector<Evidence> evidence;
  /// Set when trace_class is Unknown.
  std::string unknown_reason;

  friend bool operator==(const TraceReport&, const TraceReport&) = default;
};

/// Canonical-trace class of k[Δ] for connected Δ. Non-normal input yields an
/// Unknown report with the flags filled in; disconnected input throws.
TraceReport classify_trace_connected(const SimplicialComplex& complex, const FieldSpec& field,
                                     const ClassifyOptions& options = {});

}  // namespace srtrace
