#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srtrace/classify.hpp"
#include "srtrace/complex.hpp"
#include "srtrace/field_arith.hpp"
#include "srtrace/verdict.hpp"

namespace srtrace {

/// Classes of the canonical trace ideal of a graded ring that the fiber
/// product calculus distinguishes. `Other` means the radical does not contain
/// the maximal ideal; `Unknown` propagates an undecided component.
enum class IdealClass {
  WholeRing,
  EqualsM,
  EqualsM2,
  ContainsM,
  RadicalEqualsM,
  Other,
  Unknown,
};

std::string_view to_string(IdealClass value);
IdealClass ideal_class_from_string(std::string_view text);

/// Abstract summary of a positively graded ring A with A_0 = k.
struct RingDescriptor {
  std::string name;
  int dim = 0;
  /// A != A_0.
  bool nontrivial = true;
  IdealClass trace_class = IdealClass::Other;
  /// m_A^2 = 0.
  TriState socle_square_zero = TriState::unknown("not supplied");
  bool reduced = false;

  bool is_artinian() const { return dim == 0; }

  /// Throws InvalidDescriptor on inconsistent data. A ring of positive
  /// dimension gets socle_square_zero = No when it was Unknown.
  RingDescriptor normalized() const;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

/// tr^†: the trace when proper, m when the trace is the whole ring (or
/// contains m).
IdealClass dagger(IdealClass trace_class);

enum class SummandKind { Dagger, Socle, Zero };
std::string_view to_string(SummandKind value);
SummandKind summand_kind_from_string(std::string_view text);

struct Summand {
  std::string component;
  SummandKind kind = SummandKind::Zero;
  /// tr^† class for Dagger summands; Unknown otherwise.
  IdealClass ideal = IdealClass::Unknown;

  friend bool operator==(const Summand&, const Summand&) = default;
};

struct FiberTraceReport {
  int overall_dim = 0;
  std::vector<Summand> summands;
  /// Always No: a fiber product of nontrivial rings is never quasi-Gorenstein.
  TriState equals_ring = TriState::no();
  TriState equals_m;
  /// sqrt(tr) = m.
  TriState m_primary;
  TriState contains_m2;
  TriState equals_m2;
  std::vector<Evidence> evidence;

  friend bool operator==(const FiberTraceReport&, const FiberTraceReport&) = default;
};

/// Trace of A ×_k B. Throws TrivialFactor or Dim1Unsupported.
FiberTraceReport combine_pair(const RingDescriptor& a, const RingDescriptor& b);

/// Trace of A_1 ×_k ... ×_k A_n, n >= 2.
FiberTraceReport combine_many(std::span<const RingDescriptor> factors);

/// Descriptor of k[Δ_i] derived from its connected classification.
RingDescriptor descriptor_from_report(std::string name, const SimplicialComplex& component,
                                      const TraceReport& report);

struct SrTraceResult {
  /// Per connected component, in connected_components order.
  std::vector<TraceReport> components;
  std::vector<std::string> component_names;
  /// Present when Δ has at least two components.
  std::optional<FiberTraceReport> fiber;
};

/// Canonical-trace analysis of k[Δ]: connected input delegates to
/// classify_trace_connected; otherwise the components are combined through
/// the fiber-product formula. Throws Dim1Unsupported for disconnected
/// zero-dimensional Δ.
SrTraceResult classify_sr(const SimplicialComplex& complex, const FieldSpec& field,
                          const ClassifyOptions& options = {});

}  // namespace srtrace
