#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "srtrace/complex.hpp"
#include "srtrace/field_arith.hpp"

namespace srtrace {

/// One representative per isomorphism class of simplicial complexes whose
/// vertex set has between 1 and `max_vertices` elements (every vertex used),
/// plus the irrelevant complex {∅}. Throws IndexOutOfRange above 5 vertices.
std::vector<SimplicialComplex> enumerate_complexes(std::size_t max_vertices);

struct SweepOptions {
  std::size_t max_vertices = 5;
  /// Disconnected complexes are assembled from connected classes up to this
  /// total vertex count; 0 disables that part.
  std::size_t disconnected_max_vertices = 6;
  std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::prime(2),
                                   FieldSpec::prime(3)};
};

struct SweepSummary {
  std::size_t complexes = 0;
  std::size_t connected = 0;
  std::size_t connected_normal = 0;
  std::size_t field_checks = 0;

  std::size_t betti_mismatches = 0;        // field rank vs integral Smith form
  std::size_t euler_violations = 0;
  std::size_t gorenstein_not_cm = 0;
  std::size_t cm_connected_not_normal = 0;
  std::size_t punctured_equivalence_violations = 0;
  std::size_t unknown_verdicts = 0;
  std::size_t unknown_verdicts_cm = 0;
  std::size_t max_ideal_in_high_dim = 0;
  std::size_t cone_point_violations = 0;
  std::size_t pseudomanifold_top_violations = 0;

  std::size_t disconnected_checked = 0;
  std::size_t disconnected_skipped_unknown = 0;
  std::size_t disconnected_mismatches = 0;

  /// Human-readable description of the first few violations.
  std::vector<std::string> failures;

  std::size_t violations() const;
  bool ok() const { return violations() == 0 && unknown_verdicts_cm == 0; }
};

SweepSummary run_sweep(const SweepOptions& options = {});

}  // namespace srtrace
