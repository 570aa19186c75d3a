#pragma once

// Table of fiber-product cases shared by the unit and acceptance suites.
// Each row covers one clause of the pairwise or n-fold trace conditions.

#include <optional>
#include <string>
#include <vector>

#include "srtrace/error.hpp"
#include "srtrace/trace_combine.hpp"

namespace descriptor_matrix {

using srtrace::IdealClass;
using srtrace::RingDescriptor;
using srtrace::SummandKind;
using srtrace::Tri;
using srtrace::TriState;

inline RingDescriptor ring(std::string name, int dim, IdealClass c,
                           TriState socle = TriState::unknown("not supplied"),
                           bool reduced = false) {
  RingDescriptor d;
  d.name = std::move(name);
  d.dim = dim;
  d.trace_class = c;
  d.socle_square_zero = std::move(socle);
  d.reduced = reduced;
  return d;
}

struct Row {
  std::string clause;
  std::vector<RingDescriptor> factors;
  std::vector<std::pair<SummandKind, IdealClass>> summands;
  Tri equals_m = Tri::Unknown;
  Tri m_primary = Tri::Unknown;
  std::optional<srtrace::ErrorCode> error;
};

inline std::vector<Row> rows() {
  using enum IdealClass;
  const auto yes = TriState::yes();
  const auto no = TriState::no();
  const auto D = SummandKind::Dagger;
  const auto S = SummandKind::Socle;
  const auto Z = SummandKind::Zero;
  return {
      {"equal dims, both traces contain m",
       {ring("A", 2, WholeRing), ring("B", 2, ContainsM)},
       {{D, EqualsM}, {D, EqualsM}}, Tri::Yes, Tri::Yes, {}},
      {"equal dims, one trace misses m",
       {ring("A", 2, WholeRing), ring("B", 2, EqualsM2)},
       {{D, EqualsM}, {D, EqualsM2}}, Tri::No, Tri::Yes, {}},
      {"dim A > dim B = 0 with m_B^2 = 0",
       {ring("A", 2, WholeRing), ring("B", 0, RadicalEqualsM, yes)},
       {{D, EqualsM}, {S, Unknown}}, Tri::Yes, Tri::Yes, {}},
      {"dim A > dim B = 0 with m_B^2 != 0",
       {ring("A", 2, WholeRing), ring("B", 0, EqualsM, no)},
       {{D, EqualsM}, {S, Unknown}}, Tri::No, Tri::Yes, {}},
      {"dim B > dim A = 0 with m_A^2 = 0",
       {ring("A", 0, WholeRing, yes), ring("B", 3, EqualsM)},
       {{S, Unknown}, {D, EqualsM}}, Tri::Yes, Tri::Yes, {}},
      {"dim A > dim B = 0, top trace misses m",
       {ring("A", 2, EqualsM2), ring("B", 0, EqualsM, yes)},
       {{D, EqualsM2}, {S, Unknown}}, Tri::No, Tri::Yes, {}},
      {"dim A > dim B > 0",
       {ring("A", 3, WholeRing), ring("B", 2, WholeRing)},
       {{D, EqualsM}, {S, Unknown}}, Tri::No, Tri::No, {}},
      {"equal dims, radicals contain m",
       {ring("A", 2, RadicalEqualsM), ring("B", 2, EqualsM2)},
       {{D, RadicalEqualsM}, {D, EqualsM2}}, Tri::No, Tri::Yes, {}},
      {"equal dims, one radical misses m",
       {ring("A", 2, Other), ring("B", 2, WholeRing)},
       {{D, Other}, {D, EqualsM}}, Tri::No, Tri::No, {}},
      {"dim A > dim B = 0, radical of A contains m",
       {ring("A", 3, RadicalEqualsM), ring("B", 0, EqualsM)},
       {{D, RadicalEqualsM}, {S, Unknown}}, Tri::Unknown, Tri::Yes, {}},
      {"dim A > dim B = 0, radical of A misses m",
       {ring("A", 3, Other), ring("B", 0, EqualsM, yes)},
       {{D, Other}, {S, Unknown}}, Tri::No, Tri::No, {}},
      {"n-fold: top traces contain m, low factors have m^2 = 0",
       {ring("A", 2, WholeRing), ring("B", 2, ContainsM), ring("C", 0, EqualsM, yes)},
       {{D, EqualsM}, {D, EqualsM}, {S, Unknown}}, Tri::Yes, Tri::Yes, {}},
      {"n-fold: a low factor has m^2 != 0",
       {ring("A", 2, WholeRing), ring("B", 2, ContainsM), ring("C", 0, EqualsM, no)},
       {{D, EqualsM}, {D, EqualsM}, {S, Unknown}}, Tri::No, Tri::Yes, {}},
      {"n-fold: a low factor has positive dimension",
       {ring("A", 2, WholeRing), ring("B", 2, WholeRing), ring("C", 1, WholeRing)},
       {{D, EqualsM}, {D, EqualsM}, {S, Unknown}}, Tri::No, Tri::No, {}},
      {"n-fold reduced: classes R, m, m^2 in equal dims",
       {ring("A", 2, WholeRing, no, true), ring("B", 2, EqualsM, no, true),
        ring("C", 2, EqualsM2, no, true)},
       {{D, EqualsM}, {D, EqualsM}, {D, EqualsM2}}, Tri::No, Tri::Yes, {}},
      {"n-fold reduced: dims differ",
       {ring("A", 2, WholeRing, no, true), ring("B", 1, WholeRing, no, true)},
       {{D, EqualsM}, {Z, Unknown}}, Tri::No, Tri::No, {}},
      {"n-fold reduced: all quasi-Gorenstein in equal dims",
       {ring("A", 3, WholeRing, no, true), ring("B", 3, WholeRing, no, true),
        ring("C", 3, WholeRing, no, true)},
       {{D, EqualsM}, {D, EqualsM}, {D, EqualsM}}, Tri::Yes, Tri::Yes, {}},
      {"dimension one guard",
       {ring("A", 1, WholeRing), ring("B", 1, WholeRing)}, {}, Tri::Unknown, Tri::Unknown,
       srtrace::ErrorCode::Dim1Unsupported},
      {"dimension one guard with an Artinian factor",
       {ring("A", 1, WholeRing), ring("B", 0, EqualsM, yes)}, {}, Tri::Unknown, Tri::Unknown,
       srtrace::ErrorCode::Dim1Unsupported},
  };
}

/// Runs one row; returns an empty string on success, else what went wrong.
inline std::string check(const Row& row) {
  try {
    const auto report = srtrace::combine_many(row.factors);
    if (row.error) return "expected an error";
    if (report.summands.size() != row.summands.size()) return "summand count";
    for (std::size_t i = 0; i < row.summands.size(); ++i) {
      if (report.summands[i].component != row.factors[i].name) return "summand order";
      if (report.summands[i].kind != row.summands[i].first) return "summand kind";
      if (report.summands[i].kind == SummandKind::Dagger &&
          report.summands[i].ideal != row.summands[i].second)
        return "summand ideal";
    }
    if (!report.equals_ring.is_no()) return "equals_ring";
    if (report.equals_m.value != row.equals_m) return "equals_m";
    if (report.m_primary.value != row.m_primary) return "m_primary";
    return {};
  } catch (const srtrace::Error& e) {
    if (row.error && e.code() == *row.error) return {};
    return std::string("unexpected error: ") + e.what();
  }
}

}  // namespace descriptor_matrix
