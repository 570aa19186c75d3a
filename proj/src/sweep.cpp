#include "srtrace/sweep.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

#include "srtrace/classify.hpp"
#include "srtrace/error.hpp"
#include "srtrace/homology.hpp"
#include "srtrace/trace_combine.hpp"

namespace srtrace {

namespace {

constexpr std::size_t kMaxEnumerated = 5;
constexpr std::size_t kMaxFailuresKept = 20;

// A face family on k <= 5 vertices is a 32-bit set indexed by vertex masks.
using Family = std::uint64_t;

struct Enumerator {
  std::size_t k;
  std::vector<std::uint32_t> order;                  // nonempty masks by size
  std::vector<std::vector<std::uint32_t>> perm_maps;  // perm_maps[p][mask]
  std::set<Family> seen;

  explicit Enumerator(std::size_t vertices) : k(vertices) {
    const std::uint32_t full = 1U << k;
    for (std::uint32_t m = 1; m < full; ++m) order.push_back(m);
    std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
      return std::popcount(a) < std::popcount(b);
    });
    std::vector<std::uint32_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0U);
    do {
      std::vector<std::uint32_t> map(full, 0);
      for (std::uint32_t m = 0; m < full; ++m)
        for (std::size_t b = 0; b < k; ++b)
          if (m & (1U << b)) map[m] |= 1U << perm[b];
      perm_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  Family canonical(Family family) const {
    Family best = ~Family{0};
    for (const auto& map : perm_maps) {
      Family image = 0;
      for (Family rest = family; rest != 0; rest &= rest - 1)
        image |= Family{1} << map[static_cast<std::size_t>(std::countr_zero(rest))];
      best = std::min(best, image);
    }
    return best;
  }

  void dfs(std::size_t pos, Family family) {
    if (pos == order.size()) {
      seen.insert(canonical(family));
      return;
    }
    const std::uint32_t m = order[pos];
    const Family bit = Family{1} << m;
    if (std::popcount(m) == 1) {
      dfs(pos + 1, family | bit);
      return;
    }
    dfs(pos + 1, family);
    for (std::uint32_t rest = m; rest != 0; rest &= rest - 1) {
      const std::uint32_t sub = m & ~(rest & -rest);
      if (!(family & (Family{1} << sub))) return;
    }
    dfs(pos + 1, family | bit);
  }

  SimplicialComplex to_complex(Family family) const {
    std::vector<Face> faces;
    for (Family rest = family & ~Family{1}; rest != 0; rest &= rest - 1) {
      const auto m = static_cast<std::uint32_t>(std::countr_zero(rest));
      std::vector<VertexId> ids;
      for (std::size_t b = 0; b < k; ++b)
        if (m & (1U << b)) ids.push_back(static_cast<VertexId>(b));
      faces.emplace_back(std::move(ids));
    }
    return SimplicialComplex::from_faces(k, std::move(faces));
  }
};

long reduced_euler_from_faces(const SimplicialComplex& complex) {
  long chi = 0;
  const auto f = f_vector(complex);
  for (std::size_t i = 0; i < f.size(); ++i)
    chi += (i % 2 == 0 ? -1L : 1L) * static_cast<long>(f[i]);
  return chi;
}

long reduced_euler_from_betti(const HomologyProfile& betti) {
  long chi = 0;
  for (int i = -1; i <= betti.max_index(); ++i)
    chi += ((i + 2) % 2 == 0 ? 1L : -1L) * static_cast<long>(betti.at(i));
  return chi;
}

bool is_power_of_m(TraceClass c) {
  return c == TraceClass::EqualsRing || c == TraceClass::EqualsMaxIdeal ||
         c == TraceClass::EqualsMaxIdealSquared;
}

class Recorder {
 public:
  explicit Recorder(SweepSummary& summary) : summary_(summary) {}

  void fail(std::size_t& counter, const SimplicialComplex& complex, const FieldSpec& field,
            const std::string& what) {
    ++counter;
    if (summary_.failures.size() < kMaxFailuresKept) {
      std::string facets = to_facet_list(complex);
      std::replace(facets.begin(), facets.end(), '\n', ';');
      summary_.failures.push_back(what + " over " + field.to_string() + " on [" + facets + "]");
    }
  }

 private:
  SweepSummary& summary_;
};

void check_connected(const SimplicialComplex& complex, const FieldSpec& field,
                     SweepSummary& s, Recorder& rec) {
  TraceReport report;
  try {
    report = classify_trace_connected(complex, field);
  } catch (const Error& e) {
    rec.fail(s.punctured_equivalence_violations, complex, field,
             std::string("classification raised: ") + e.what());
    return;
  }
  const auto& f = report.flags;
  if (report.trace_class == TraceClass::Unknown) {
    ++s.unknown_verdicts;
    if (f.cm) rec.fail(s.unknown_verdicts_cm, complex, field, "Unknown verdict for CM complex");
  } else if (f.gorenstein_punctured != is_power_of_m(report.trace_class)) {
    rec.fail(s.punctured_equivalence_violations, complex, field,
             "Gorenstein on punctured spectrum disagrees with verdict " +
                 std::string(to_string(report.trace_class)));
  }
  if (complex.dim() >= 2 && report.trace_class == TraceClass::EqualsMaxIdeal)
    rec.fail(s.max_ideal_in_high_dim, complex, field, "tr = m in dimension >= 2");
  if (!f.cone_points.empty() && f.quasi_gorenstein.is_no() && f.gorenstein_punctured)
    rec.fail(s.cone_point_violations, complex, field,
             "cone point, not quasi-Gorenstein, yet Gorenstein on punctured spectrum");
}

void check_complex(const SimplicialComplex& complex, const std::vector<FieldSpec>& fields,
                   SweepSummary& s, Recorder& rec) {
  ++s.complexes;
  const bool connected = is_connected(complex);
  const bool normal = is_normal(complex);
  if (connected) ++s.connected;
  if (connected && normal) ++s.connected_normal;
  const auto integral = integral_homology(complex);
  const long chi = reduced_euler_from_faces(complex);
  const bool pseudomanifold = is_pseudomanifold(complex);

  for (const auto& field : fields) {
    ++s.field_checks;
    const auto betti = reduced_betti(complex, field);
    if (betti.values() != integral.over(field).values())
      rec.fail(s.betti_mismatches, complex, field, "Betti numbers disagree with Smith form");
    if (reduced_euler_from_betti(betti) != chi)
      rec.fail(s.euler_violations, complex, field, "Euler-Poincare fails");
    const bool cm = is_cohen_macaulay(complex, field);
    if (is_gorenstein(complex, field) && !cm)
      rec.fail(s.gorenstein_not_cm, complex, field, "Gorenstein but not Cohen-Macaulay");
    if (cm && connected && !normal)
      rec.fail(s.cm_connected_not_normal, complex, field, "connected CM but not normal");
    if (pseudomanifold && betti.at(complex.dim()) > 1)
      rec.fail(s.pseudomanifold_top_violations, complex, field,
               "pseudomanifold with top Betti number above 1");
    if (connected && normal) check_connected(complex, field, s, rec);
  }
}

void check_disjoint_unions(const std::vector<SimplicialComplex>& classes,
                           const SweepOptions& options, SweepSummary& s, Recorder& rec) {
  std::vector<const SimplicialComplex*> connected;
  for (const auto& c : classes)
    if (!c.is_irrelevant() && is_connected(c)) connected.push_back(&c);

  std::vector<std::size_t> chosen;
  auto visit = [&](auto&& self, std::size_t start, std::size_t vertices) -> void {
    if (chosen.size() >= 2) {
      std::vector<SimplicialComplex> parts;
      for (auto i : chosen) parts.push_back(*connected[i]);
      const auto complex = disjoint_union(parts);
      if (complex.dim() > 0) {
        for (const auto& field : options.fields) {
          try {
            const auto result = classify_sr(complex, field);
            bool any_unknown = false;
            bool expected = true;
            for (std::size_t i = 0; i < result.components.size(); ++i) {
              const auto c = result.components[i].trace_class;
              any_unknown = any_unknown || c == TraceClass::Unknown;
              expected = expected &&
                         (c == TraceClass::EqualsRing || c == TraceClass::EqualsMaxIdeal);
            }
            if (any_unknown) {
              ++s.disconnected_skipped_unknown;
              continue;
            }
            const auto comps = connected_components(complex);
            for (const auto& comp : comps) expected = expected && comp.dim() == complex.dim();
            ++s.disconnected_checked;
            if (result.fiber->equals_m.value != (expected ? Tri::Yes : Tri::No))
              rec.fail(s.disconnected_mismatches, complex, field,
                       "fiber-product equals_m disagrees with the component test");
          } catch (const Error& e) {
            rec.fail(s.disconnected_mismatches, complex, field,
                     std::string("disjoint-union classification raised: ") + e.what());
          }
        }
      }
    }
    for (std::size_t i = start; i < connected.size(); ++i) {
      const auto n = connected[i]->vertex_count();
      if (vertices + n > options.disconnected_max_vertices) continue;
      chosen.push_back(i);
      self(self, i, vertices + n);
      chosen.pop_back();
    }
  };
  visit(visit, 0, 0);
}

}  // namespace

std::vector<SimplicialComplex> enumerate_complexes(std::size_t max_vertices) {
  if (max_vertices > kMaxEnumerated)
    throw Error(ErrorCode::IndexOutOfRange, "exhaustive enumeration supports at most 5 vertices");
  std::vector<SimplicialComplex> out{SimplicialComplex::irrelevant()};
  for (std::size_t k = 1; k <= max_vertices; ++k) {
    Enumerator e(k);
    e.dfs(0, Family{1});
    for (Family f : e.seen) out.push_back(e.to_complex(f));
  }
  return out;
}

std::size_t SweepSummary::violations() const {
  return betti_mismatches + euler_violations + gorenstein_not_cm + cm_connected_not_normal +
         punctured_equivalence_violations + max_ideal_in_high_dim + cone_point_violations +
         pseudomanifold_top_violations + disconnected_mismatches;
}

SweepSummary run_sweep(const SweepOptions& options) {
  SweepSummary summary;
  Recorder rec(summary);
  const auto classes = enumerate_complexes(options.max_vertices);
  for (const auto& complex : classes) check_complex(complex, options.fields, summary, rec);
  if (options.disconnected_max_vertices > 0) {
    const auto pool = options.disconnected_max_vertices > options.max_vertices
                          ? enumerate_complexes(
                                std::min(options.disconnected_max_vertices - 1, kMaxEnumerated))
                          : classes;
    check_disjoint_unions(pool, options, summary, rec);
  }
  return summary;
}

}  // namespace srtrace
