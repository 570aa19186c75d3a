#pragma once

#include <cstddef>
#include <vector>

#include "srtrace/complex.hpp"
#include "srtrace/field_arith.hpp"

namespace srtrace {

/// Reduced Betti numbers dim_k H̃_i for i = -1 .. dim.
class HomologyProfile {
 public:
  HomologyProfile(FieldSpec field, std::vector<std::size_t> betti_from_minus_one)
      : field_(field), betti_(std::move(betti_from_minus_one)) {}

  const FieldSpec& field() const { return field_; }
  /// Zero outside the stored range.
  std::size_t at(int i) const;
  int max_index() const { return static_cast<int>(betti_.size()) - 2; }
  const std::vector<std::size_t>& values() const { return betti_; }

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;

 private:
  FieldSpec field_;
  std::vector<std::size_t> betti_;
};

/// Augmented boundary map ∂_i : C_i -> C_{i-1}; rows index (i-1)-faces and
/// columns i-faces in faces_of_dim order. ∂_0 maps every vertex to ∅.
/// Valid for -1 <= i <= dim + 1.
SparseIntMatrix boundary_matrix(const SimplicialComplex& complex, int i);

HomologyProfile reduced_betti(const SimplicialComplex& complex, const FieldSpec& field);

/// Reduced integral homology from Smith normal forms of the boundary maps.
struct IntegralHomology {
  /// free_rank[i + 1] = rank of the free part of H̃_i(Δ; Z).
  std::vector<std::size_t> free_rank;
  /// smith[i + 1] = Smith form of ∂_i, i = -1 .. dim + 1.
  std::vector<SmithForm> smith;

  std::size_t free_at(int i) const;
  /// Torsion coefficients (> 1) of H̃_i(Δ; Z).
  std::vector<mpz_class> torsion_at(int i) const;
  /// dim_k H̃_i via universal coefficients.
  HomologyProfile over(const FieldSpec& field) const;
};

IntegralHomology integral_homology(const SimplicialComplex& complex);

/// (*) at σ: the link has the reduced homology of a sphere of its own
/// dimension over k. Throws FaceNotInComplex when σ ∉ Δ.
bool star_condition(const SimplicialComplex& complex, const Face& face,
                    const FieldSpec& field);

bool is_homology_sphere(const SimplicialComplex& complex, const FieldSpec& field);
bool is_homology_manifold(const SimplicialComplex& complex, const FieldSpec& field);

/// Strongly connected, dim >= 0, every ridge in exactly two facets.
bool is_pseudomanifold(const SimplicialComplex& complex);

/// Top homology over k is nonzero. Throws NotPseudomanifold outside the
/// pseudomanifold case. Dimension-0 pseudomanifolds count as orientable.
bool is_orientable_over(const SimplicialComplex& complex, const FieldSpec& field);
bool is_orientable_integral(const SimplicialComplex& complex);

/// Number of cached homology profiles (all fields).
std::size_t homology_cache_size();
void clear_homology_cache();

}  // namespace srtrace
