#pragma once

#include <bitset>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace srtrace {

using VertexId = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids. The empty face has dimension -1.
class Face {
 public:
  Face() = default;
  explicit Face(std::vector<VertexId> ids);
  Face(std::initializer_list<VertexId> ids) : Face(std::vector<VertexId>(ids)) {}

  int dim() const { return static_cast<int>(ids_.size()) - 1; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(VertexId v) const;
  bool is_subset_of(const Face& other) const;
  bool intersects(const Face& other) const;

  const std::vector<VertexId>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  VertexId operator[](std::size_t i) const { return ids_[i]; }

  Face without_index(std::size_t i) const;
  Face set_union(const Face& other) const;
  Face set_difference(const Face& other) const;
  Face set_intersection(const Face& other) const;

  friend auto operator<=>(const Face&, const Face&) = default;
  friend bool operator==(const Face&, const Face&) = default;

 private:
  std::vector<VertexId> ids_;
};

/// A finite abstract simplicial complex stored by its facets.
///
/// Vertices are dense ids 0..n-1 with a label table for round-tripping the
/// external names. Facets form an antichain and every vertex lies in some
/// facet. The irrelevant complex {∅} has no vertices and the single facet ∅;
/// the void complex is not representable. Values are immutable.
class SimplicialComplex {
 public:
  /// Builds a complex from arbitrary faces over the given labels. Faces
  /// contained in other faces are dropped; `absorbed` (when non-null)
  /// receives the dropped faces. Vertices not covered by any face
  /// are an error, as are out-of-range ids.
  static SimplicialComplex from_faces(std::vector<std::string> labels,
                                      std::vector<Face> faces,
                                      std::vector<Face>* absorbed = nullptr);

  /// Convenience for tests and builtins: labels are "1".."n".
  static SimplicialComplex from_faces(std::size_t vertex_count,
                                      std::vector<Face> faces,
                                      std::vector<Face>* absorbed = nullptr);

  static SimplicialComplex irrelevant();

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<Face>& facets() const { return facets_; }
  int dim() const { return dim_; }
  bool is_irrelevant() const { return labels_.empty(); }

  bool contains(const Face& face) const;

  /// All faces of dimension i (i >= -1), lexicographically sorted.
  const std::vector<Face>& faces_of_dim(int i) const;
  std::size_t face_count(int i) const { return faces_of_dim(i).size(); }
  /// Every face including ∅, ordered by dimension then lexicographically.
  std::vector<Face> all_faces() const;

  /// Index of a face inside faces_of_dim(face.dim()).
  std::size_t face_index(const Face& face) const;

  /// Structural key independent of labels, used for caching.
  std::string structure_key() const;

  std::vector<std::string> face_labels(const Face& face) const;

  friend bool operator==(const SimplicialComplex& a,
                         const SimplicialComplex& b) {
    return a.labels_ == b.labels_ && a.facets_ == b.facets_;
  }

 private:
  SimplicialComplex() = default;
  void build_index();

  std::vector<std::string> labels_;
  std::vector<Face> facets_;
  std::vector<std::bitset<128>> facet_masks_;
  std::vector<std::vector<Face>> faces_by_dim_;  // index dim + 1
  int dim_ = -1;
};

/// Natural label ordering: integers numerically, everything else after them
/// lexicographically.
bool label_less(std::string_view a, std::string_view b);

struct ParsedComplex {
  SimplicialComplex complex;
  std::vector<std::string> warnings;
};

/// Parses the facet-list text format (one facet per line, whitespace
/// separated labels, `#` comment lines) or the JSON form
/// {"facets": [["1","2"], ...]}.
ParsedComplex parse_complex(std::string_view text);

/// Facet-list text, one facet per line with the original labels.
std::string to_facet_list(const SimplicialComplex& complex);

SimplicialComplex link(const SimplicialComplex& complex, const Face& face);

/// Maps a face given by labels onto ids of `complex`.
Face face_from_labels(const SimplicialComplex& complex,
                      std::span<const std::string> labels);

std::vector<SimplicialComplex> connected_components(
    const SimplicialComplex& complex);
bool is_connected(const SimplicialComplex& complex);

bool is_pure(const SimplicialComplex& complex);
bool is_strongly_connected(const SimplicialComplex& complex);

/// Intersection of all facets.
Face cone_points(const SimplicialComplex& complex);

bool is_normal(const SimplicialComplex& complex);

/// Vertices of the i-th operand are relabelled "(v,i)" with i starting at 1.
SimplicialComplex disjoint_union(const SimplicialComplex& first,
                                 const SimplicialComplex& second);
SimplicialComplex disjoint_union(std::span<const SimplicialComplex> parts);

/// True when the complex is a path graph with at least `min_edges` edges.
bool is_path(const SimplicialComplex& complex, std::size_t min_edges = 1);

/// f-vector entries f_{-1}, f_0, ..., f_dim.
std::vector<std::size_t> f_vector(const SimplicialComplex& complex);

}  // namespace srtrace
