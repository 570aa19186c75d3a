#include "srtrace/builtins.hpp"

#include <charconv>

#include "srtrace/error.hpp"

namespace srtrace {

namespace {

std::size_t parse_suffix(std::string_view name, std::string_view prefix, bool& ok) {
  ok = false;
  if (!name.starts_with(prefix)) return 0;
  auto digits = name.substr(prefix.size());
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  ok = ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty();
  return value;
}

// Boundary of the octahedron: antipodal pairs {1,2}, {3,4}, {5,6}.
SimplicialComplex octahedron() {
  std::vector<Face> faces;
  for (VertexId a : {0U, 1U})
    for (VertexId b : {2U, 3U})
      for (VertexId c : {4U, 5U}) faces.push_back(Face{a, b, c});
  return SimplicialComplex::from_faces(6, std::move(faces));
}

// Six-vertex real projective plane (hemi-icosahedron).
SimplicialComplex rp2_6() {
  const int facets[10][3] = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                             {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}};
  std::vector<Face> faces;
  for (const auto& f : facets)
    faces.push_back(Face{static_cast<VertexId>(f[0] - 1), static_cast<VertexId>(f[1] - 1),
                         static_cast<VertexId>(f[2] - 1)});
  return SimplicialComplex::from_faces(6, std::move(faces));
}

// Seven-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
SimplicialComplex torus_csaszar() {
  std::vector<Face> faces;
  for (VertexId i = 0; i < 7; ++i) {
    faces.push_back(Face{i, (i + 1) % 7, (i + 3) % 7});
    faces.push_back(Face{i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex::from_faces(7, std::move(faces));
}

}  // namespace

SimplicialComplex path_complex(std::size_t vertices) {
  if (vertices < 2) throw Error(ErrorCode::UnknownBuiltin, "a path needs at least 2 vertices");
  std::vector<Face> faces;
  for (VertexId i = 0; i + 1 < vertices; ++i) faces.push_back(Face{i, i + 1});
  return SimplicialComplex::from_faces(vertices, std::move(faces));
}

SimplicialComplex cycle_complex(std::size_t vertices) {
  if (vertices < 3) throw Error(ErrorCode::UnknownBuiltin, "a cycle needs at least 3 vertices");
  std::vector<Face> faces;
  for (VertexId i = 0; i < vertices; ++i)
    faces.push_back(Face{i, static_cast<VertexId>((i + 1) % vertices)});
  return SimplicialComplex::from_faces(vertices, std::move(faces));
}

SimplicialComplex simplex_boundary(int dim) {
  if (dim < 0 || dim > 10)
    throw Error(ErrorCode::UnknownBuiltin, "sphere dimension must lie in 0..10");
  const auto n = static_cast<VertexId>(dim + 2);
  std::vector<Face> faces;
  for (VertexId skip = 0; skip < n; ++skip) {
    std::vector<VertexId> ids;
    for (VertexId v = 0; v < n; ++v)
      if (v != skip) ids.push_back(v);
    faces.emplace_back(std::move(ids));
  }
  return SimplicialComplex::from_faces(n, std::move(faces));
}

std::vector<std::string> builtin_names() {
  return {"octa", "cycle4", "path2", "path3", "path4", "path5",
          "rp2_6", "torus_csaszar", "sphere_1", "sphere_2", "sphere_3"};
}

SimplicialComplex builtin(std::string_view name) {
  if (name == "octa") return octahedron();
  if (name == "cycle4") return cycle_complex(4);
  if (name == "rp2_6") return rp2_6();
  if (name == "torus_csaszar") return torus_csaszar();
  bool ok = false;
  if (auto n = parse_suffix(name, "path", ok); ok) return path_complex(n);
  if (auto d = parse_suffix(name, "sphere_", ok); ok) return simplex_boundary(static_cast<int>(d));
  throw Error(ErrorCode::UnknownBuiltin, "unknown builtin complex '" + std::string(name) + "'");
}

}  // namespace srtrace
