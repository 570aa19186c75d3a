#include "srtrace/complex.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "srtrace/error.hpp"

namespace srtrace {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotPseudomanifold: return "NotPseudomanifold";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::Dim1Unsupported: return "Dim1Unsupported";
    case ErrorCode::TrivialFactor: return "TrivialFactor";
    case ErrorCode::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Face

Face::Face(std::vector<VertexId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool Face::contains(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool Face::is_subset_of(const Face& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

bool Face::intersects(const Face& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

Face Face::without_index(std::size_t i) const {
  Face out;
  out.ids_.reserve(ids_.size() - 1);
  for (std::size_t j = 0; j < ids_.size(); ++j)
    if (j != i) out.ids_.push_back(ids_[j]);
  return out;
}

Face Face::set_union(const Face& other) const {
  Face out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                 other.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

Face Face::set_difference(const Face& other) const {
  Face out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                      other.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

Face Face::set_intersection(const Face& other) const {
  Face out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

// ---------------------------------------------------------------------------
// SimplicialComplex

namespace {

std::bitset<128> mask_of(const Face& face) {
  std::bitset<128> mask;
  for (VertexId v : face) mask.set(v);
  return mask;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> labels,
                                                std::vector<Face> faces,
                                                std::vector<Face>* absorbed) {
  const std::size_t n = labels.size();
  {
    std::set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second)
        throw Error(ErrorCode::DuplicateLabel, "duplicate vertex label '" + l + "'");
  }
  for (const auto& f : faces)
    for (VertexId v : f)
      if (v >= n)
        throw Error(ErrorCode::MalformedInput,
                    "vertex id " + std::to_string(v) + " out of range");

  // Larger faces first so that a face is kept only if no kept face contains it.
  std::stable_sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::vector<Face> facets;
  for (auto& f : faces) {
    bool covered = std::any_of(facets.begin(), facets.end(), [&](const Face& g) {
      return f.is_subset_of(g);
    });
    if (covered) {
      if (absorbed && !f.empty()) absorbed->push_back(f);
    } else {
      facets.push_back(std::move(f));
    }
  }
  if (facets.empty()) {
    if (n != 0) throw Error(ErrorCode::MalformedInput, "vertices without faces");
    facets.emplace_back();
  }

  std::vector<bool> covered(n, false);
  for (const auto& f : facets)
    for (VertexId v : f) covered[v] = true;
  for (std::size_t v = 0; v < n; ++v)
    if (!covered[v])
      throw Error(ErrorCode::MalformedInput,
                  "vertex '" + labels[v] + "' lies in no face");

  SimplicialComplex out;
  out.labels_ = std::move(labels);
  std::sort(facets.begin(), facets.end());
  out.facets_ = std::move(facets);
  out.build_index();
  return out;
}

SimplicialComplex SimplicialComplex::from_faces(std::size_t vertex_count,
                                                std::vector<Face> faces,
                                                std::vector<Face>* absorbed) {
  return from_faces(default_labels(vertex_count), std::move(faces), absorbed);
}

SimplicialComplex SimplicialComplex::irrelevant() {
  SimplicialComplex out;
  out.facets_.emplace_back();
  out.build_index();
  return out;
}

void SimplicialComplex::build_index() {
  dim_ = -1;
  for (const auto& f : facets_) dim_ = std::max(dim_, f.dim());
  if (labels_.size() <= 128) {
    facet_masks_.clear();
    for (const auto& f : facets_) facet_masks_.push_back(mask_of(f));
  }
  std::vector<std::set<Face>> by_dim(static_cast<std::size_t>(dim_ + 2));
  for (const auto& f : facets_) {
    const std::size_t s = f.size();
    const std::uint64_t subsets = std::uint64_t{1} << s;
    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
      std::vector<VertexId> ids;
      for (std::size_t j = 0; j < s; ++j)
        if (bits >> j & 1U) ids.push_back(f[j]);
      Face sub(std::move(ids));
      by_dim[sub.size()].insert(std::move(sub));
    }
  }
  faces_by_dim_.clear();
  for (auto& layer : by_dim)
    faces_by_dim_.emplace_back(layer.begin(), layer.end());
}

bool SimplicialComplex::contains(const Face& face) const {
  if (!facet_masks_.empty() || facets_.empty()) {
    for (VertexId v : face)
      if (v >= labels_.size()) return false;
    const auto mask = mask_of(face);
    return std::any_of(facet_masks_.begin(), facet_masks_.end(),
                       [&](const auto& m) { return (mask & ~m).none(); });
  }
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Face& f) { return face.is_subset_of(f); });
}

const std::vector<Face>& SimplicialComplex::faces_of_dim(int i) const {
  static const std::vector<Face> none;
  if (i < -1 || i > dim_) return none;
  return faces_by_dim_[static_cast<std::size_t>(i + 1)];
}

std::vector<Face> SimplicialComplex::all_faces() const {
  std::vector<Face> out;
  for (const auto& layer : faces_by_dim_)
    out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::size_t SimplicialComplex::face_index(const Face& face) const {
  const auto& layer = faces_of_dim(face.dim());
  auto it = std::lower_bound(layer.begin(), layer.end(), face);
  if (it == layer.end() || *it != face)
    throw Error(ErrorCode::FaceNotInComplex, "face is not in the complex");
  return static_cast<std::size_t>(it - layer.begin());
}

std::string SimplicialComplex::structure_key() const {
  std::string key = std::to_string(labels_.size()) + ':';
  for (const auto& f : facets_) {
    for (VertexId v : f) key += std::to_string(v) + ',';
    key += ';';
  }
  return key;
}

std::vector<std::string> SimplicialComplex::face_labels(const Face& face) const {
  std::vector<std::string> out;
  out.reserve(face.size());
  for (VertexId v : face) out.push_back(labels_.at(v));
  return out;
}

bool label_less(std::string_view a, std::string_view b) {
  auto as_int = [](std::string_view s, long long& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
  };
  long long x = 0, y = 0;
  const bool xi = as_int(a, x);
  const bool yi = as_int(b, y);
  if (xi && yi) return x != y ? x < y : a < b;
  if (xi != yi) return xi;
  return a < b;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::vector<std::vector<std::string>> read_text_faces(std::string_view text) {
  std::vector<std::vector<std::string>> faces;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::vector<std::string> face;
    for (std::string tok; tokens >> tok;) face.push_back(tok);
    faces.push_back(std::move(face));
  }
  return faces;
}

std::vector<std::vector<std::string>> read_json_faces(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("facets") || !doc["facets"].is_array())
    throw Error(ErrorCode::MalformedInput, "JSON complex needs a \"facets\" array");
  std::vector<std::vector<std::string>> faces;
  for (const auto& facet : doc["facets"]) {
    if (!facet.is_array())
      throw Error(ErrorCode::MalformedInput, "each facet must be an array of labels");
    std::vector<std::string> face;
    for (const auto& v : facet) {
      if (v.is_string()) face.push_back(v.get<std::string>());
      else if (v.is_number_integer()) face.push_back(std::to_string(v.get<long long>()));
      else throw Error(ErrorCode::MalformedInput, "vertex labels must be strings or integers");
    }
    if (!face.empty()) faces.push_back(std::move(face));
  }
  return faces;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

}  // namespace

ParsedComplex parse_complex(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  auto raw = (first != std::string_view::npos && text[first] == '{')
                 ? read_json_faces(text)
                 : read_text_faces(text);
  if (raw.empty()) throw Error(ErrorCode::EmptyComplex, "document contains no faces");

  std::set<std::string, decltype(&label_less)> label_set(&label_less);
  for (const auto& face : raw) {
    std::set<std::string> in_face;
    for (const auto& l : face) {
      if (!in_face.insert(l).second)
        throw Error(ErrorCode::DuplicateLabel,
                    "vertex label '" + l + "' repeated within facet '" + join(face) + "'");
      label_set.insert(l);
    }
  }
  std::vector<std::string> labels(label_set.begin(), label_set.end());
  std::map<std::string, VertexId> ids;
  for (std::size_t i = 0; i < labels.size(); ++i)
    ids.emplace(labels[i], static_cast<VertexId>(i));

  std::vector<Face> faces;
  for (const auto& face : raw) {
    std::vector<VertexId> v;
    for (const auto& l : face) v.push_back(ids.at(l));
    faces.emplace_back(std::move(v));
  }
  std::vector<Face> absorbed;
  auto complex = SimplicialComplex::from_faces(labels, std::move(faces), &absorbed);
  ParsedComplex out{std::move(complex), {}};
  for (const auto& f : absorbed)
    out.warnings.push_back("non-maximal face {" + join(out.complex.face_labels(f)) +
                           "} absorbed into a facet");
  return out;
}

std::string to_facet_list(const SimplicialComplex& complex) {
  std::string out;
  for (const auto& f : complex.facets()) {
    if (f.empty()) continue;
    out += join(complex.face_labels(f));
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructions and predicates

SimplicialComplex link(const SimplicialComplex& complex, const Face& face) {
  if (!complex.contains(face))
    throw Error(ErrorCode::FaceNotInComplex, "link requested for a face outside the complex");
  if (face.empty()) return complex;

  std::vector<Face> pieces;
  std::vector<bool> used(complex.vertex_count(), false);
  for (const auto& f : complex.facets()) {
    if (!face.is_subset_of(f)) continue;
    Face rest = f.set_difference(face);
    for (VertexId v : rest) used[v] = true;
    pieces.push_back(std::move(rest));
  }
  std::vector<VertexId> remap(complex.vertex_count(), 0);
  std::vector<std::string> labels;
  for (VertexId v = 0; v < complex.vertex_count(); ++v) {
    if (!used[v]) continue;
    remap[v] = static_cast<VertexId>(labels.size());
    labels.push_back(complex.label(v));
  }
  if (labels.empty()) return SimplicialComplex::irrelevant();
  std::vector<Face> faces;
  for (const auto& p : pieces) {
    std::vector<VertexId> ids;
    for (VertexId v : p) ids.push_back(remap[v]);
    faces.emplace_back(std::move(ids));
  }
  return SimplicialComplex::from_faces(std::move(labels), std::move(faces));
}

Face face_from_labels(const SimplicialComplex& complex,
                      std::span<const std::string> labels) {
  std::vector<VertexId> ids;
  for (const auto& l : labels) {
    const auto& all = complex.labels();
    auto it = std::find(all.begin(), all.end(), l);
    if (it == all.end())
      throw Error(ErrorCode::FaceNotInComplex, "unknown vertex label '" + l + "'");
    ids.push_back(static_cast<VertexId>(it - all.begin()));
  }
  return Face(std::move(ids));
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& complex) {
  const std::size_t n = complex.vertex_count();
  DisjointSets sets(n);
  for (const auto& f : complex.facets())
    for (std::size_t j = 1; j < f.size(); ++j) sets.unite(f[0], f[j]);

  std::map<std::size_t, std::vector<VertexId>> members;
  for (VertexId v = 0; v < n; ++v) members[sets.find(v)].push_back(v);

  std::vector<SimplicialComplex> out;
  for (const auto& [root, verts] : members) {
    std::vector<VertexId> remap(n, 0);
    std::vector<std::string> labels;
    for (VertexId v : verts) {
      remap[v] = static_cast<VertexId>(labels.size());
      labels.push_back(complex.label(v));
    }
    std::vector<Face> faces;
    for (const auto& f : complex.facets()) {
      if (f.empty() || sets.find(f[0]) != root) continue;
      std::vector<VertexId> ids;
      for (VertexId v : f) ids.push_back(remap[v]);
      faces.emplace_back(std::move(ids));
    }
    out.push_back(SimplicialComplex::from_faces(std::move(labels), std::move(faces)));
  }
  return out;
}

bool is_connected(const SimplicialComplex& complex) {
  return connected_components(complex).size() == 1;
}

bool is_pure(const SimplicialComplex& complex) {
  return std::all_of(complex.facets().begin(), complex.facets().end(),
                     [&](const Face& f) { return f.dim() == complex.dim(); });
}

bool is_strongly_connected(const SimplicialComplex& complex) {
  if (!is_pure(complex)) return false;
  const auto& facets = complex.facets();
  const std::size_t ridge = static_cast<std::size_t>(complex.dim());
  std::vector<bool> seen(facets.size(), false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto& f = facets[queue[head]];
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (seen[j]) continue;
      if (f.set_intersection(facets[j]).size() == ridge) {
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }
  return queue.size() == facets.size();
}

Face cone_points(const SimplicialComplex& complex) {
  const auto& facets = complex.facets();
  Face common = facets.front();
  for (const auto& f : facets) common = common.set_intersection(f);
  return common;
}

bool is_normal(const SimplicialComplex& complex) {
  for (int i = -1; i <= complex.dim() - 2; ++i)
    for (const auto& face : complex.faces_of_dim(i))
      if (!is_connected(link(complex, face))) return false;
  return true;
}

SimplicialComplex disjoint_union(std::span<const SimplicialComplex> parts) {
  std::vector<std::string> labels;
  std::vector<Face> faces;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto offset = static_cast<VertexId>(labels.size());
    const auto tag = std::to_string(i + 1);
    for (const auto& l : parts[i].labels()) labels.push_back("(" + l + "," + tag + ")");
    for (const auto& f : parts[i].facets()) {
      std::vector<VertexId> ids;
      for (VertexId v : f) ids.push_back(v + offset);
      faces.emplace_back(std::move(ids));
    }
  }
  return SimplicialComplex::from_faces(std::move(labels), std::move(faces));
}

SimplicialComplex disjoint_union(const SimplicialComplex& first,
                                 const SimplicialComplex& second) {
  const SimplicialComplex parts[] = {first, second};
  return disjoint_union(parts);
}

bool is_path(const SimplicialComplex& complex, std::size_t min_edges) {
  if (complex.dim() != 1 || !is_pure(complex)) return false;
  const std::size_t n = complex.vertex_count();
  const std::size_t edges = complex.facets().size();
  if (edges + 1 != n || edges < min_edges) return false;
  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : complex.facets()) {
    ++degree[e[0]];
    ++degree[e[1]];
  }
  if (std::any_of(degree.begin(), degree.end(), [](auto d) { return d > 2; }))
    return false;
  // A connected graph with n-1 edges is a tree; max degree 2 makes it a path.
  return is_connected(complex);
}

std::vector<std::size_t> f_vector(const SimplicialComplex& complex) {
  std::vector<std::size_t> out;
  for (int i = -1; i <= complex.dim(); ++i) out.push_back(complex.face_count(i));
  return out;
}

}  // namespace srtrace
