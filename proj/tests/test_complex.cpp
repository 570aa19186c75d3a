#include <doctest.h>

#include "oracles/oracles.hpp"
#include "srtrace/builtins.hpp"
#include "srtrace/complex.hpp"
#include "srtrace/error.hpp"
#include "srtrace/sweep.hpp"
#include "test_support.hpp"

using namespace srtrace;
using test_support::make;
using test_support::plain_facets;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvariantViolation;
}

}  // namespace

TEST_CASE("faces are sorted sets") {
  Face f{3, 1, 2, 1};
  CHECK(f.ids() == std::vector<VertexId>{1, 2, 3});
  CHECK(f.dim() == 2);
  CHECK(Face{}.dim() == -1);
  CHECK(Face{1, 2}.is_subset_of(f));
  CHECK_FALSE(Face{0}.intersects(f));
  CHECK(f.without_index(0) == Face{2, 3});
  CHECK(Face{1, 4}.set_union(Face{2}) == Face{1, 2, 4});
  CHECK(f.set_difference(Face{2}) == Face{1, 3});
  CHECK(f.set_intersection(Face{0, 3}) == Face{3});
}

TEST_CASE("construction absorbs non-maximal faces") {
  std::vector<Face> absorbed;
  auto c = SimplicialComplex::from_faces(3, {Face{0, 1}, Face{0, 1, 2}, Face{2}}, &absorbed);
  CHECK(c.facets().size() == 1);
  CHECK(absorbed.size() == 2);
  CHECK(c.dim() == 2);
  CHECK(c.contains(Face{0, 2}));
  CHECK(c.contains(Face{}));
  CHECK(c.face_count(1) == 3);
  CHECK(c.all_faces().size() == 8);
}

TEST_CASE("irrelevant complex") {
  auto c = SimplicialComplex::irrelevant();
  CHECK(c.is_irrelevant());
  CHECK(c.dim() == -1);
  CHECK(c.vertex_count() == 0);
  CHECK(c.all_faces() == std::vector<Face>{Face{}});
  CHECK(f_vector(c) == std::vector<std::size_t>{1});
}

TEST_CASE("parse text format") {
  auto parsed = parse_complex("# comment\n1 2 3\n3 4\n\n2 3\n");
  CHECK(parsed.complex.vertex_count() == 4);
  CHECK(parsed.complex.facets().size() == 2);
  REQUIRE(parsed.warnings.size() == 1);
  CHECK(parsed.warnings[0].find("absorbed") != std::string::npos);
  CHECK(to_facet_list(parsed.complex) == "1 2 3\n3 4\n");
}

TEST_CASE("parse JSON format and label ordering") {
  auto parsed = parse_complex(R"({"facets": [["10", "2"], [2, "a"]]})");
  CHECK(parsed.complex.labels() == std::vector<std::string>{"2", "10", "a"});
  CHECK(parsed.warnings.empty());
  CHECK(label_less("9", "10"));
  CHECK(label_less("10", "a"));
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_complex("# nothing\n"); }) == ErrorCode::EmptyComplex);
  CHECK(code_of([] { parse_complex("1 1 2\n"); }) == ErrorCode::DuplicateLabel);
  CHECK(code_of([] { parse_complex("{\"facets\": 3}"); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_complex("{bad json"); }) == ErrorCode::MalformedInput);
}

TEST_CASE("text and JSON round trip through the facet list") {
  for (const auto& name : builtin_names()) {
    auto c = builtin(name);
    auto again = parse_complex(to_facet_list(c)).complex;
    CHECK(again == c);
  }
}

TEST_CASE("links") {
  auto octa = builtin("octa");
  auto lk = link(octa, Face{0});
  CHECK(lk.vertex_count() == 4);
  CHECK(lk.facets().size() == 4);
  CHECK(link(octa, Face{}) == octa);
  CHECK(link(octa, octa.facets()[0]).is_irrelevant());
  CHECK(code_of([&] { link(octa, Face{0, 1}); }) == ErrorCode::FaceNotInComplex);
}

TEST_CASE("link agrees with brute force on every small complex") {
  for (const auto& c : enumerate_complexes(5)) {
    if (c.is_irrelevant()) continue;
    const auto faces = oracle::all_faces(plain_facets(c));
    for (const auto& sigma : c.all_faces()) {
      const auto lk = link(c, sigma);
      std::vector<int> s(sigma.begin(), sigma.end());
      std::set<std::vector<std::string>> got, want;
      for (const auto& t : lk.all_faces()) got.insert(lk.face_labels(t));
      for (const auto& t : oracle::link(faces, s)) {
        std::vector<std::string> labels;
        for (int v : t) labels.push_back(c.label(static_cast<VertexId>(v)));
        want.insert(labels);
      }
      REQUIRE(got == want);
    }
  }
}

TEST_CASE("connected components agree with BFS") {
  for (const auto& c : enumerate_complexes(5)) {
    if (c.is_irrelevant()) continue;
    CHECK(connected_components(c).size() ==
          oracle::component_count(oracle::all_faces(plain_facets(c))));
  }
}

TEST_CASE("purity and strong connectivity") {
  CHECK(is_pure(builtin("cycle4")));
  CHECK_FALSE(is_pure(make(5, {{1, 2, 3}, {4, 5}})));
  CHECK(is_pure(make(1, {{1}})));
  CHECK(is_strongly_connected(builtin("octa")));
  CHECK_FALSE(is_strongly_connected(make(6, {{1, 2, 3}, {4, 5, 6}})));
  CHECK(is_strongly_connected(make(4, {{1, 2, 3}, {1, 3, 4}})));
  CHECK(is_strongly_connected(make(3, {{1}, {2}, {3}})));
}

TEST_CASE("cone points") {
  auto p = builtin("path3");
  CHECK(p.face_labels(cone_points(p)) == std::vector<std::string>{"2"});
  CHECK(cone_points(builtin("cycle4")).empty());
  CHECK(cone_points(make(3, {{1, 2, 3}})) == Face{0, 1, 2});
}

TEST_CASE("normality") {
  CHECK(is_normal(builtin("octa")));
  CHECK_FALSE(is_normal(make(4, {{1, 2}, {3, 4}})));
  CHECK_FALSE(is_normal(make(5, {{1, 2, 3}, {1, 4, 5}})));
}

TEST_CASE("disjoint union") {
  auto edge = make(2, {{1, 2}});
  auto u = disjoint_union(edge, edge);
  CHECK(u.vertex_count() == 4);
  CHECK(to_facet_list(u) == "(1,1) (2,1)\n(1,2) (2,2)\n");
  CHECK(disjoint_union(builtin("cycle4"), builtin("octa")).dim() == 2);
  auto parts = connected_components(disjoint_union(builtin("octa"), builtin("cycle4")));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].facets() == builtin("octa").facets());
  CHECK(parts[1].facets() == builtin("cycle4").facets());
}

TEST_CASE("structural invariants on the sweep") {
  for (const auto& c : enumerate_complexes(5)) {
    if (is_strongly_connected(c)) CHECK(is_pure(c));
    if (is_normal(c) && is_connected(c)) {
      CHECK(is_pure(c));
      CHECK(is_strongly_connected(c));
    }
  }
}

TEST_CASE("paths") {
  CHECK(is_path(builtin("path4"), 3));
  CHECK_FALSE(is_path(builtin("path3"), 3));
  CHECK_FALSE(is_path(builtin("cycle4"), 1));
  CHECK(f_vector(builtin("octa")) == std::vector<std::size_t>{1, 6, 12, 8});
}

TEST_CASE("enumeration matches the known isomorphism class counts") {
  // Non-isomorphic complexes on exactly n vertices: 1, 2, 5, 20, 180.
  const std::size_t expected[] = {1, 2, 5, 20, 180};
  std::size_t total = 1;
  for (std::size_t n = 1; n <= 5; ++n) {
    total += expected[n - 1];
    CHECK(enumerate_complexes(n).size() == total);
  }
  CHECK(code_of([] { enumerate_complexes(6); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("builtins") {
  CHECK(builtin("cycle4").facets().size() == 4);
  CHECK(builtin("rp2_6").facets().size() == 10);
  CHECK(builtin("torus_csaszar").facets().size() == 14);
  CHECK(builtin("torus_csaszar").vertex_count() == 7);
  CHECK(builtin("sphere_3").dim() == 3);
  CHECK(code_of([] { builtin("klein"); }) == ErrorCode::UnknownBuiltin);
  CHECK(code_of([] { builtin("path1"); }) == ErrorCode::UnknownBuiltin);
}
