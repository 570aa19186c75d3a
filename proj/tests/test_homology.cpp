#include <doctest.h>

#include "oracles/oracles.hpp"
#include "srtrace/builtins.hpp"
#include "srtrace/error.hpp"
#include "srtrace/homology.hpp"
#include "srtrace/sweep.hpp"
#include "test_support.hpp"

using namespace srtrace;
using test_support::make;
using test_support::plain_facets;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

std::vector<std::size_t> betti(const SimplicialComplex& c, const FieldSpec& k) {
  return reduced_betti(c, k).values();
}

}  // namespace

TEST_CASE("boundary matrices") {
  auto edge = make(2, {{1, 2}});
  auto d1 = boundary_matrix(edge, 1).to_dense();
  CHECK(d1 == std::vector<std::vector<mpz_class>>{{-1}, {1}});
  auto d0 = boundary_matrix(edge, 0).to_dense();
  CHECK(d0 == std::vector<std::vector<mpz_class>>{{1, 1}});
  CHECK(boundary_matrix(edge, -1).rows() == 0);
  CHECK(boundary_matrix(edge, 2).cols() == 0);
  CHECK_THROWS_AS(boundary_matrix(edge, 3), Error);
  CHECK_THROWS_AS(boundary_matrix(edge, -2), Error);
  CHECK(rank_over_field(boundary_matrix(builtin("sphere_1"), 1), Q) == 2);
}

TEST_CASE("boundary of boundary vanishes") {
  for (const auto& name : builtin_names()) {
    auto c = builtin(name);
    for (int i = 0; i <= c.dim(); ++i) {
      auto a = boundary_matrix(c, i).to_dense();
      auto b = boundary_matrix(c, i + 1).to_dense();
      if (a.empty() || b.empty() || b[0].empty()) continue;
      for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t col = 0; col < b[0].size(); ++col) {
          mpz_class s = 0;
          for (std::size_t k = 0; k < b.size(); ++k) s += a[r][k] * b[k][col];
          REQUIRE(s == 0);
        }
    }
  }
}

TEST_CASE("reduced Betti examples") {
  CHECK(betti(builtin("cycle4"), Q) == std::vector<std::size_t>{0, 0, 1});
  CHECK(betti(builtin("rp2_6"), Q) == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(betti(builtin("rp2_6"), F2) == std::vector<std::size_t>{0, 0, 1, 1});
  CHECK(betti(SimplicialComplex::irrelevant(), Q) == std::vector<std::size_t>{1});
  CHECK(betti(builtin("torus_csaszar"), Q) == std::vector<std::size_t>{0, 0, 2, 1});
  auto h = reduced_betti(builtin("cycle4"), Q);
  CHECK(h.at(5) == 0);
  CHECK(h.at(-2) == 0);
}

TEST_CASE("builtins match the independent homology oracle") {
  for (const auto& name : builtin_names()) {
    auto c = builtin(name);
    for (auto [field, p] : {std::pair{Q, 0L}, {F2, 2L}, {F3, 3L}})
      CHECK(betti(c, field) == oracle::reduced_betti(plain_facets(c), p));
  }
}

TEST_CASE("integral homology of the projective plane") {
  auto ih = integral_homology(builtin("rp2_6"));
  CHECK(ih.torsion_at(1) == std::vector<mpz_class>{2});
  CHECK(ih.free_at(1) == 0);
  CHECK(ih.free_at(2) == 0);
  auto even = 0;
  for (const auto& d : ih.smith[3].divisors) even += (d % 2 == 0);
  CHECK(even == 1);
  CHECK(ih.over(F2).values() == betti(builtin("rp2_6"), F2));
}

TEST_CASE("Betti numbers agree with the Smith form and the oracle on the sweep") {
  for (const auto& c : enumerate_complexes(5)) {
    auto ih = integral_homology(c);
    for (auto [field, p] : {std::pair{Q, 0L}, {F2, 2L}, {F3, 3L}}) {
      const auto b = betti(c, field);
      REQUIRE(b == ih.over(field).values());
      if (!c.is_irrelevant()) REQUIRE(b == oracle::reduced_betti(plain_facets(c), p));
      long chi_f = 0, chi_b = 0;
      const auto f = f_vector(c);
      for (std::size_t i = 0; i < f.size(); ++i) {
        const long sign = i % 2 == 0 ? -1 : 1;
        chi_f += sign * static_cast<long>(f[i]);
        chi_b += sign * static_cast<long>(i < b.size() ? b[i] : 0);
      }
      CHECK(chi_f == chi_b);
    }
  }
}

TEST_CASE("star condition") {
  auto octa = builtin("octa");
  for (auto k : {Q, F2, F3}) CHECK(star_condition(octa, Face{0}, k));
  CHECK_FALSE(star_condition(builtin("path4"), Face{}, Q));
  CHECK(star_condition(octa, octa.facets()[3], Q));
  CHECK_THROWS_AS(star_condition(octa, Face{0, 1}, Q), Error);
}

TEST_CASE("spheres and manifolds") {
  CHECK(is_homology_sphere(builtin("octa"), Q));
  for (auto k : {Q, F2, F3}) CHECK(is_homology_sphere(builtin("cycle4"), k));
  CHECK_FALSE(is_homology_sphere(builtin("path4"), Q));
  CHECK(is_homology_manifold(builtin("rp2_6"), Q));
  CHECK(is_homology_manifold(builtin("octa"), Q));
  CHECK_FALSE(is_homology_manifold(make(5, {{1, 2, 3}, {1, 4, 5}}), Q));
  for (const auto& c : enumerate_complexes(5))
    if (is_homology_sphere(c, Q) && c.dim() >= 1) CHECK(is_homology_manifold(c, Q));
}

TEST_CASE("pseudomanifolds") {
  CHECK(is_pseudomanifold(builtin("rp2_6")));
  CHECK(is_pseudomanifold(builtin("octa")));
  CHECK_FALSE(is_pseudomanifold(make(4, {{1, 2, 3}, {1, 3, 4}})));
  CHECK_FALSE(is_pseudomanifold(SimplicialComplex::irrelevant()));
  for (const auto& c : enumerate_complexes(5)) {
    if (c.is_irrelevant()) continue;
    CHECK(is_pseudomanifold(c) == oracle::is_pseudomanifold(plain_facets(c)));
  }
}

TEST_CASE("orientability") {
  auto rp2 = builtin("rp2_6");
  CHECK_FALSE(is_orientable_integral(rp2));
  CHECK(is_orientable_over(rp2, F2));
  CHECK_FALSE(is_orientable_over(rp2, Q));
  CHECK(is_orientable_integral(builtin("octa")));
  for (auto k : {Q, F2, F3}) CHECK(is_orientable_over(builtin("octa"), k));
  CHECK(is_orientable_integral(builtin("cycle4")));
  CHECK(is_orientable_integral(builtin("torus_csaszar")));
  CHECK(is_orientable_over(make(2, {{1}, {2}}), Q));
  CHECK_THROWS_AS(is_orientable_over(builtin("path4"), Q), Error);
}

TEST_CASE("pseudomanifold top homology is at most one-dimensional") {
  for (const auto& name : builtin_names()) {
    auto c = builtin(name);
    if (!is_pseudomanifold(c)) continue;
    for (auto k : {Q, F2, F3}) CHECK(reduced_betti(c, k).at(c.dim()) <= 1);
  }
}

TEST_CASE("homology cache") {
  clear_homology_cache();
  CHECK(homology_cache_size() == 0);
  reduced_betti(builtin("octa"), Q);
  reduced_betti(builtin("octa"), Q);
  CHECK(homology_cache_size() == 1);
  reduced_betti(builtin("octa"), F2);
  CHECK(homology_cache_size() == 2);
}
