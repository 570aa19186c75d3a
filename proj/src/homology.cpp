#include "srtrace/homology.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>

#include "srtrace/error.hpp"

namespace srtrace {

std::size_t HomologyProfile::at(int i) const {
  if (i < -1 || i > max_index()) return 0;
  return betti_[static_cast<std::size_t>(i + 1)];
}

SparseIntMatrix boundary_matrix(const SimplicialComplex& complex, int i) {
  if (i < -1 || i > complex.dim() + 1)
    throw Error(ErrorCode::IndexOutOfRange,
                "boundary index " + std::to_string(i) + " outside [-1, dim+1]");
  const auto& cells = complex.faces_of_dim(i);
  const std::size_t rows = i == -1 ? 0 : complex.face_count(i - 1);
  std::vector<SparseIntMatrix::Entry> entries;
  for (std::size_t col = 0; col < cells.size(); ++col) {
    const Face& cell = cells[col];
    for (std::size_t j = 0; j < cell.size(); ++j) {
      const std::size_t row = complex.face_index(cell.without_index(j));
      entries.push_back({row, col, mpz_class(j % 2 == 0 ? 1 : -1)});
    }
  }
  return SparseIntMatrix(rows, cells.size(), std::move(entries));
}

namespace {

// Read-mostly memo keyed by (structure key, characteristic); labels do not
// affect homology so isomorphic-by-id links share entries.
class HomologyCache {
 public:
  std::optional<HomologyProfile> find(const std::string& key, std::uint32_t ch) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find({key, ch});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }
  void store(std::string key, std::uint32_t ch, const HomologyProfile& profile) {
    std::unique_lock lock(mutex_);
    if (entries_.size() > 200000) entries_.clear();
    entries_.emplace(std::make_pair(std::move(key), ch), profile);
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }
  void clear() {
    std::unique_lock lock(mutex_);
    entries_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<std::string, std::uint32_t>, HomologyProfile> entries_;
};

HomologyCache& cache() {
  static HomologyCache instance;
  return instance;
}

HomologyProfile compute_betti(const SimplicialComplex& complex, const FieldSpec& field) {
  const int d = complex.dim();
  // ranks[i + 1] = rank ∂_i for i = -1 .. d + 1
  std::vector<std::size_t> ranks;
  for (int i = -1; i <= d + 1; ++i)
    ranks.push_back(rank_over_field(boundary_matrix(complex, i), field));
  std::vector<std::size_t> betti;
  for (int i = -1; i <= d; ++i) {
    const std::size_t idx = static_cast<std::size_t>(i + 1);
    betti.push_back(complex.face_count(i) - ranks[idx] - ranks[idx + 1]);
  }
  return HomologyProfile(field, std::move(betti));
}

}  // namespace

HomologyProfile reduced_betti(const SimplicialComplex& complex, const FieldSpec& field) {
  auto key = complex.structure_key();
  if (auto hit = cache().find(key, field.characteristic())) return *hit;
  auto profile = compute_betti(complex, field);
  cache().store(std::move(key), field.characteristic(), profile);
  return profile;
}

std::size_t homology_cache_size() { return cache().size(); }
void clear_homology_cache() { cache().clear(); }

// ---------------------------------------------------------------------------

std::size_t IntegralHomology::free_at(int i) const {
  if (i < -1 || i + 1 >= static_cast<int>(free_rank.size())) return 0;
  return free_rank[static_cast<std::size_t>(i + 1)];
}

std::vector<mpz_class> IntegralHomology::torsion_at(int i) const {
  std::vector<mpz_class> out;
  if (i < -1 || i + 2 >= static_cast<int>(smith.size())) return out;
  for (const auto& d : smith[static_cast<std::size_t>(i + 2)].divisors)
    if (d > 1) out.push_back(d);
  return out;
}

HomologyProfile IntegralHomology::over(const FieldSpec& field) const {
  std::vector<std::size_t> betti;
  for (std::size_t idx = 0; idx < free_rank.size(); ++idx) {
    std::size_t b = free_rank[idx];
    if (!field.is_rational()) {
      b += smith[idx].divisible_by(field.characteristic());
      b += smith[idx + 1].divisible_by(field.characteristic());
    }
    betti.push_back(b);
  }
  return HomologyProfile(field, std::move(betti));
}

IntegralHomology integral_homology(const SimplicialComplex& complex) {
  IntegralHomology out;
  const int d = complex.dim();
  for (int i = -1; i <= d + 1; ++i)
    out.smith.push_back(smith_normal_form(boundary_matrix(complex, i)));
  for (int i = -1; i <= d; ++i) {
    const std::size_t idx = static_cast<std::size_t>(i + 1);
    out.free_rank.push_back(complex.face_count(i) - out.smith[idx].rank -
                            out.smith[idx + 1].rank);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool is_sphere_homology(const SimplicialComplex& complex, const FieldSpec& field) {
  const auto betti = reduced_betti(complex, field);
  for (int i = -1; i <= complex.dim(); ++i)
    if (betti.at(i) != (i == complex.dim() ? 1U : 0U)) return false;
  return true;
}

}  // namespace

bool star_condition(const SimplicialComplex& complex, const Face& face,
                    const FieldSpec& field) {
  return is_sphere_homology(link(complex, face), field);
}

bool is_homology_sphere(const SimplicialComplex& complex, const FieldSpec& field) {
  for (const auto& face : complex.all_faces())
    if (!star_condition(complex, face, field)) return false;
  return true;
}

bool is_homology_manifold(const SimplicialComplex& complex, const FieldSpec& field) {
  if (!is_connected(complex)) return false;
  for (const auto& face : complex.all_faces())
    if (!face.empty() && !star_condition(complex, face, field)) return false;
  return true;
}

bool is_pseudomanifold(const SimplicialComplex& complex) {
  if (complex.dim() < 0 || !is_strongly_connected(complex)) return false;
  for (const auto& ridge : complex.faces_of_dim(complex.dim() - 1)) {
    std::size_t count = 0;
    for (const auto& f : complex.facets())
      if (ridge.is_subset_of(f)) ++count;
    if (count != 2) return false;
  }
  return true;
}

namespace {

void require_pseudomanifold(const SimplicialComplex& complex) {
  if (!is_pseudomanifold(complex))
    throw Error(ErrorCode::NotPseudomanifold,
                "orientability is only defined for pseudomanifolds");
}

}  // namespace

bool is_orientable_over(const SimplicialComplex& complex, const FieldSpec& field) {
  require_pseudomanifold(complex);
  if (complex.dim() == 0) return true;
  return reduced_betti(complex, field).at(complex.dim()) != 0;
}

bool is_orientable_integral(const SimplicialComplex& complex) {
  require_pseudomanifold(complex);
  if (complex.dim() == 0) return true;
  return integral_homology(complex).free_at(complex.dim()) != 0;
}

}  // namespace srtrace
