#pragma once

// Independent reference implementations used only by the test suites. They
// work on plain facet lists and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using FaceSet = std::set<std::vector<int>>;
using Matrix = std::vector<std::vector<std::int64_t>>;

/// Every face of the complex generated by `facets`, including the empty face.
inline FaceSet all_faces(const std::vector<std::vector<int>>& facets) {
  FaceSet faces{{}};
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    const std::size_t n = f.size();
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      std::vector<int> sub;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (1U << b)) sub.push_back(f[b]);
      faces.insert(sub);
    }
  }
  return faces;
}

inline std::vector<std::vector<int>> faces_of_size(const FaceSet& faces, std::size_t size) {
  std::vector<std::vector<int>> out;
  for (const auto& f : faces)
    if (f.size() == size) out.push_back(f);
  return out;
}

/// Augmented boundary map from faces of `size` vertices to faces of size - 1.
inline Matrix boundary(const FaceSet& faces, std::size_t size) {
  const auto cols = faces_of_size(faces, size);
  const auto rows = size == 0 ? std::vector<std::vector<int>>{} : faces_of_size(faces, size - 1);
  std::map<std::vector<int>, std::size_t> row_index;
  for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;
  Matrix m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t j = 0; j < cols[c].size(); ++j) {
      auto sub = cols[c];
      sub.erase(sub.begin() + static_cast<long>(j));
      m[row_index.at(sub)][c] = (j % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1, e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

/// Rank over F_p, or over Q when p == 0 (exact Bareiss on 128-bit integers).
inline std::size_t rank(Matrix m, std::int64_t p) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  if (p == 0) {
    std::vector<std::vector<__int128>> a(rows, std::vector<__int128>(cols));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) a[r][c] = m[r][c];
    __int128 prev = 1;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
      std::size_t piv = rk;
      while (piv < rows && a[piv][c] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(a[piv], a[rk]);
      for (std::size_t r = rk + 1; r < rows; ++r) {
        for (std::size_t k = c + 1; k < cols; ++k)
          a[r][k] = (a[rk][c] * a[r][k] - a[r][c] * a[rk][k]) / prev;
        a[r][c] = 0;
      }
      prev = a[rk][c];
      ++rk;
    }
    return rk;
  }
  for (auto& row : m)
    for (auto& v : row) v = ((v % p) + p) % p;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rk]);
    const auto inv = mod_inverse(m[rk][c], p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rk || m[r][c] == 0) continue;
      const auto factor = m[r][c] * inv % p;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = ((m[r][k] - factor * m[rk][k]) % p + p) % p;
    }
    ++rk;
  }
  return rk;
}

/// Reduced Betti numbers for i = -1 .. dim.
inline std::vector<std::size_t> reduced_betti(const std::vector<std::vector<int>>& facets,
                                              std::int64_t p) {
  const auto faces = all_faces(facets);
  std::size_t top = 0;
  for (const auto& f : faces) top = std::max(top, f.size());
  std::vector<std::size_t> out;
  for (std::size_t size = 0; size <= top; ++size) {
    const auto chains = faces_of_size(faces, size).size();
    const auto r_down = size == 0 ? 0 : rank(boundary(faces, size), p);
    const auto r_up = rank(boundary(faces, size + 1), p);
    out.push_back(chains - r_down - r_up);
  }
  return out;
}

inline std::int64_t determinant(Matrix a) {
  const std::size_t n = a.size();
  std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a[r][c];
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r)
      for (std::size_t c = k + 1; c < n; ++c) m[r][c] = (m[k][k] * m[r][c] - m[r][k] * m[k][c]) / prev;
    prev = m[k][k];
  }
  return sign * static_cast<std::int64_t>(m[n - 1][n - 1]);
}

/// Elementary divisors from determinantal divisors: d_k = gcd of all k x k
/// minors, divisor_k = d_k / d_{k-1}. Exponential; for small matrices only.
inline std::vector<std::int64_t> smith_divisors(const Matrix& m) {
  if (m.empty() || m[0].empty()) return {};
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<std::int64_t> det_div{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::int64_t g = 0;
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        Matrix sub;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!rsel[r]) continue;
          std::vector<std::int64_t> row;
          for (std::size_t c = 0; c < cols; ++c)
            if (csel[c]) row.push_back(m[r][c]);
          sub.push_back(std::move(row));
        }
        g = std::gcd(g, std::llabs(determinant(sub)));
        // d_{k-1} divides d_k, so reaching it ends the scan.
        if (g == det_div.back()) break;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (g != det_div.back() && std::prev_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    det_div.push_back(g);
  }
  std::vector<std::int64_t> out;
  for (std::size_t k = 1; k < det_div.size(); ++k) out.push_back(det_div[k] / det_div[k - 1]);
  return out;
}

/// lk σ = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ} by brute force.
inline FaceSet link(const FaceSet& faces, const std::vector<int>& sigma) {
  FaceSet out;
  for (const auto& tau : faces) {
    std::vector<int> meet, join;
    std::set_intersection(tau.begin(), tau.end(), sigma.begin(), sigma.end(),
                          std::back_inserter(meet));
    if (!meet.empty()) continue;
    std::set_union(tau.begin(), tau.end(), sigma.begin(), sigma.end(), std::back_inserter(join));
    if (faces.count(join)) out.insert(tau);
  }
  return out;
}

/// Connected components of the 1-skeleton, counted by BFS.
inline std::size_t component_count(const FaceSet& faces) {
  std::map<int, std::vector<int>> adj;
  for (const auto& f : faces) {
    if (f.size() == 1) adj[f[0]];
    if (f.size() == 2) {
      adj[f[0]].push_back(f[1]);
      adj[f[1]].push_back(f[0]);
    }
  }
  std::set<int> seen;
  std::size_t count = 0;
  for (const auto& [v, _] : adj) {
    if (seen.count(v)) continue;
    ++count;
    std::vector<int> stack{v};
    seen.insert(v);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return count;
}

/// Pure, ridge-connected dual graph, every ridge in exactly two facets.
inline bool is_pseudomanifold(const std::vector<std::vector<int>>& facets) {
  if (facets.empty() || facets[0].empty()) return false;
  const std::size_t n = facets[0].size();
  for (const auto& f : facets)
    if (f.size() != n) return false;
  std::map<std::vector<int>, std::vector<std::size_t>> ridges;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    auto f = facets[i];
    std::sort(f.begin(), f.end());
    for (std::size_t j = 0; j < n; ++j) {
      auto r = f;
      r.erase(r.begin() + static_cast<long>(j));
      ridges[r].push_back(i);
    }
  }
  std::vector<std::vector<std::size_t>> adj(facets.size());
  for (const auto& [r, owners] : ridges) {
    if (owners.size() != 2) return false;
    adj[owners[0]].push_back(owners[1]);
    adj[owners[1]].push_back(owners[0]);
  }
  std::vector<bool> seen(facets.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (auto w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == facets.size();
}

}  // namespace oracle
