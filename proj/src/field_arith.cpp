#include "srtrace/field_arith.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <utility>

#include "srtrace/error.hpp"

namespace srtrace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw Error(ErrorCode::InvalidField,
                "field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return FieldSpec(static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q" || text == "rationals") return rationals();
  std::string_view digits;
  if (text.starts_with("fp:")) digits = text.substr(3);
  else if (text.starts_with("F_")) digits = text.substr(2);
  else throw Error(ErrorCode::InvalidField, "unknown field '" + std::string(text) + "' (use q or fp:<p>)");
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
    throw Error(ErrorCode::InvalidField, "bad prime in field '" + std::string(text) + "'");
  return prime(p);
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "Q" : "F_" + std::to_string(characteristic_);
}

// ---------------------------------------------------------------------------

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols,
                                 std::vector<Entry> entries)
    : rows_(rows), cols_(cols) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto& e : entries) {
    if (e.row >= rows || e.col >= cols)
      throw Error(ErrorCode::IndexOutOfRange, "matrix entry out of range");
    if (!seen.emplace(e.row, e.col).second)
      throw Error(ErrorCode::MalformedInput, "duplicate matrix entry");
    if (e.value != 0) entries_.push_back(std::move(e));
  }
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Entry> entries;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c] != 0) entries.push_back({r, c, mpz_class(rows[r][c])});
  return SparseIntMatrix(rows.size(), cols, std::move(entries));
}

std::vector<std::vector<mpz_class>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<mpz_class>> out(rows_, std::vector<mpz_class>(cols_, 0));
  for (const auto& e : entries_) out[e.row][e.col] = e.value;
  return out;
}

// ---------------------------------------------------------------------------
// Ranks

namespace {

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const mpz_class& p = a[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        mpz_class v = p * a[r][c] - a[r][col] * a[rank][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[r][c] = std::move(v);
      }
      a[r][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::size_t modular_rank(const SparseIntMatrix& m, std::uint32_t p) {
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols(), 0));
  mpz_class reduced;
  for (const auto& e : m.entries()) {
    mpz_fdiv_r_ui(reduced.get_mpz_t(), e.value.get_mpz_t(), p);
    a[e.row][e.col] = reduced.get_ui();
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    const std::uint64_t inv = inverse_mod(a[rank][col], p);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (a[r][col] == 0) continue;
      const std::uint64_t factor = a[r][col] * inv % p;
      for (std::size_t c = col; c < m.cols(); ++c)
        a[r][c] = (a[r][c] + (p - factor) * a[rank][c]) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_over_field(const SparseIntMatrix& matrix, const FieldSpec& field) {
  if (matrix.entries().empty()) return 0;
  if (field.is_rational()) return bareiss_rank(matrix.to_dense());
  return modular_rank(matrix, field.characteristic());
}

// ---------------------------------------------------------------------------
// Smith normal form

std::size_t SmithForm::divisible_by(std::uint32_t p) const {
  return static_cast<std::size_t>(std::count_if(
      divisors.begin(), divisors.end(),
      [p](const mpz_class& d) { return mpz_divisible_ui_p(d.get_mpz_t(), p) != 0; }));
}

SmithForm smith_normal_form(const SparseIntMatrix& matrix) {
  auto a = matrix.to_dense();
  const std::size_t rows = matrix.rows();
  const std::size_t cols = matrix.cols();
  SmithForm out;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto place_min_pivot = [&]() {
      std::size_t br = rows, bc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a[r][c] != 0 && (br == rows || abs(a[r][c]) < abs(a[br][bc]))) {
            br = r;
            bc = c;
          }
      if (br == rows) return false;
      std::swap(a[t], a[br]);
      for (auto& row : a) std::swap(row[t], row[bc]);
      return true;
    };
    if (!place_min_pivot()) break;

    for (;;) {
      bool clean = true;
      mpz_class q;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a[r][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a[t][c].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) clean = false;
      }
      if (!clean) {
        place_min_pivot();
        continue;
      }
      // Pivot must divide the remaining block; otherwise fold the offending
      // row into row t and reduce again.
      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (mpz_divisible_p(a[r][c].get_mpz_t(), a[t][t].get_mpz_t()) == 0) {
            bad = r;
            break;
          }
      if (bad == rows) break;
      for (std::size_t c = t; c < cols; ++c) a[t][c] += a[bad][c];
    }
    out.divisors.push_back(abs(a[t][t]));
    ++out.rank;
  }
  return out;
}

}  // namespace srtrace
