#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace srtrace {

/// Coefficient field: the rationals or a prime field F_p with p < 2^31.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(0); }
  /// Throws InvalidField unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "q" / "Q" / "rationals" and "fp:<p>".
  static FieldSpec parse(std::string_view text);

  bool is_rational() const { return characteristic_ == 0; }
  std::uint32_t characteristic() const { return characteristic_; }

  /// "Q" or "F_p"; parse() accepts this form too.
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint32_t characteristic) : characteristic_(characteristic) {}
  std::uint32_t characteristic_;
};

bool is_prime(std::uint64_t n);

/// Sparse integer matrix with unique, nonzero (row, col) entries.
class SparseIntMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    mpz_class value;
  };

  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  /// Zero values are dropped; duplicates and out-of-range positions throw.
  SparseIntMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries);

  static SparseIntMatrix from_dense(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return entries_; }

  std::vector<std::vector<mpz_class>> to_dense() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Entry> entries_;
};

/// Rank with entries read in the given field (reduced mod p for F_p).
/// Rationals use fraction-free Bareiss elimination.
std::size_t rank_over_field(const SparseIntMatrix& matrix, const FieldSpec& field);

struct SmithForm {
  std::size_t rank = 0;
  /// Positive elementary divisors d1 | d2 | ... | d_rank.
  std::vector<mpz_class> divisors;

  /// Number of divisors divisible by p.
  std::size_t divisible_by(std::uint32_t p) const;
};

SmithForm smith_normal_form(const SparseIntMatrix& matrix);

}  // namespace srtrace
