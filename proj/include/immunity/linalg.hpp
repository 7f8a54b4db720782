#pragma once

// Exact dense linear algebra over finite fields.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "immunity/gf.hpp"

namespace imm {

class MatrixGF {
 public:
  MatrixGF(Field field, std::size_t rows, std::size_t cols);
  /// Row-major entries; prime-field entries are reduced mod p, extension-field
  /// entries must already be valid packed elements.
  MatrixGF(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static MatrixGF identity(Field field, std::size_t n);
  static MatrixGF from_rows(Field field, const std::vector<std::vector<Elem>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const Field& field() const noexcept { return field_; }

  Elem at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem v);
  std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Elem>& data() const noexcept { return data_; }

  MatrixGF transpose() const;
  MatrixGF submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  std::string to_string() const;

  bool operator==(const MatrixGF& other) const noexcept {
    return rows_ == other.rows_ && cols_ == other.cols_ && field_ == other.field_ && data_ == other.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// Elimination backend. `Packed` is the word-parallel XOR path and requires
/// F_2; `Auto` picks it whenever the field is F_2.
enum class Backend { Auto, Generic, Packed };

std::size_t rank(const MatrixGF& a, Backend backend = Backend::Auto);

/// Basis of {v : A v = 0} in reduced echelon form: each vector's first
/// nonzero entry is 1, the leading indices are distinct and increasing.
std::vector<std::vector<Elem>> nullspace_basis(const MatrixGF& a, Backend backend = Backend::Auto);

/// Throws NotSquare.
Elem det(const MatrixGF& a);

/// Every increasing row selection i_1 < ... < i_t against the first t
/// columns is nonsingular. Square, size <= 16 (TooLarge otherwise).
bool is_strong_nondegenerate(const MatrixGF& a);

/// Every progression of rows a, a+q, ..., a+(t-1)q (mod size) with q coprime
/// to the size, against the first t columns, is nonsingular. Square, size
/// <= 64 (TooLarge otherwise).
bool is_weak_nondegenerate(const MatrixGF& a);

/// Kronecker product with entry ((i1,i2),(j1,j2)) = A[i1,j1] B[i2,j2] at row
/// i1 * rows(B) + i2. Throws FieldMismatch.
MatrixGF tensor(const MatrixGF& a, const MatrixGF& b);

/// (C(i, j) mod p) for 0 <= i, j < p. p <= 64 (TooLarge otherwise).
MatrixGF pascal_matrix(std::uint64_t p);

/// Column space grown one column at a time over a prime field. Each new
/// column is reduced against the accepted ones; a column that reduces to zero
/// is reported together with its expression in the accepted columns.
/// F_2 uses bit-packed columns.
class IncrementalColumnBasis {
 public:
  /// `track_combinations` = false skips dependency bookkeeping (rank only).
  IncrementalColumnBasis(const Field& field, std::size_t rows, bool track_combinations = true);
  ~IncrementalColumnBasis();
  IncrementalColumnBasis(IncrementalColumnBasis&&) noexcept;
  IncrementalColumnBasis& operator=(IncrementalColumnBasis&&) noexcept;

  /// nullopt if the column was independent (it is then accepted). Otherwise
  /// the coefficients a_j, one per accepted column in insertion order, with
  /// column = sum_j a_j * accepted_j (empty when tracking is off).
  std::optional<std::vector<Elem>> add_column(std::span<const Elem> column);
  /// Same for 0/1 columns given as the set of row indices holding a 1.
  std::optional<std::vector<Elem>> add_indicator_column(std::span<const std::size_t> one_rows);

  std::size_t rank() const noexcept;
  std::size_t rows() const noexcept;

  struct Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

}  // namespace imm
