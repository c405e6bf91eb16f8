#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "taured/scalar.hpp"

namespace taured {

/// Dense row-major matrix over an exact field. Row vectors are the convention
/// throughout: a linear map V -> W with dim V = r, dim W = c is an r x c
/// matrix acting as v -> v * A. Empty shapes (0 x n, n x 0) are legal.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = Field::rational());

  static Matrix identity(std::size_t n, Field field = Field::rational());
  /// Builds a matrix from integer rows; all rows must have equal length.
  static Matrix from_ints(const std::vector<std::vector<long>>& rows,
                          Field field = Field::rational());
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols,
                          Field field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> row(std::size_t r) const;
  void set_row(std::size_t r, const std::vector<Scalar>& values);

  bool is_zero() const;
  Matrix transpose() const;

  /// Vertical concatenation; column counts must agree.
  Matrix stacked(const Matrix& below) const;
  /// Horizontal concatenation; row counts must agree.
  Matrix beside(const Matrix& right) const;
  Matrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  Matrix select_rows(const std::vector<std::size_t>& which) const;
  Matrix select_cols(const std::vector<std::size_t>& which) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator*(const Scalar& s, Matrix m);
  friend bool operator==(const Matrix& lhs, const Matrix& rhs);

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

/// Row vector times matrix.
std::vector<Scalar> row_times(const std::vector<Scalar>& v, const Matrix& m);

/// Reduced row echelon form of the row space: nonzero rows only, pivot
/// entries equal to one. Deterministic and canonical for a given row space.
struct Echelon {
  Matrix basis;
  std::vector<std::size_t> pivots;  // pivot column of each basis row
  std::size_t rank() const { return pivots.size(); }
};

/// Rational input is eliminated fraction-free on primitive integer rows and
/// normalised at the end; prime-field input uses plain Gauss-Jordan.
Echelon echelon(const Matrix& m);

struct RankAndBasis {
  std::size_t rank = 0;
  Matrix basis;
};

RankAndBasis rank_and_rowbasis(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Rows form a basis of {x : x * m^T = 0}, i.e. the right kernel of m
/// written as row vectors. rank(nullspace(m)) + rank(m) == m.cols().
Matrix nullspace(const Matrix& m);

/// Rows form a basis of {y : y * m = 0}.
Matrix left_nullspace(const Matrix& m);

/// Some x with m * x^T = b^T (b has m.rows() entries), if one exists.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

/// Coordinates c with c * rows = target, if target lies in the row space.
std::optional<std::vector<Scalar>> row_coordinates(const Matrix& rows,
                                                   const std::vector<Scalar>& target);

/// True iff both matrices have the same row space.
bool same_row_space(const Matrix& a, const Matrix& b);

}  // namespace taured
