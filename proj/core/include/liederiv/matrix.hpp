#pragma once

#include <utility>
#include <vector>

#include "liederiv/rational.hpp"

namespace liederiv {

/// Dense matrix over the rationals. Dimensions are fixed at construction;
/// all operations are pure and exact.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols);

  static Matrix identity(int n);
  static Matrix from_rows(std::vector<Vec> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rat& at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }
  Rat& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Rat& s) const;
  bool operator==(const Matrix& rhs) const;

  Vec apply(const Vec& x) const;
  Vec row(int r) const;
  Vec col(int c) const;

  bool is_zero() const;

  /// Row-major flattening; the inverse of vec_to_matrix.
  Vec flatten() const;

 private:
  int rows_, cols_;
  std::vector<Rat> data_;
};

Matrix vec_to_matrix(const Vec& v, int rows, int cols);

/// AB - BA; both square of equal size.
Matrix commutator(const Matrix& a, const Matrix& b);

/// True when m^k = 0 for some k <= dim.
bool is_nilpotent_matrix(const Matrix& m);

/// Reduced row echelon form with the fixed pivot rule: columns scanned left
/// to right, rows top to bottom, first nonzero entry wins. Returns the RREF
/// and the rank.
std::pair<Matrix, int> rref(const Matrix& m);

int rank(const Matrix& m);

/// Incremental reduced row echelon accumulator. Maintains a canonical RREF
/// basis of everything inserted so far; rows that reduce to zero are
/// discarded.
class RowEchelon {
 public:
  explicit RowEchelon(int cols) : cols_(cols) {}

  int cols() const { return cols_; }
  int rank() const { return int(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Returns true when the row enlarged the span.
  bool insert(Vec row);

  /// Reduces v against the current rows; result has zeros in all pivot
  /// columns.
  Vec reduce(Vec v) const;

  bool contains(const Vec& v) const;

  /// Basis of {x : r . x = 0 for every inserted row r}, canonical order
  /// (one vector per free column, ascending).
  std::vector<Vec> kernel() const;

 private:
  int cols_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;  // ascending, parallel to rows_
};

}  // namespace liederiv
