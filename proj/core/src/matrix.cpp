#include "liederiv/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace liederiv {

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::vector<Vec> rows) {
  int r = int(rows.size());
  int c = r ? int(rows[0].size()) : 0;
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch");
  Matrix out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = at(r, k);
      if (liederiv::is_zero(a)) continue;
      for (int c = 0; c < rhs.cols_; ++c) {
        const Rat& b = rhs.at(k, c);
        if (!liederiv::is_zero(b)) out.at(r, c) += a * b;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("dimension mismatch");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] + rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("dimension mismatch");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] - rhs.data_[i];
  return out;
}

Matrix Matrix::operator*(const Rat& s) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

Vec Matrix::apply(const Vec& x) const {
  if (int(x.size()) != cols_) throw std::invalid_argument("dimension mismatch");
  Vec out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      const Rat& a = at(r, c);
      if (!liederiv::is_zero(a) && !liederiv::is_zero(x[c])) out[r] += a * x[c];
    }
  return out;
}

Vec Matrix::row(int r) const {
  Vec out(cols_);
  for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

Vec Matrix::col(int c) const {
  Vec out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

bool Matrix::is_zero() const {
  for (const Rat& r : data_)
    if (!liederiv::is_zero(r)) return false;
  return true;
}

Vec Matrix::flatten() const { return data_; }

Matrix vec_to_matrix(const Vec& v, int rows, int cols) {
  if (int(v.size()) != rows * cols)
    throw std::invalid_argument("dimension mismatch");
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = v[std::size_t(r) * cols + c];
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

bool is_nilpotent_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("not square");
  Matrix p = m;
  for (int k = 1; k <= m.rows(); k *= 2) {
    if (p.is_zero()) return true;
    p = p * p;
  }
  return p.is_zero();
}

std::pair<Matrix, int> rref(const Matrix& m) {
  Matrix a = m;
  int pivot_row = 0;
  for (int c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    int sel = -1;
    for (int r = pivot_row; r < a.rows(); ++r)
      if (!is_zero(a.at(r, c))) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int j = 0; j < a.cols(); ++j)
        std::swap(a.at(sel, j), a.at(pivot_row, j));
    Rat inv = 1 / a.at(pivot_row, c);
    for (int j = c; j < a.cols(); ++j) a.at(pivot_row, j) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || is_zero(a.at(r, c))) continue;
      Rat f = a.at(r, c);
      for (int j = c; j < a.cols(); ++j) a.at(r, j) -= f * a.at(pivot_row, j);
    }
    ++pivot_row;
  }
  return {a, pivot_row};
}

int rank(const Matrix& m) { return rref(m).second; }

bool RowEchelon::insert(Vec row) {
  if (int(row.size()) != cols_) throw std::invalid_argument("dimension mismatch");
  row = reduce(std::move(row));
  int p = -1;
  for (int c = 0; c < cols_; ++c)
    if (!is_zero(row[c])) {
      p = c;
      break;
    }
  if (p < 0) return false;
  Rat inv = 1 / row[p];
  for (int c = p; c < cols_; ++c)
    if (!is_zero(row[c])) row[c] *= inv;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rat& f = rows_[i][p];
    if (is_zero(f)) continue;
    Rat g = f;
    for (int c = p; c < cols_; ++c)
      if (!is_zero(row[c])) rows_[i][c] -= g * row[c];
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p);
  std::size_t idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(row));
  return true;
}

Vec RowEchelon::reduce(Vec v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rat& f = v[pivots_[i]];
    if (is_zero(f)) continue;
    Rat g = f;
    const Vec& row = rows_[i];
    for (int c = pivots_[i]; c < cols_; ++c)
      if (!is_zero(row[c])) v[c] -= g * row[c];
  }
  return v;
}

bool RowEchelon::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

std::vector<Vec> RowEchelon::kernel() const {
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots_) is_pivot[p] = true;
  std::vector<Vec> out;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols_);
    v[f] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) v[pivots_[i]] = -rows_[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace liederiv
