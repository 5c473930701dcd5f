#include "liederiv/subspace.hpp"

#include <stdexcept>

namespace liederiv {

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
  Subspace s(ambient);
  for (const Vec& v : vectors) s.basis_.insert(v);
  return s;
}

Subspace Subspace::full(int ambient) {
  std::vector<Vec> rows;
  for (int i = 0; i < ambient; ++i) {
    Vec v(ambient);
    v[i] = 1;
    rows.push_back(std::move(v));
  }
  return span(ambient, rows);
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch");
  for (const Vec& v : other.basis())
    if (!contains(v)) return false;
  return true;
}

bool Subspace::operator==(const Subspace& rhs) const {
  return ambient_ == rhs.ambient_ && basis_.rows() == rhs.basis_.rows();
}

int Subspace::quotient_dim(const Subspace& sub) const {
  if (!contains(sub))
    throw std::invalid_argument("quotient_dim: not a subspace of this space");
  return dim() - sub.dim();
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
  std::vector<Vec> rows = a.basis();
  for (const Vec& v : b.basis()) rows.push_back(v);
  return Subspace::span(a.ambient(), rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
  // Kernel of the stacked system [A^T | -B^T]: a combination sums to a
  // common vector exactly when it lies in both row spaces.
  int ra = a.dim(), rb = b.dim();
  if (ra == 0 || rb == 0) return Subspace(a.ambient());
  RowEchelon sys(ra + rb);
  for (int r = 0; r < a.ambient(); ++r) {
    Vec row(ra + rb);
    bool nonzero = false;
    for (int i = 0; i < ra; ++i) {
      row[i] = a.basis()[i][r];
      nonzero = nonzero || !is_zero(row[i]);
    }
    for (int j = 0; j < rb; ++j) {
      row[ra + j] = -b.basis()[j][r];
      nonzero = nonzero || !is_zero(row[ra + j]);
    }
    if (nonzero) sys.insert(std::move(row));
  }
  std::vector<Vec> gens;
  for (const Vec& k : sys.kernel()) {
    Vec v(a.ambient());
    for (int i = 0; i < ra; ++i) {
      if (is_zero(k[i])) continue;
      for (int c = 0; c < a.ambient(); ++c) v[c] += k[i] * a.basis()[i][c];
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(a.ambient(), gens);
}

Subspace column_space(const Matrix& m) {
  std::vector<Vec> rows;
  for (int c = 0; c < m.cols(); ++c) rows.push_back(m.col(c));
  return Subspace::span(m.rows(), rows);
}

Subspace nullspace(const Matrix& m) {
  RowEchelon sys(m.cols());
  for (int r = 0; r < m.rows(); ++r) sys.insert(m.row(r));
  return Subspace::span(m.cols(), sys.kernel());
}

}  // namespace liederiv
