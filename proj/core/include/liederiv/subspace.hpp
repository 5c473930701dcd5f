#pragma once

#include <vector>

#include "liederiv/matrix.hpp"
#include "liederiv/rational.hpp"

namespace liederiv {

/// Linear subspace of Q^ambient, stored as the unique reduced row echelon
/// basis of its span. Two subspaces are equal exactly when their canonical
/// bases coincide entrywise.
class Subspace {
 public:
  explicit Subspace(int ambient) : ambient_(ambient), basis_(ambient) {}

  static Subspace span(int ambient, const std::vector<Vec>& vectors);
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rank(); }
  const std::vector<Vec>& basis() const { return basis_.rows(); }
  const std::vector<int>& pivots() const { return basis_.pivots(); }

  bool contains(const Vec& v) const { return basis_.contains(v); }
  bool contains(const Subspace& other) const;
  Vec reduce(Vec v) const { return basis_.reduce(std::move(v)); }

  bool operator==(const Subspace& rhs) const;

  /// dim(this) - dim(sub); requires sub to be contained in this.
  int quotient_dim(const Subspace& sub) const;

 private:
  int ambient_;
  RowEchelon basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Span of the columns of m, as a subspace of Q^rows.
Subspace column_space(const Matrix& m);

/// {x : m x = 0}, as a subspace of Q^cols.
Subspace nullspace(const Matrix& m);

}  // namespace liederiv
