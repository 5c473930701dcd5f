#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liederiv/matrix.hpp"
#include "liederiv/rational.hpp"
#include "liederiv/subspace.hpp"

namespace liederiv {

/// First Jacobi failure found: J(e_i,e_j,e_k) != 0 with the nonzero defect
/// vector. Indices are 0-based.
struct JacobiViolation {
  int i, j, k;
  Vec defect;
};

/// Finite-dimensional Lie algebra over Q given by structure constants on a
/// fixed basis. Brackets are stored for i < j only; the rest follows by
/// antisymmetry. Instances are immutable and always satisfy Jacobi.
class LieAlgebra {
 public:
  using Terms = std::vector<std::pair<int, Rat>>;        // sparse (index, coeff)
  using Table = std::map<std::pair<int, int>, Terms>;    // keys i < j

  class Builder {
   public:
    explicit Builder(int dim);
    /// Adds c * e_k to [e_i, e_j]; i != j, any order. Coefficients for the
    /// same (i, j, k) accumulate.
    Builder& add(int i, int j, int k, const Rat& c);
    Builder& labels(std::vector<std::string> names);
    const Table& table() const { return table_; }
    std::optional<JacobiViolation> check() const;
    /// Throws std::invalid_argument when the table violates Jacobi.
    LieAlgebra build() const;

   private:
    int dim_;
    Table table_;
    std::vector<std::string> labels_;
  };

  int dim() const { return dim_; }
  const Table& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int i) const;

  /// Signed structure constant of e_k in [e_i, e_j], any i, j.
  Rat struct_const(int i, int j, int k) const;
  Vec bracket_basis(int i, int j) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  const Matrix& ad(int i) const { return ad_[i]; }
  Matrix ad(const Vec& x) const;

  Vec basis_vector(int i) const;

  const Subspace& center() const;
  Subspace centralizer(const Vec& x) const;

  /// g = c_1 > c_2 > ... down to the first repetition; last entry is the
  /// stable term.
  std::vector<Subspace> lower_central_series() const;
  std::vector<Subspace> derived_series() const;

  std::optional<int> nilpotency_class() const;
  std::optional<int> derived_length() const;

  bool same_table(const LieAlgebra& other) const;

 private:
  friend class Builder;
  LieAlgebra(int dim, Table table, std::vector<std::string> labels);

  int dim_;
  Table table_;
  std::vector<std::string> labels_;
  std::vector<Matrix> ad_;
  mutable std::optional<Subspace> center_;
};

std::optional<JacobiViolation> validate_jacobi(int dim, const LieAlgebra::Table& table);
std::optional<JacobiViolation> validate_jacobi(const LieAlgebra& L);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Span of [a, b] for a in A, b in B (subspaces of L).
Subspace bracket_space(const LieAlgebra& L, const Subspace& A, const Subspace& B);
Subspace derived_subalgebra(const LieAlgebra& L);

bool is_ideal(const LieAlgebra& L, const Subspace& s);

struct Quotient {
  LieAlgebra algebra;
  Matrix projection;            // dim(quotient) x dim(L)
  Matrix section;               // dim(L) x dim(quotient)
  std::vector<int> kept;        // original basis indices spanning the complement
};

/// Quotient by an ideal. The complement basis consists of the original basis
/// vectors whose coordinates are not pivot columns of the ideal's echelon
/// basis, in their original order. Throws when the subspace is not an ideal.
Quotient quotient(const LieAlgebra& L, const Subspace& ideal);

}  // namespace liederiv
