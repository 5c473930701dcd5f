#pragma once

#include <map>
#include <string>
#include <vector>

#include "liederiv/poly.hpp"

namespace liederiv {

/// Conjunction of polynomial equalities and inequations over the coordinates
/// of a point x. Affine equalities are kept solved: each eliminated variable
/// maps to an affine image in surviving variables, and every stored
/// polynomial is reduced under that substitution. No polynomial sits in both
/// the equality and inequation sets.
class ConstraintContext {
 public:
  enum class AddResult { Ok, Infeasible };

  explicit ConstraintContext(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::map<int, Poly>& substitutions() const { return subst_; }
  const std::vector<Poly>& nonlinear_equalities() const { return nonlinear_; }
  const std::vector<Poly>& inequations() const { return inequations_; }

  /// Applies the substitution for the eliminated variables.
  Poly reduce(const Poly& p) const { return p.substitute(subst_); }

  /// Reduction followed by normal-form division against the nonlinear
  /// equality set; zero result means p vanishes on the region.
  bool is_zero_mod(const Poly& p) const;

  AddResult add_equality(Poly p);
  AddResult add_inequation(const Poly& p);

  /// True when every irreducible-ish factor of p is already an inequation
  /// (so p cannot vanish on the region).
  bool known_nonzero(const Poly& p) const;

  std::vector<int> free_variables() const;

  /// Extends an assignment of the free variables to all variables.
  Vec materialize(const std::map<int, Rat>& free_values) const;

  std::string to_string() const;

 private:
  Poly normal_form(Poly p) const;
  AddResult refresh_after_substitution();

  int nvars_;
  std::map<int, Poly> subst_;
  std::vector<Poly> nonlinear_;
  std::vector<Poly> inequations_;
};

}  // namespace liederiv
