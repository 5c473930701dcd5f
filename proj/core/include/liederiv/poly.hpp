#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liederiv/rational.hpp"

namespace liederiv {

/// Multivariate polynomial over Q in a fixed number of variables, stored in
/// canonical expanded form: monomials sorted descending-lex by exponent
/// vector, no zero coefficients. Variables print 1-based as x1, x2, ...
class Poly {
 public:
  using Mono = std::vector<int>;

  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly constant(const Rat& c, int nvars);
  static Poly var(int v, int nvars);  // v is 0-based

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // requires is_constant()
  int total_degree() const;
  int degree_in(int v) const;
  const std::map<Mono, Rat, std::greater<Mono>>& terms() const { return terms_; }

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator-() const;
  Poly operator*(const Poly& rhs) const;
  Poly operator*(const Rat& s) const;
  bool operator==(const Poly& rhs) const;

  Rat eval(const Vec& point) const;

  /// Replaces each variable in subst by its image. Images must not involve
  /// substituted variables.
  Poly substitute(const std::map<int, Poly>& subst) const;

  /// Divides out the rational content and flips sign so the leading
  /// coefficient is positive. Zero stays zero.
  Poly normalized() const;

  /// Splits off the monomial content: returns the list of variables that
  /// divide every term (with multiplicity 1 each in the output) and the
  /// remaining primitive part h with this = (prod of full variable powers) * h.
  /// The returned variable list repeats a variable per power.
  std::pair<std::vector<int>, Poly> split_monomial_factors() const;

  /// Exact division; nullopt when the divisor does not divide this.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  /// True when total degree <= 1.
  bool is_affine() const;
  Rat coeff_of_var(int v) const;  // linear coefficient
  Rat constant_term() const;

  /// True when rhs = c * this for a nonzero rational c.
  bool proportional_to(const Poly& rhs) const;

  std::string to_string() const;

 private:
  void add_term(Mono m, Rat c);

  int nvars_;
  std::map<Mono, Rat, std::greater<Mono>> terms_;
};

}  // namespace liederiv
