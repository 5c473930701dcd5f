#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liederiv/context.hpp"
#include "liederiv/poly.hpp"

using namespace liederiv;

namespace {
Poly X(int v) { return Poly::var(v, 3); }
Poly C(int c) { return Poly::constant(Rat(c), 3); }
}  // namespace

TEST_CASE("polynomial arithmetic") {
  Poly p = (X(0) + X(1)) * (X(0) + X(1));
  CHECK(p == X(0) * X(0) + X(0) * X(1) * Rat(2) + X(1) * X(1));
  CHECK(p.total_degree() == 2);
  CHECK(p.eval({Rat(1), Rat(2), Rat(0)}) == Rat(9));
  CHECK((p - p).is_zero());
  CHECK(X(0).coeff_of_var(0) == Rat(1));
  CHECK((X(0) * Rat(3) + C(1)).constant_term() == Rat(1));
  CHECK((X(0) + C(1)).is_affine());
  CHECK(!(X(0) * X(1)).is_affine());
  CHECK(p.to_string() == "x1^2 + 2*x1*x2 + x2^2");
}

TEST_CASE("substitution") {
  Poly p = X(0) * X(1) + X(2);
  std::map<int, Poly> sub;
  sub[0] = X(1) + C(1);  // x1 := x2 + 1
  Poly q = p.substitute(sub);
  CHECK(q == X(1) * X(1) + X(1) + X(2));
}

TEST_CASE("normalization and factor split") {
  Poly p =
      (X(0) * X(0) * X(1)) * (Rat(-4) / 6) + X(0) * X(1) * X(2) * (Rat(-2) / 3);
  Poly n = p.normalized();
  CHECK(n == X(0) * X(0) * X(1) + X(0) * X(1) * X(2));

  auto [vars, primitive] = n.split_monomial_factors();
  CHECK(vars == std::vector<int>{0, 1});
  CHECK(primitive == X(0) + X(2));
}

TEST_CASE("exact division") {
  Poly p = (X(0) + X(1)) * (X(0) - X(1));
  auto q = p.divide_exact(X(0) + X(1));
  REQUIRE(q.has_value());
  CHECK(*q == X(0) - X(1));
  CHECK(!p.divide_exact(X(2)).has_value());
  CHECK((X(0) * X(1)).proportional_to(X(0) * X(1) * Rat(-5)));
  CHECK(!(X(0)).proportional_to(X(1)));
}

TEST_CASE("constraint context solves affine equalities") {
  ConstraintContext ctx(3);
  CHECK(ctx.add_equality(X(0) - X(1) - C(1)) ==
        ConstraintContext::AddResult::Ok);  // x1 = x2 + 1
  CHECK(ctx.is_zero_mod(X(0) - X(1) - C(1)));
  CHECK(!ctx.is_zero_mod(X(0)));

  CHECK(ctx.add_inequation(X(2)) == ConstraintContext::AddResult::Ok);
  CHECK(ctx.known_nonzero(X(2)));
  CHECK(ctx.known_nonzero(X(2) * X(2)));
  CHECK(!ctx.known_nonzero(X(1)));

  // x3 = 0 contradicts the inequation x3 != 0.
  ConstraintContext bad = ctx;
  CHECK(bad.add_equality(X(2)) == ConstraintContext::AddResult::Infeasible);

  // A materialized point satisfies the solved equalities.
  std::map<int, Rat> free_values;
  for (int v : ctx.free_variables()) free_values[v] = Rat(2);
  Vec point = ctx.materialize(free_values);
  REQUIRE(point.size() == 3);
  CHECK(point[0] == point[1] + 1);
  CHECK((X(0) - X(1) - C(1)).eval(point) == Rat(0));
}

TEST_CASE("contradictory equalities are infeasible") {
  ConstraintContext ctx(3);
  CHECK(ctx.add_equality(X(0) - C(1)) == ConstraintContext::AddResult::Ok);
  CHECK(ctx.add_equality(X(0) - C(2)) ==
        ConstraintContext::AddResult::Infeasible);
}
