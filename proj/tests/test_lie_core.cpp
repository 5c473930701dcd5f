#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "liederiv/derivations.hpp"
#include "liederiv/families.hpp"
#include "liederiv/lie_algebra.hpp"

using namespace liederiv;

TEST_CASE("builder catches Jacobi violations") {
  // g5_6 plus a spurious [e2, e4] = e5 breaks Jacobi at (e1, e2, e3).
  LieAlgebra::Builder b(5);
  b.add(0, 1, 2, 1);
  b.add(0, 2, 3, 1);
  b.add(0, 3, 4, 1);
  b.add(1, 2, 4, 1);
  b.add(1, 3, 4, 1);
  auto violation = b.check();
  REQUIRE(violation.has_value());
  CHECK(violation->i == 0);
  CHECK(violation->j == 1);
  CHECK(violation->k == 2);
  CHECK(!vec_is_zero(violation->defect));
  CHECK_THROWS_AS(b.build(), std::invalid_argument);
}

TEST_CASE("brackets, ad and structure constants") {
  const LieAlgebra L = g5_6();
  CHECK(L.struct_const(0, 1, 2) == Rat(1));
  CHECK(L.struct_const(1, 0, 2) == Rat(-1));
  CHECK(L.struct_const(1, 3, 4) == Rat(0));
  CHECK(L.bracket_basis(1, 2) == Vec{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});

  // Bilinearity: [e1 + e2, e3] = e4 + e5.
  Vec x = L.basis_vector(0);
  for (std::size_t t = 0; t < 5; ++t) x[t] += L.basis_vector(1)[t];
  CHECK(L.bracket(x, L.basis_vector(2)) ==
        Vec{Rat(0), Rat(0), Rat(0), Rat(1), Rat(1)});
  CHECK(L.ad(x).apply(L.basis_vector(2)) == L.bracket(x, L.basis_vector(2)));
  CHECK(L.ad(0).at(2, 1) == Rat(1));  // [e1, e2] = e3
}

TEST_CASE("center and centralizer") {
  const LieAlgebra n3 = heisenberg();
  CHECK(n3.center().dim() == 1);
  CHECK(n3.center().contains(n3.basis_vector(2)));
  const Subspace c = n3.centralizer(n3.basis_vector(0));
  CHECK(c.dim() == 2);
  CHECK(c.contains(n3.basis_vector(0)));
  CHECK(c.contains(n3.basis_vector(2)));
  CHECK(!c.contains(n3.basis_vector(1)));
}

TEST_CASE("series and class") {
  const LieAlgebra L = g5_6();
  const auto lcs = L.lower_central_series();
  REQUIRE(lcs.size() == 5);
  CHECK(lcs[0].dim() == 5);
  CHECK(lcs[1].dim() == 3);
  CHECK(lcs[2].dim() == 2);
  CHECK(lcs[3].dim() == 1);
  CHECK(lcs[4].dim() == 0);
  CHECK(L.nilpotency_class() == std::optional<int>(4));
  CHECK(L.derived_length() == std::optional<int>(2));

  const LieAlgebra A = a_family(Rat(1), Rat(0));
  CHECK(!A.nilpotency_class().has_value());
  CHECK(A.derived_length().has_value());
}

TEST_CASE("direct sums") {
  const LieAlgebra s = direct_sum(heisenberg(), abelian(2));
  CHECK(s.dim() == 5);
  CHECK(s.struct_const(0, 1, 2) == Rat(1));
  CHECK(s.center().dim() == 3);
  CHECK(s.nilpotency_class() == std::optional<int>(2));
}

TEST_CASE("ideals and quotients") {
  const LieAlgebra L = g5_6();
  const Subspace top = Subspace::span(5, {L.basis_vector(4)});
  CHECK(is_ideal(L, top));
  CHECK(!is_ideal(L, Subspace::span(5, {L.basis_vector(0)})));
  CHECK(derived_subalgebra(L).dim() == 3);
  CHECK(bracket_space(L, Subspace::full(5), Subspace::full(5)).dim() == 3);

  const Quotient q = quotient(L, top);
  CHECK(q.algebra.dim() == 4);
  CHECK(q.kept == std::vector<int>{0, 1, 2, 3});
  // g5_6 / <e5> is the standard filiform algebra of dimension 4.
  CHECK(q.algebra.same_table(filiform_standard(4)));
  CHECK_THROWS_AS(quotient(L, Subspace::span(5, {L.basis_vector(0)})),
                  std::invalid_argument);
}

TEST_CASE("induced maps on quotients") {
  const LieAlgebra L = g5_6();
  const Subspace top = Subspace::span(5, {L.basis_vector(4)});
  const Quotient q = quotient(L, top);
  // ad(e1) preserves <e5>; the induced map is ad(e1) of the quotient.
  const Matrix induced = induce_on_quotient(q, top, L.ad(0));
  CHECK(induced.flatten() == q.algebra.ad(0).flatten());

  // E_{1,5} does not preserve <e5>.
  Matrix bad(5, 5);
  bad.at(0, 4) = 1;
  CHECK_THROWS_AS(induce_on_quotient(q, top, bad), std::invalid_argument);
}
