#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "liederiv/families.hpp"

using namespace liederiv;

TEST_CASE("free nilpotent and free metabelian dimensions") {
  CHECK(free_nilpotent(2, 2).dim() == 3);
  CHECK(free_nilpotent(3, 2).dim() == 6);
  CHECK(free_nilpotent(4, 2).dim() == 10);
  CHECK(free_nilpotent(2, 3).dim() == 5);
  CHECK(free_nilpotent(3, 3).dim() == 14);
  CHECK(free_nilpotent(2, 2).same_table(heisenberg()));
  CHECK_THROWS_AS(free_nilpotent(2, 4), std::invalid_argument);

  const LieAlgebra m22 = free_metabelian(2);
  CHECK(m22.dim() == 3);
  CHECK(m22.bracket_basis(1, 0) == Vec{Rat(0), Rat(0), Rat(1)});  // [x2,x1]=y
  CHECK(m22.nilpotency_class() == std::optional<int>(2));
  CHECK(free_metabelian(3).dim() == 5);
  CHECK(free_metabelian(4).dim() == 8);
  CHECK(free_metabelian(5).dim() == 12);
  CHECK(free_metabelian(5).nilpotency_class() == std::optional<int>(5));
  CHECK(free_metabelian(5).derived_length() == std::optional<int>(2));
}

TEST_CASE("graph algebras") {
  const Graph k3{3, {{0, 1}, {0, 2}, {1, 2}}};
  CHECK(graph_algebra(k3).same_table(free_nilpotent(3, 2)));

  const Graph path{3, {{0, 1}, {1, 2}}};
  const LieAlgebra p = graph_algebra(path);
  CHECK(p.dim() == 5);
  CHECK(p.nilpotency_class() == std::optional<int>(2));
  CHECK(p.center().dim() == 2);

  CHECK_THROWS_AS(graph_algebra(Graph{2, {{0, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(graph_algebra(Graph{2, {{0, 1}, {1, 0}}}),
                  std::invalid_argument);
}

TEST_CASE("triangular matrix algebras") {
  const LieAlgebra n3m = triangular(3, true);
  CHECK(n3m.dim() == 3);
  CHECK(n3m.nilpotency_class() == std::optional<int>(2));

  const LieAlgebra t3 = triangular(3, false);
  CHECK(t3.dim() == 6);
  CHECK(!t3.nilpotency_class().has_value());
  CHECK(derived_subalgebra(t3).dim() == 3);

  CHECK(triangular(4, true).dim() == 6);
  CHECK(triangular(4, false).dim() == 10);
}

TEST_CASE("two-step family gn") {
  const LieAlgebra g = gn_family(2);
  CHECK(g.dim() == 10);
  CHECK(g.nilpotency_class() == std::optional<int>(2));
  CHECK(g.center().dim() == 4);
  // [t1, x_{1,1}] = y_{1,1}: indices t1 = 0, x_{1,1} = 2, y_{1,1} = 6.
  Vec img = g.bracket_basis(0, 2);
  CHECK(img[6] == Rat(1));
  // [t2, x_{2,1}] = y_{1,1}: t2 = 1, x_{2,1} = 4.
  CHECK(g.bracket_basis(1, 4)[6] == Rat(1));
  CHECK(gn_family(3).dim() == 14);
}

TEST_CASE("metabelian filiform coefficients") {
  const LieAlgebra m = metabelian_filiform(5, Vec{Rat(1)});
  CHECK(m.dim() == 5);
  CHECK(m.bracket_basis(1, 2) == Vec{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
  CHECK(m.nilpotency_class() == std::optional<int>(4));

  const LieAlgebra f = filiform_standard(6);
  CHECK(f.dim() == 6);
  CHECK(f.nilpotency_class() == std::optional<int>(5));
  CHECK(f.bracket_basis(0, 4)[5] == Rat(1));

  CHECK_THROWS_AS(metabelian_filiform(6, Vec{Rat(1)}), std::invalid_argument);
}

TEST_CASE("almost abelian block conventions") {
  const LieAlgebra L = almost_abelian({{Rat(1), 2}});
  CHECK(L.dim() == 3);
  CHECK(L.bracket_basis(2, 0) == Vec{Rat(1), Rat(0), Rat(0)});
  CHECK(L.bracket_basis(2, 1) == Vec{Rat(1), Rat(1), Rat(0)});

  const LieAlgebra nil = almost_abelian({{Rat(0), 3}});
  CHECK(nil.nilpotency_class() == std::optional<int>(3));
  CHECK_THROWS_AS(almost_abelian({}), std::invalid_argument);
}

TEST_CASE("solvable family structure constants") {
  const LieAlgebra A = a_family(Rat(2), Rat(3));
  CHECK(A.dim() == 5);
  CHECK(A.struct_const(0, 4, 1) == Rat(1));   // [e1,e5] = e2
  CHECK(A.struct_const(1, 4, 1) == Rat(5));   // [e2,e5] = (q+r) e2
  CHECK(A.struct_const(2, 3, 1) == Rat(1));   // [e3,e4] = e2
  CHECK(A.struct_const(2, 4, 0) == Rat(1));   // [e3,e5] = e1 + q e3
  CHECK(A.struct_const(2, 4, 2) == Rat(2));
  CHECK(A.struct_const(3, 4, 2) == Rat(1));   // [e4,e5] = e3 + r e4
  CHECK(A.struct_const(3, 4, 3) == Rat(3));
}

TEST_CASE("family grammar") {
  CHECK(make_family("g56", {}).same_table(g5_6()));
  CHECK(make_family("g53", {}).same_table(g5_3()));
  CHECK(make_family("n3", {}).same_table(heisenberg()));
  CHECK(make_family("abelian", {"4"}).dim() == 4);
  CHECK(make_family("aqr", {"1", "-1"}).same_table(a_family(Rat(1), Rat(-1))));
  CHECK(make_family("graph", {"3", "1-2", "2-3"})
            .same_table(graph_algebra(Graph{3, {{0, 1}, {1, 2}}})));
  CHECK(make_family("free2", {"3"}).same_table(free_nilpotent(3, 2)));
  CHECK(make_family("almost-abelian", {"1:2", "0:1"}).dim() == 4);
  CHECK(make_family("strict-triangular", {"3"}).dim() == 3);

  CHECK_THROWS_AS(make_family("nope", {}), std::invalid_argument);
  CHECK_THROWS_AS(make_family("free2", {}), std::invalid_argument);
  CHECK_THROWS_AS(make_family("abelian", {"x"}), std::invalid_argument);
  CHECK_THROWS_AS(make_family("graph", {"2", "1-5"}), std::invalid_argument);
  CHECK(!family_grammar_help().empty());
}

TEST_CASE("isomorphism verification") {
  const LieAlgebra h = heisenberg();
  CHECK(verify_isomorphism(h, h, Matrix::identity(3)));

  // e1 -> 2 e1, e2 -> e2, e3 -> 2 e3 is an automorphism.
  Matrix good(3, 3);
  good.at(0, 0) = 2;
  good.at(1, 1) = 1;
  good.at(2, 2) = 2;
  CHECK(verify_isomorphism(h, h, good));

  // Scaling only the center breaks the bracket.
  Matrix bad = Matrix::identity(3);
  bad.at(2, 2) = 2;
  CHECK(!verify_isomorphism(h, h, bad));

  CHECK(!verify_isomorphism(h, abelian(3), Matrix::identity(3)));
  CHECK_THROWS_AS(verify_isomorphism(h, abelian(4), Matrix::identity(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_isomorphism(h, h, Matrix(3, 3)),
                  std::invalid_argument);
}
