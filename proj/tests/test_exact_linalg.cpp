#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "liederiv/matrix.hpp"
#include "liederiv/rational.hpp"
#include "liederiv/subspace.hpp"

using namespace liederiv;

TEST_CASE("rational literals") {
  CHECK(rat_from_string("3/2") == Rat(3, 2));
  CHECK(rat_from_string("-7") == Rat(-7));
  CHECK(rat_from_string("-6/4") == Rat(-3, 2));
  CHECK(rat_to_string(rat_from_string("-3/6")) == "-1/2");
  CHECK(rat_to_string(Rat(4)) == "4");
  CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("a/2"), std::invalid_argument);
}

TEST_CASE("vector helpers") {
  CHECK(vec_is_zero({Rat(0), Rat(0)}));
  CHECK(!vec_is_zero({Rat(0), Rat(1)}));
  CHECK(vec_primitive({Rat(0), Rat(-2, 3), Rat(4, 3)}) ==
        Vec{Rat(0), Rat(1), Rat(-2)});
  CHECK(vec_primitive({Rat(0), Rat(0)}) == Vec{Rat(0), Rat(0)});
}

TEST_CASE("matrix algebra") {
  Matrix a = Matrix::from_rows({{Rat(1), Rat(2)}, {Rat(0), Rat(1)}});
  Matrix b = Matrix::from_rows({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
  Matrix ab = a * b;
  CHECK(ab.at(0, 0) == Rat(2));
  CHECK(ab.at(0, 1) == Rat(1));
  CHECK((a * Matrix::identity(2)).flatten() == a.flatten());
  CHECK(a.apply({Rat(3), Rat(-1)}) == Vec{Rat(1), Rat(-1)});
  CHECK(a.transpose().at(0, 1) == Rat(0));

  Matrix c = commutator(a, b);
  Matrix d = commutator(b, a);
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) CHECK(c.at(r, s) == -d.at(r, s));

  Matrix nil = Matrix::from_rows({{Rat(0), Rat(1)}, {Rat(0), Rat(0)}});
  CHECK(is_nilpotent_matrix(nil));
  CHECK(!is_nilpotent_matrix(Matrix::identity(2)));

  Vec flat = a.flatten();
  CHECK(vec_to_matrix(flat, 2, 2).at(0, 1) == Rat(2));
}

TEST_CASE("row echelon, rank and kernel") {
  Matrix m = Matrix::from_rows({
      {Rat(1), Rat(2), Rat(3)},
      {Rat(2), Rat(4), Rat(6)},
      {Rat(1), Rat(0), Rat(1)},
  });
  CHECK(rank(m) == 2);

  RowEchelon ech(3);
  for (const Vec& row :
       {Vec{Rat(1), Rat(2), Rat(3)}, Vec{Rat(2), Rat(4), Rat(6)},
        Vec{Rat(1), Rat(0), Rat(1)}}) {
    ech.insert(row);
  }
  CHECK(ech.rank() == 2);
  CHECK(ech.contains({Rat(3), Rat(2), Rat(5)}));
  CHECK(!ech.contains({Rat(0), Rat(0), Rat(1)}));

  // Rank-nullity, and kernel vectors annihilated by every inserted row.
  std::vector<Vec> kernel = ech.kernel();
  CHECK(int(kernel.size()) == 3 - ech.rank());
  for (const Vec& k : kernel) {
    Rat dot1 = k[0] * 1 + k[1] * 2 + k[2] * 3;
    Rat dot2 = k[0] * 1 + k[1] * 0 + k[2] * 1;
    CHECK(is_zero(dot1));
    CHECK(is_zero(dot2));
  }
}

TEST_CASE("subspace lattice") {
  Subspace a = Subspace::span(3, {{Rat(1), Rat(0), Rat(0)},
                                  {Rat(0), Rat(1), Rat(0)}});
  Subspace b = Subspace::span(3, {{Rat(0), Rat(1), Rat(0)},
                                  {Rat(0), Rat(0), Rat(1)}});
  CHECK(a.dim() == 2);
  CHECK(sum(a, b).dim() == 3);
  Subspace meet = intersect(a, b);
  CHECK(meet.dim() == 1);
  CHECK(meet.contains({Rat(0), Rat(5), Rat(0)}));
  CHECK(a == Subspace::span(3, {{Rat(2), Rat(1), Rat(0)},
                                {Rat(1), Rat(1), Rat(0)}}));
  CHECK(Subspace::full(3).dim() == 3);
  CHECK(sum(a, b).quotient_dim(a) == 1);

  Matrix m = Matrix::from_rows({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}});
  CHECK(column_space(m).dim() == 1);
  Subspace ns = nullspace(m);
  CHECK(ns.dim() == 1);
  CHECK(ns.contains({Rat(1), Rat(-1)}));
}
