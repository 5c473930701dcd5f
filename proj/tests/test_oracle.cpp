#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "liederiv/derivations.hpp"
#include "liederiv/families.hpp"
#include "liederiv/fp.hpp"
#include "liederiv/oracle.hpp"

using namespace liederiv;

TEST_CASE("prime field arithmetic") {
  const FpContext f7(7);
  CHECK(f7.add(5, 4) == 2);
  CHECK(f7.sub(2, 5) == 4);
  CHECK(f7.mul(3, 5) == 1);
  CHECK(f7.neg(3) == 4);
  CHECK(f7.inv(3) == 5);
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(f7.mul(a, f7.inv(a)) == 1);
  CHECK(f7.reduce(49) == 0);
  CHECK(f7.reduce(50) == 1);

  const FpContext f2(2);
  CHECK(f2.add(1, 1) == 0);
  CHECK(f2.inv(1) == 1);

  CHECK_THROWS_AS(FpContext(1), std::invalid_argument);
  CHECK_THROWS_AS(FpContext(6), std::invalid_argument);
  CHECK_THROWS_AS(FpContext(1u << 16), std::invalid_argument);
}

TEST_CASE("rational reduction mod p") {
  const FpContext f7(7);
  CHECK(fp_from_rat(Rat(1) / 5, f7) == 3);  // 5 * 3 = 15 = 1 mod 7
  CHECK(fp_from_rat(Rat(-1), f7) == 6);
  const FpContext f5(5);
  CHECK_THROWS_AS(fp_from_rat(Rat(1) / 5, f5), std::invalid_argument);

  LieAlgebra::Builder b(3);
  b.add(0, 1, 2, Rat(1) / 5);
  const LieAlgebra L = b.build();
  CHECK_THROWS_AS(reduce_mod_p(L, 5), std::invalid_argument);
  const FpLieAlgebra A = reduce_mod_p(L, 7);
  CHECK(A.p == 7);
  CHECK(A.dim == 3);
  CHECK(A.table.at({0, 1}) ==
        std::vector<std::pair<int, std::uint32_t>>{{2, 3}});
  CHECK(!fp_validate_jacobi(A).has_value());
}

TEST_CASE("mod p linear algebra") {
  const FpContext f7(7);
  FpMat m(3, 4);
  // Rows: (1,2,3,4), (2,4,6,1), (1,2,3,4). Over Q the rank is 2, but over
  // F_7 the second row is 2x the first (8 = 1 mod 7), so the rank drops to 1.
  const std::uint32_t rows[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 1}, {1, 2, 3, 4}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c) m.at(r, c) = rows[r][c];
  FpMat reduced = m;
  CHECK(fp_rref(reduced, f7) == 1);

  const auto kernel = fp_nullspace(m, f7);
  CHECK(kernel.size() == 3);  // 4 columns - rank 1

  FpMat full(2, 3);
  const std::uint32_t rows2[2][3] = {{1, 2, 3}, {0, 1, 5}};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c) full.at(r, c) = rows2[r][c];
  FpMat full_reduced = full;
  CHECK(fp_rref(full_reduced, f7) == 2);
  CHECK(fp_nullspace(full, f7).size() == 1);
  for (const auto& v : kernel) {
    for (int r = 0; r < 3; ++r) {
      std::uint64_t acc = 0;
      for (int c = 0; c < 4; ++c) acc += std::uint64_t(m.at(r, c)) * v[c];
      CHECK(f7.reduce(acc) == 0);
    }
  }
}

TEST_CASE("exhaustive oracle on small algebras") {
  const OracleReport h5 = oracle_aid(heisenberg(), 5);
  CHECK(h5.prime == 5);
  CHECK(h5.dim == 3);
  CHECK(h5.dim_der == 6);
  CHECK(h5.dim_inn == 2);
  CHECK(h5.dim_aid == 2);
  CHECK(h5.early_exit);

  const OracleReport g7 = oracle_aid(g5_6(), 7);
  CHECK(g7.dim_der == 8);
  CHECK(g7.dim_inn == 4);
  CHECK(g7.dim_aid == 5);

  const OracleReport gn3 = oracle_aid(gn_family(2), 3);
  CHECK(gn3.dim_aid - gn3.dim_inn == 2);

  CHECK_THROWS_AS(oracle_aid(abelian(30), 5), std::invalid_argument);
  OracleConfig tight;
  tight.budget = 10;
  CHECK_THROWS_AS(oracle_aid(heisenberg(), 5, tight), std::invalid_argument);
}

TEST_CASE("oracle agrees with the rational computation") {
  const LieAlgebra L = heisenberg();
  const DerivationReport r = compute_report(L);
  const OracleCrossCheck cc = oracle_cross_check(L, {5, 7}, r);
  REQUIRE(cc.entries.size() == 2);
  CHECK(cc.all_match);
  for (const auto& e : cc.entries) {
    CHECK(e.der_matches);
    CHECK(e.inn_matches);
    CHECK(e.aid_matches);
  }

  const LieAlgebra g = g5_3();
  const OracleCrossCheck cg = oracle_cross_check(g, {5}, compute_report(g));
  CHECK(cg.all_match);
  CHECK(cg.entries[0].report.dim_aid == 5);
  CHECK(cg.entries[0].report.dim_der == 10);
}
