#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "liederiv/certificate.hpp"
#include "liederiv/families.hpp"
#include "liederiv/membership.hpp"

using namespace liederiv;

namespace {
Matrix unit(int n, int r, int c) {
  Matrix m(n, n);
  m.at(r, c) = 1;
  return m;
}
}  // namespace

TEST_CASE("pointwise membership at single points") {
  const LieAlgebra L = g5_6();
  const Matrix D = unit(5, 4, 1);  // e2 -> e5
  // D(e2) = e5 lies in [g, e2] = <e3, e5>.
  CHECK(pointwise_member(L, D, L.basis_vector(1)));
  // At e4, D vanishes and membership is trivial.
  CHECK(pointwise_member(L, D, L.basis_vector(3)));
}

TEST_CASE("decision: E_{5,2} is almost inner on g5_6") {
  const DecisionOutcome out =
      decide_pointwise_membership(g5_6(), unit(5, 4, 1));
  CHECK(out.kind == DecisionOutcome::Kind::AlwaysMember);
  CHECK(out.leaves > 0);
}

TEST_CASE("decision: E_{5,3} is almost inner on g5_3") {
  const DecisionOutcome out =
      decide_pointwise_membership(g5_3(), unit(5, 4, 2));
  CHECK(out.kind == DecisionOutcome::Kind::AlwaysMember);
}

TEST_CASE("decision: inner maps always pass") {
  const LieAlgebra L = g5_3();
  const Vec v = {Rat(1), Rat(-2), Rat(0), Rat(3), Rat(1)};
  const DecisionOutcome out = decide_pointwise_membership(L, L.ad(v));
  CHECK(out.kind == DecisionOutcome::Kind::AlwaysMember);
}

TEST_CASE("decision: counterexample on the Heisenberg algebra") {
  const LieAlgebra L = heisenberg();
  const Matrix D = unit(3, 1, 0);  // e1 -> e2, but [g, e1] = <e3>
  const DecisionOutcome out = decide_pointwise_membership(L, D);
  REQUIRE(out.kind == DecisionOutcome::Kind::Counterexample);
  CHECK(!pointwise_member(L, D, out.witness));
}

TEST_CASE("decision respects the leaf cap") {
  DecideConfig cfg;
  cfg.leaf_cap = 0;
  const DecisionOutcome out =
      decide_pointwise_membership(g5_6(), unit(5, 4, 1), cfg);
  CHECK(out.kind == DecisionOutcome::Kind::Undecided);
  CHECK(!out.reason.empty());
}

TEST_CASE("hand-written certificate for g5_6 verifies") {
  const LieAlgebra L = g5_6();
  const Matrix D = unit(5, 4, 1);
  const int n = 5;

  // Off {x1 = 0}: D(x) = x2 e5 = [x, (x2/x1) e4]; on it, [x, e3] = x2 e5.
  PiecewiseCertificate cert;
  cert.nvars = n;
  CertificatePiece main;
  main.nonzero_conditions = {Poly::var(0, n)};
  main.phi_numerators.assign(5, Poly(n));
  main.phi_numerators[3] = Poly::var(1, n);
  main.phi_denominator = Poly::var(0, n);
  CertificatePiece rest;
  rest.zero_conditions = {Poly::var(0, n)};
  rest.phi_numerators.assign(5, Poly(n));
  rest.phi_numerators[2] = Poly::constant(Rat(1), n);
  rest.phi_denominator = Poly::constant(Rat(1), n);
  cert.pieces = {main, rest};
  CHECK(verify_certificate(L, D, cert));

  // A wrong numerator is caught.
  PiecewiseCertificate broken = cert;
  broken.pieces[0].phi_numerators[3] = Poly::var(2, n);
  CHECK(!verify_certificate(L, D, broken));

  // Structural defects throw instead of returning false.
  PiecewiseCertificate malformed = cert;
  malformed.pieces[0].nonzero_conditions.clear();
  CHECK_THROWS_AS(verify_certificate(L, D, malformed), std::invalid_argument);

  PiecewiseCertificate wrong_vars = cert;
  wrong_vars.nvars = 4;
  CHECK_THROWS_AS(verify_certificate(L, D, wrong_vars), std::invalid_argument);
}

TEST_CASE("decision agrees with sampling") {
  const LieAlgebra L = g5_6();
  const Matrix D = unit(5, 4, 1);
  REQUIRE(decide_pointwise_membership(L, D).kind ==
          DecisionOutcome::Kind::AlwaysMember);
  // Spot checks on a few non-generic points.
  for (const Vec& x :
       {Vec{Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)},
        Vec{Rat(0), Rat(0), Rat(1), Rat(1), Rat(1)},
        Vec{Rat(2), Rat(-3), Rat(5), Rat(7), Rat(-1)}}) {
    CHECK(pointwise_member(L, D, x));
  }
}
