#pragma once

#include <string>
#include <vector>

#include "liederiv/lie_algebra.hpp"
#include "liederiv/matrix.hpp"
#include "liederiv/poly.hpp"

namespace liederiv {

/// One case of a piecewise rational section: on the region where every
/// zero_condition vanishes and every nonzero_condition does not, the map
/// phi(x) = phi_numerators / phi_denominator satisfies D(x) = [x, phi(x)].
struct CertificatePiece {
  std::vector<Poly> zero_conditions;
  std::vector<Poly> nonzero_conditions;
  std::vector<Poly> phi_numerators;  // one per basis coordinate
  Poly phi_denominator;
};

/// Chain-shaped piecewise certificate that D(x) lies in [g, x] for all x:
/// piece k is guarded by the failure of the guards of pieces 0..k-1 plus its
/// own nonzero condition, and the last piece has no nonzero condition, so
/// the pieces cover the whole space.
struct PiecewiseCertificate {
  int nvars = 0;
  std::vector<CertificatePiece> pieces;

  /// Pretty rendering; uses the algebra's basis labels when given.
  std::string to_string(const LieAlgebra* L = nullptr) const;
};

/// Checks a certificate against D. Structural defects (cases that do not
/// cover, an unjustified denominator, a non-affine case condition) throw
/// std::invalid_argument; a well-formed certificate whose identity
/// phi_denominator * D(x) = [x, phi_numerators(x)] fails returns false.
bool verify_certificate(const LieAlgebra& L, const Matrix& D,
                        const PiecewiseCertificate& cert);

}  // namespace liederiv
