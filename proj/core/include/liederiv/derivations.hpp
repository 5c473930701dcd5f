#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "liederiv/certificate.hpp"
#include "liederiv/lie_algebra.hpp"
#include "liederiv/matrix.hpp"
#include "liederiv/membership.hpp"
#include "liederiv/subspace.hpp"

namespace liederiv {

struct DerivationConfig {
  std::uint64_t seed = 0;
  /// Leaf cap handed to the symbolic decision procedure.
  long depth_cap = 4096;
  /// Consecutive unproductive random sample batches before stopping.
  int settled_batches = 2;
  int max_random_batches = 64;
  bool enable_certificate_search = true;
  bool enable_decision_fallback = true;
};

enum class GeneratorStatus { CertifiedByFormula, CertifiedByDecision, Unverified };

/// A generator of the candidate complement of Inn inside AID.
struct NonInnerGenerator {
  Matrix matrix;
  GeneratorStatus status = GeneratorStatus::Unverified;
  std::optional<PiecewiseCertificate> certificate;
  bool nilpotent = false;
};

enum class AidStatus { Exact, Bracketed };

struct DerivationReport {
  int dim = 0;
  Subspace der;
  Subspace inn;
  /// Exact when every complement generator of the upper bound is certified
  /// almost inner; then aid == aid_lower.
  AidStatus status = AidStatus::Bracketed;
  Subspace aid;        // upper bound; the exact space when status == Exact
  Subspace aid_lower;  // certified lower bound, contains inn
  Subspace caid;       // computed from aid by the linear characterization
  Subspace caid_lower;
  std::vector<NonInnerGenerator> non_inner;
  /// true when AID is verified closed under bracketing with all of Der.
  std::optional<bool> aid_ideal_in_der;
  long samples_used = 0;

  DerivationReport()
      : der(0), inn(0), aid(0), aid_lower(0), caid(0), caid_lower(0) {}
};

/// Derivation algebra as a subspace of gl(g), matrices flattened row-major.
Subspace compute_der(const LieAlgebra& L);

/// Inner derivations ad(x), flattened row-major.
Subspace compute_inn(const LieAlgebra& L);

struct AidResult {
  Subspace aid;        // upper bound
  Subspace aid_lower;  // certified lower bound
  AidStatus status = AidStatus::Bracketed;
  std::vector<NonInnerGenerator> non_inner;
  long samples_used = 0;

  AidResult() : aid(0), aid_lower(0) {}
};

/// Sandwich computation of the almost inner derivations: an upper bound from
/// necessary pointwise membership constraints, and a lower bound from Inn
/// plus certified complement generators. Exact when the two meet.
AidResult compute_aid(const LieAlgebra& L, const Subspace& der,
                      const Subspace& inn, const DerivationConfig& config = {});

/// Central almost inner derivations via the linear characterization
/// CAID = AID intersect (Inn + {D in Der : im D inside Z(g)}).
Subspace compute_caid(const LieAlgebra& L, const Subspace& der,
                      const Subspace& inn, const Subspace& aid);

DerivationReport compute_report(const LieAlgebra& L,
                                const DerivationConfig& config = {});

/// Verifies [Der, AID] inside AID on basis pairs.
bool check_ideal_in_der(const LieAlgebra& L, const Subspace& der,
                        const Subspace& aid);

/// Searches for a chain-shaped piecewise certificate that D is almost inner.
/// Any returned certificate has been verified.
std::optional<PiecewiseCertificate> search_certificate(const LieAlgebra& L,
                                                       const Matrix& D);

/// Induced map on a quotient by an ideal; throws std::invalid_argument when
/// D does not preserve the ideal.
Matrix induce_on_quotient(const Quotient& q, const Subspace& ideal,
                          const Matrix& D);

}  // namespace liederiv
