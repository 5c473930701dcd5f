#pragma once

#include <cstdint>
#include <vector>

#include "liederiv/derivations.hpp"
#include "liederiv/fp.hpp"
#include "liederiv/lie_algebra.hpp"

namespace liederiv {

struct OracleConfig {
  /// Refuses to enumerate when p^dim exceeds this.
  unsigned long long budget = 10'000'000;
};

/// Result of exhaustively computing AID over F_p.
struct OracleReport {
  std::uint32_t prime = 0;
  int dim = 0;
  int dim_der = 0;
  int dim_inn = 0;
  int dim_aid = 0;
  /// Projective sample points processed before finishing or early exit.
  unsigned long long points = 0;
  /// True when the bound collapsed onto Inn before the enumeration ended.
  bool early_exit = false;
};

/// Exhaustive AID over F_p: every nonzero point of F_p^dim contributes its
/// membership constraint (one representative per projective line suffices,
/// since the constraint is scale-invariant). Throws std::invalid_argument
/// when p^dim exceeds the budget or p divides a structure-constant
/// denominator.
OracleReport oracle_aid(const FpLieAlgebra& A, const OracleConfig& config = {});
OracleReport oracle_aid(const LieAlgebra& L, std::uint32_t p,
                        const OracleConfig& config = {});

struct OracleCrossCheck {
  struct Entry {
    OracleReport report;
    bool der_matches = false;
    bool inn_matches = false;
    bool aid_matches = false;
  };
  std::vector<Entry> entries;
  bool all_match = false;
};

/// Compares the mod-p dimensions against a rational report. Dimensions over
/// F_p can legitimately differ from the rational ones at unlucky primes, so
/// a mismatch is evidence to investigate, not automatically an error.
OracleCrossCheck oracle_cross_check(const LieAlgebra& L,
                                    const std::vector<std::uint32_t>& primes,
                                    const DerivationReport& rational,
                                    const OracleConfig& config = {});

}  // namespace liederiv
