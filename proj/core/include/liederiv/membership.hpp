#pragma once

#include <cstdint>
#include <string>

#include "liederiv/lie_algebra.hpp"
#include "liederiv/matrix.hpp"

namespace liederiv {

/// Configuration for the symbolic pointwise-membership decision procedure.
struct DecideConfig {
  /// Maximum number of case-analysis leaves before giving up.
  long leaf_cap = 4096;
  /// Seed for the counterexample witness search.
  std::uint64_t witness_seed = 1;
  /// Attempts per undecided leaf when searching for a rational witness.
  int witness_attempts = 200;
};

/// Outcome of deciding whether D(x) lies in [g, x] for every x.
struct DecisionOutcome {
  enum class Kind { AlwaysMember, Counterexample, Undecided };

  Kind kind = Kind::Undecided;
  /// Concrete x with D(x) not in [g, x]; set when kind == Counterexample.
  Vec witness;
  /// Human-readable explanation; set when kind == Undecided.
  std::string reason;
  /// Number of case-analysis leaves explored.
  long leaves = 0;
};

/// Exact check of D(x) in [g, x] at a single point x.
bool pointwise_member(const LieAlgebra& L, const Matrix& D, const Vec& x);

/// Decides whether the linear map D satisfies D(x) in [g, x] for all x,
/// by parametric Gaussian elimination on [ad(x) | D x] with symbolic x.
/// Sound in all three outcomes: AlwaysMember and Counterexample are proofs,
/// Undecided only reports failure to decide.
DecisionOutcome decide_pointwise_membership(const LieAlgebra& L,
                                            const Matrix& D,
                                            const DecideConfig& config = {});

}  // namespace liederiv
