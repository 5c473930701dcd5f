#pragma once

#include <string>
#include <vector>

#include "liederiv/lie_algebra.hpp"

namespace liederiv {

/// Bracket-table hypothesis instance linking two non-centralizing partners
/// j, k of basis vector i through target coordinates l (and m). Under the
/// hypotheses the e_i-coefficients produced at e_j and e_k agree for every
/// almost inner derivation.
struct LemmaInstance {
  enum class Kind { TwoTargets, OneTarget };

  Kind kind;
  int i, j, k;
  int l;
  int m;  // only for TwoTargets
};

/// Re-checks every hypothesis of an instance directly against the table.
bool verify_lemma_instance(const LieAlgebra& L, const LemmaInstance& inst);

/// Per-basis-vector result of the fixedness prover.
struct FixedVectorProof {
  enum class Status { TriviallyFixed, LinkedFixed, NotProved };

  struct Entry {
    Status status = Status::NotProved;
    /// Non-centralizing partner indices of e_i.
    std::vector<int> partners;
    /// Verified instances forming a connected graph on the partners.
    std::vector<LemmaInstance> links;
  };

  std::vector<Entry> per_index;

  bool all_fixed() const;
  std::string to_string(const LieAlgebra& L) const;
};

/// Tries to prove each basis vector fixed by every almost inner derivation:
/// trivially when at most one basis partner fails to centralize it, else by
/// linking all partners pairwise through verified table hypotheses. When
/// every basis vector is fixed, every almost inner derivation is inner.
FixedVectorProof fixed_vector_prover(const LieAlgebra& L);

}  // namespace liederiv
