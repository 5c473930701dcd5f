#include "liederiv/membership.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "liederiv/context.hpp"
#include "liederiv/poly.hpp"
#include "liederiv/rng.hpp"
#include "liederiv/subspace.hpp"

namespace liederiv {

bool pointwise_member(const LieAlgebra& L, const Matrix& D, const Vec& x) {
  return column_space(L.ad(x)).contains(D.apply(x));
}

namespace {

using ParamMat = std::vector<std::vector<Poly>>;

/// Multiplies a row by the inverse of its rational content, then divides out
/// every region-nonzero polynomial factor that divides all entries from
/// from_col on. Entries left of from_col vanish on the region, so leaving
/// them unscaled does not change the row as a function there.
void normalize_row(std::vector<Poly>& row, int from_col,
                   const ConstraintContext& ctx) {
  int cols = int(row.size());
  Int num_gcd = 0, den_lcm = 1;
  for (int c = from_col; c < cols; ++c) {
    for (const auto& [mono, coeff] : row[c].terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
              coeff.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
              coeff.get_den().get_mpz_t());
    }
  }
  if (num_gcd == 0) return;  // suffix is identically zero
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (scale != 1) {
    for (int c = from_col; c < cols; ++c) row[c] = row[c] * scale;
  }
  for (const Poly& q : ctx.inequations()) {
    if (q.is_constant()) continue;
    for (;;) {
      std::vector<std::pair<int, Poly>> quotients;
      bool all = true;
      for (int c = from_col; c < cols && all; ++c) {
        if (row[c].is_zero()) continue;
        auto d = row[c].divide_exact(q);
        if (!d) {
          all = false;
        } else {
          quotients.emplace_back(c, std::move(*d));
        }
      }
      if (!all || quotients.empty()) break;
      for (auto& [c, quo] : quotients) row[c] = std::move(quo);
    }
  }
}

struct Search {
  const LieAlgebra& L;
  const Matrix& D;
  const DecideConfig& config;
  int n;

  long leaves = 0;
  bool capped = false;
  std::vector<std::string> undecided_reasons;
  std::optional<Vec> counterexample;

  bool bump_leaf() {
    ++leaves;
    if (leaves > config.leaf_cap) capped = true;
    return capped;
  }

  /// Eliminates column col using row r (entry q, nonzero on the region) in
  /// all other non-used rows.
  void do_pivot(ParamMat& m, std::vector<char>& used, int r, int col,
                const Poly& q, const ConstraintContext& ctx) const {
    m[r][col] = q;
    for (int s = 0; s < n; ++s) {
      if (used[s] || s == r) continue;
      const Poly e = m[s][col];
      if (ctx.is_zero_mod(e)) continue;
      for (int c = col + 1; c <= n; ++c) {
        m[s][c] = m[s][c] * q - m[r][c] * e;
      }
      m[s][col] = Poly(q.nvars());
      normalize_row(m[s], col + 1, ctx);
    }
    used[r] = 1;
  }

  std::optional<Vec> find_witness(const ConstraintContext& ctx,
                                  const Poly& residual) const {
    std::vector<int> free = ctx.free_variables();
    SplitMix64 rng(config.witness_seed * 0x2545f4914f6cdd1dULL + 1);
    for (int attempt = 0; attempt < config.witness_attempts; ++attempt) {
      int span = 4 + attempt / 8;
      std::map<int, Rat> assign;
      for (int v : free) assign[v] = Rat(rng.uniform(-span, span));
      Vec point = ctx.materialize(assign);
      if (is_zero(residual.eval(point))) continue;
      bool on_region = true;
      for (const Poly& q : ctx.inequations()) {
        if (is_zero(q.eval(point))) { on_region = false; break; }
      }
      if (!on_region && attempt < config.witness_attempts / 2) continue;
      if (!pointwise_member(L, D, point)) return point;
    }
    return std::nullopt;
  }

  /// Leaf of the case analysis: every coefficient column is processed, so a
  /// non-used row reads (0, ..., 0, residual) on the region.
  bool leaf(const ParamMat& m, const ConstraintContext& ctx,
            const std::vector<char>& used) {
    if (bump_leaf()) return true;
    std::vector<Poly> failing;
    for (int r = 0; r < n; ++r) {
      if (used[r]) continue;
      if (!ctx.is_zero_mod(m[r][n])) failing.push_back(ctx.reduce(m[r][n]));
    }
    if (failing.empty()) return false;
    for (const Poly& residual : failing) {
      if (auto w = find_witness(ctx, residual)) {
        counterexample = std::move(*w);
        return true;
      }
    }
    undecided_reasons.push_back("no rational witness found on region " +
                                ctx.to_string());
    return false;
  }

  /// Returns true when the search should stop (counterexample or cap).
  /// Invariant: non-used rows vanish on the region in all columns < col.
  bool explore(ParamMat m, ConstraintContext ctx, int col,
               std::vector<char> used, int start_row) {
    if (capped) return true;
    bool aug_zero = true;
    for (int r = 0; r < n && aug_zero; ++r) {
      if (!used[r] && !ctx.is_zero_mod(m[r][n])) aug_zero = false;
    }
    if (aug_zero) return bump_leaf();
    if (col >= n) return leaf(m, ctx, used);

    for (int r = start_row; r < n; ++r) {
      if (used[r]) continue;
      Poly q = ctx.reduce(m[r][col]);
      if (ctx.is_zero_mod(q)) continue;
      if (q.is_constant() || ctx.known_nonzero(q)) {
        do_pivot(m, used, r, col, q, ctx);
        return explore(std::move(m), std::move(ctx), col + 1,
                       std::move(used), 0);
      }

      // Region dichotomy on q via its factors: either all factors are
      // nonzero (pivot), or some factor vanishes while the earlier ones do
      // not. The sub-regions cover the region and are pairwise disjoint.
      auto [vars, prim] = q.split_monomial_factors();
      std::vector<Poly> factors;
      std::sort(vars.begin(), vars.end());
      vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
      for (int v : vars) factors.push_back(Poly::var(v, q.nvars()));
      if (!prim.is_constant()) factors.push_back(prim.normalized());

      {
        ConstraintContext branch = ctx;
        bool feasible = true;
        for (const Poly& f : factors) {
          if (branch.add_inequation(f) ==
              ConstraintContext::AddResult::Infeasible) {
            feasible = false;
            break;
          }
        }
        if (feasible) {
          ParamMat m2 = m;
          std::vector<char> used2 = used;
          do_pivot(m2, used2, r, col, q, branch);
          if (explore(std::move(m2), std::move(branch), col + 1,
                      std::move(used2), 0)) {
            return true;
          }
        } else if (bump_leaf()) {
          return true;
        }
      }

      for (std::size_t t = 0; t < factors.size(); ++t) {
        ConstraintContext branch = ctx;
        bool feasible = true;
        for (std::size_t u = 0; u < t && feasible; ++u) {
          feasible = branch.add_inequation(factors[u]) ==
                     ConstraintContext::AddResult::Ok;
        }
        if (feasible) {
          feasible = branch.add_equality(factors[t]) ==
                     ConstraintContext::AddResult::Ok;
        }
        if (!feasible) {
          if (bump_leaf()) return true;
          continue;
        }
        ParamMat m3 = m;
        for (int s = 0; s < n; ++s) {
          if (used[s]) continue;
          for (int c = col; c <= n; ++c) m3[s][c] = branch.reduce(m3[s][c]);
          normalize_row(m3[s], col, branch);
        }
        // Row r's entry now vanishes; entries of earlier rows stayed zero
        // on the shrunken region, so the scan resumes below r.
        if (explore(std::move(m3), std::move(branch), col, used, r + 1)) {
          return true;
        }
      }
      return false;
    }
    return explore(std::move(m), std::move(ctx), col + 1, std::move(used), 0);
  }
};

}  // namespace

DecisionOutcome decide_pointwise_membership(const LieAlgebra& L,
                                            const Matrix& D,
                                            const DecideConfig& config) {
  int n = L.dim();
  DecisionOutcome out;
  if (n == 0) {
    out.kind = DecisionOutcome::Kind::AlwaysMember;
    return out;
  }

  // System [A(x) | b(x)]: column j of A is ad-action on e_j contracted with
  // x, i.e. A(x) e_j = [x, e_j]; b(x) = D x. Membership of b(x) in the
  // column space of A(x) for all x is the property being decided.
  ParamMat m(n, std::vector<Poly>(n + 1, Poly(n)));
  for (const auto& [pair, terms] : L.table()) {
    auto [i, j] = pair;
    for (const auto& [k, c] : terms) {
      // [x, e_j] picks up c * x_i, and [x, e_i] picks up -c * x_j.
      m[k][j] = m[k][j] + Poly::var(i, n) * c;
      m[k][i] = m[k][i] - Poly::var(j, n) * c;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      const Rat& d = D.at(k, j);
      if (!is_zero(d)) m[k][n] = m[k][n] + Poly::var(j, n) * d;
    }
  }

  Search search{L, D, config, n, 0, false, {}, std::nullopt};
  search.explore(std::move(m), ConstraintContext(n), 0,
                 std::vector<char>(n, 0), 0);

  out.leaves = search.leaves;
  if (search.counterexample) {
    out.kind = DecisionOutcome::Kind::Counterexample;
    out.witness = std::move(*search.counterexample);
    return out;
  }
  if (search.capped) {
    out.kind = DecisionOutcome::Kind::Undecided;
    out.reason = "leaf cap exceeded";
    return out;
  }
  if (!search.undecided_reasons.empty()) {
    out.kind = DecisionOutcome::Kind::Undecided;
    out.reason = search.undecided_reasons.front();
    return out;
  }
  out.kind = DecisionOutcome::Kind::AlwaysMember;
  return out;
}

}  // namespace liederiv
