#include "liederiv/oracle.hpp"

#include <stdexcept>
#include <utility>

namespace liederiv {

namespace {

using U32 = std::uint32_t;
using U64 = std::uint64_t;
using Basis = std::vector<std::vector<U32>>;  // flattened n x n matrices

struct Enumerator {
  const FpLieAlgebra& A;
  FpContext fp;
  int n;

  std::vector<FpMat> adp;       // ad matrices of the basis vectors
  std::vector<int> support;     // rows hit by some bracket
  std::vector<int> row_of;      // dense row index within support, else -1
  Basis basis;                  // current upper-bound basis
  int dim_inn = 0;
  unsigned long long points = 0;
  bool early_exit = false;

  explicit Enumerator(const FpLieAlgebra& a)
      : A(a), fp(a.p), n(a.dim), row_of(std::size_t(a.dim), -1) {
    adp.assign(std::size_t(n), FpMat(n, n));
    std::vector<char> hit(std::size_t(n), 0);
    for (const auto& [pair, terms] : A.table) {
      auto [i, j] = pair;
      for (const auto& [k, c] : terms) {
        adp[std::size_t(i)].at(k, j) = fp.add(adp[std::size_t(i)].at(k, j), c);
        adp[std::size_t(j)].at(k, i) = fp.sub(adp[std::size_t(j)].at(k, i), c);
        hit[std::size_t(k)] = 1;
      }
    }
    for (int k = 0; k < n; ++k) {
      if (hit[std::size_t(k)]) {
        row_of[std::size_t(k)] = int(support.size());
        support.push_back(k);
      }
    }
  }

  Basis derivation_basis() const {
    // Every pair i < j constrains D, also when [e_i, e_j] = 0: the equation
    // is D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j] = 0 coordinatewise.
    int pairs = n * (n - 1) / 2;
    FpMat sys(pairs == 0 ? 1 : pairs * n, n * n);
    int r = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = 0; k < n; ++k, ++r) {
          for (int m = 0; m < n; ++m) {
            U32 c = adp[std::size_t(i)].at(m, j);  // c_{ij}^m
            if (c) {
              int idx = k * n + m;
              sys.at(r, idx) = fp.add(sys.at(r, idx), c);
            }
          }
          for (int a = 0; a < n; ++a) {
            U32 t = adp[std::size_t(j)].at(k, a);
            if (t) {
              int idx = a * n + i;
              sys.at(r, idx) = fp.add(sys.at(r, idx), t);
            }
          }
          for (int b = 0; b < n; ++b) {
            U32 t = adp[std::size_t(i)].at(k, b);
            if (t) {
              int idx = b * n + j;
              sys.at(r, idx) = fp.sub(sys.at(r, idx), t);
            }
          }
        }
      }
    }
    return fp_nullspace(sys, fp);
  }

  int inner_rank() const {
    FpMat m(n, n * n);
    for (int i = 0; i < n; ++i) {
      for (int t = 0; t < n * n; ++t) {
        m.at(i, t) = adp[std::size_t(i)].a[std::size_t(t)];
      }
    }
    FpMat copy = m;
    return fp_rref(copy, fp);
  }

  /// Replaces the basis by the combinations annihilating every constraint
  /// row; returns true when the basis shrank.
  bool shrink(const std::vector<std::vector<U32>>& constraint_rows) {
    if (constraint_rows.empty()) return false;
    std::size_t u = basis.size();
    FpMat cons(int(constraint_rows.size()), int(u));
    for (std::size_t r = 0; r < constraint_rows.size(); ++r) {
      for (std::size_t k = 0; k < u; ++k) {
        cons.at(int(r), int(k)) = constraint_rows[r][k];
      }
    }
    auto combos = fp_nullspace(cons, fp);
    if (combos.size() == u) return false;
    Basis next;
    for (const auto& combo : combos) {
      std::vector<U32> v(std::size_t(n) * n, 0);
      for (std::size_t k = 0; k < u; ++k) {
        if (combo[k] == 0) continue;
        U64 c = combo[k];
        for (std::size_t t = 0; t < v.size(); ++t) {
          v[t] = fp.reduce(v[t] + c * basis[k][t]);
        }
      }
      next.push_back(std::move(v));
    }
    basis = std::move(next);
    return true;
  }

  /// Membership constraint at x for the full-row scratch (pre-pass).
  void constrain_full(const std::vector<U32>& x) {
    std::size_t u = basis.size();
    if (u == 0) return;
    int width = n + int(u);
    FpMat s(n, width);
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        U64 acc = 0;
        for (int i = 0; i < n; ++i) {
          if (x[std::size_t(i)]) {
            acc += U64(x[std::size_t(i)]) * adp[std::size_t(i)].at(k, j);
          }
        }
        s.at(k, j) = fp.reduce(acc);
      }
      for (std::size_t m = 0; m < u; ++m) {
        U64 acc = 0;
        for (int j = 0; j < n; ++j) {
          if (x[std::size_t(j)]) {
            acc += U64(x[std::size_t(j)]) * basis[m][std::size_t(k * n + j)];
          }
        }
        s.at(k, n + int(m)) = fp.reduce(acc);
      }
    }
    eliminate_and_shrink(s, n, width);
  }

  void eliminate_and_shrink(FpMat& s, int rows, int width) {
    std::size_t u = basis.size();
    std::vector<char> used(std::size_t(rows), 0);
    for (int c = 0; c < n; ++c) {
      int pr = -1;
      for (int r = 0; r < rows; ++r) {
        if (!used[std::size_t(r)] && s.at(r, c) != 0) {
          pr = r;
          break;
        }
      }
      if (pr < 0) continue;
      used[std::size_t(pr)] = 1;
      U64 piv = s.at(pr, c);
      for (int r = 0; r < rows; ++r) {
        if (used[std::size_t(r)] || s.at(r, c) == 0) continue;
        U64 f = fp.p() - s.at(r, c);
        for (int j = c; j < width; ++j) {
          s.at(r, j) = fp.reduce(piv * s.at(r, j) + f * s.at(pr, j));
        }
      }
    }
    std::vector<std::vector<U32>> violated;
    for (int r = 0; r < rows; ++r) {
      if (used[std::size_t(r)]) continue;
      bool nonzero = false;
      for (std::size_t k = 0; k < u && !nonzero; ++k) {
        if (s.at(r, n + int(k)) != 0) nonzero = true;
      }
      if (nonzero) {
        std::vector<U32> row(u);
        for (std::size_t k = 0; k < u; ++k) row[k] = s.at(r, n + int(k));
        violated.push_back(std::move(row));
      }
    }
    shrink(violated);
  }

  void run(OracleReport& out) {
    // Pre-pass at the basis vectors; afterwards every matrix left in the
    // bound vanishes on all rows outside the bracket support, so the main
    // loop only tracks supported rows.
    for (int b = 0; b < n && int(basis.size()) > dim_inn; ++b) {
      std::vector<U32> x(std::size_t(n), 0);
      x[std::size_t(b)] = 1;
      constrain_full(x);
      ++points;
    }
    if (int(basis.size()) <= dim_inn) {
      early_exit = true;
      out.points = points;
      return;
    }

    int m = int(support.size());
    const U32 p = fp.p();

    // Sparse +1-in-coordinate-b deltas for the restricted ad(x).
    struct Delta {
      int flat;  // row-in-support * n + col
      U32 val;
    };
    std::vector<std::vector<Delta>> ad_delta(static_cast<std::size_t>(n));
    for (const auto& [pair, terms] : A.table) {
      auto [i, j] = pair;
      for (const auto& [k, c] : terms) {
        int rk = row_of[std::size_t(k)];
        ad_delta[std::size_t(i)].push_back({rk * n + j, c});
        ad_delta[std::size_t(j)].push_back({rk * n + i, fp.neg(c)});
      }
    }

    std::vector<U32> adx(std::size_t(m) * n);
    std::vector<U32> w;            // u columns of length m
    std::vector<U32> mcol;         // per (k, b): column b of M_k on support
    std::vector<U32> x(std::size_t(n), 0);
    std::size_t u = basis.size();

    auto rebuild_mcol = [&]() {
      u = basis.size();
      mcol.assign(u * std::size_t(n) * m, 0);
      for (std::size_t k = 0; k < u; ++k) {
        for (int b = 0; b < n; ++b) {
          for (int r = 0; r < m; ++r) {
            mcol[(k * std::size_t(n) + std::size_t(b)) * std::size_t(m) +
                 std::size_t(r)] =
                basis[k][std::size_t(support[std::size_t(r)] * n + b)];
          }
        }
      }
    };
    auto recompute_state = [&]() {
      std::fill(adx.begin(), adx.end(), 0);
      for (int b = 0; b < n; ++b) {
        U64 xv = x[std::size_t(b)];
        if (!xv) continue;
        for (const Delta& d : ad_delta[std::size_t(b)]) {
          adx[std::size_t(d.flat)] =
              fp.reduce(adx[std::size_t(d.flat)] + xv * d.val);
        }
      }
      w.assign(u * std::size_t(m), 0);
      for (std::size_t k = 0; k < u; ++k) {
        for (int b = 0; b < n; ++b) {
          U64 xv = x[std::size_t(b)];
          if (!xv) continue;
          const U32* col =
              &mcol[(k * std::size_t(n) + std::size_t(b)) * std::size_t(m)];
          U32* wk = &w[k * std::size_t(m)];
          for (int r = 0; r < m; ++r) {
            wk[r] = fp.reduce(wk[r] + xv * col[r]);
          }
        }
      }
    };
    auto apply_delta = [&](int b) {
      // Every odometer digit change is +1 mod p, including the wrap.
      for (const Delta& d : ad_delta[std::size_t(b)]) {
        adx[std::size_t(d.flat)] = fp.add(adx[std::size_t(d.flat)], d.val);
      }
      for (std::size_t k = 0; k < u; ++k) {
        const U32* col =
            &mcol[(k * std::size_t(n) + std::size_t(b)) * std::size_t(m)];
        U32* wk = &w[k * std::size_t(m)];
        for (int r = 0; r < m; ++r) wk[r] = fp.add(wk[r], col[r]);
      }
    };

    rebuild_mcol();
    std::vector<U32> scratch;
    std::vector<char> used;
    std::vector<std::vector<U32>> violated;

    for (int lead = 0; lead < n; ++lead) {
      std::fill(x.begin(), x.end(), 0);
      x[std::size_t(lead)] = 1;
      recompute_state();
      for (;;) {
        // Check the current point.
        int width = n + int(u);
        scratch.assign(std::size_t(m) * std::size_t(width), 0);
        for (int r = 0; r < m; ++r) {
          U32* row = &scratch[std::size_t(r) * std::size_t(width)];
          const U32* arow = &adx[std::size_t(r) * std::size_t(n)];
          for (int j = 0; j < n; ++j) row[j] = arow[j];
          for (std::size_t k = 0; k < u; ++k) {
            row[n + int(k)] = w[k * std::size_t(m) + std::size_t(r)];
          }
        }
        used.assign(std::size_t(m), 0);
        for (int c = 0; c < n; ++c) {
          int pr = -1;
          for (int r = 0; r < m; ++r) {
            if (!used[std::size_t(r)] &&
                scratch[std::size_t(r) * std::size_t(width) + std::size_t(c)]) {
              pr = r;
              break;
            }
          }
          if (pr < 0) continue;
          used[std::size_t(pr)] = 1;
          const U32* prow = &scratch[std::size_t(pr) * std::size_t(width)];
          U64 piv = prow[c];
          for (int r = 0; r < m; ++r) {
            if (used[std::size_t(r)]) continue;
            U32* row = &scratch[std::size_t(r) * std::size_t(width)];
            if (row[c] == 0) continue;
            U64 f = p - row[c];
            for (int j = c; j < width; ++j) {
              row[j] = fp.reduce(piv * row[j] + f * prow[j]);
            }
          }
        }
        violated.clear();
        for (int r = 0; r < m; ++r) {
          if (used[std::size_t(r)]) continue;
          const U32* row = &scratch[std::size_t(r) * std::size_t(width)];
          bool nonzero = false;
          for (std::size_t k = 0; k < u && !nonzero; ++k) {
            if (row[n + int(k)]) nonzero = true;
          }
          if (nonzero) {
            violated.emplace_back(row + n, row + width);
          }
        }
        ++points;
        if (!violated.empty() && shrink(violated)) {
          if (int(basis.size()) <= dim_inn) {
            early_exit = true;
            out.points = points;
            return;
          }
          rebuild_mcol();
          recompute_state();
        }

        // Odometer over the digits after the leading 1.
        int pos = n - 1;
        while (pos > lead && x[std::size_t(pos)] == p - 1) {
          x[std::size_t(pos)] = 0;
          apply_delta(pos);
          --pos;
        }
        if (pos == lead) break;
        x[std::size_t(pos)] += 1;
        apply_delta(pos);
      }
    }
    out.points = points;
  }
};

}  // namespace

OracleReport oracle_aid(const FpLieAlgebra& A, const OracleConfig& config) {
  OracleReport out;
  out.prime = A.p;
  out.dim = A.dim;
  unsigned long long total = 1;
  for (int i = 0; i < A.dim; ++i) {
    if (total > config.budget / A.p) {
      throw std::invalid_argument(
          "enumeration budget exceeded: p^dim > " +
          std::to_string(config.budget));
    }
    total *= A.p;
  }

  Enumerator e(A);
  e.basis = e.derivation_basis();
  e.dim_inn = e.inner_rank();
  out.dim_der = int(e.basis.size());
  out.dim_inn = e.dim_inn;
  if (out.dim_der > out.dim_inn) {
    e.run(out);
  }
  out.dim_aid = int(e.basis.size());
  out.points = e.points;
  out.early_exit = e.early_exit;
  return out;
}

OracleReport oracle_aid(const LieAlgebra& L, std::uint32_t p,
                        const OracleConfig& config) {
  return oracle_aid(reduce_mod_p(L, p), config);
}

OracleCrossCheck oracle_cross_check(const LieAlgebra& L,
                                    const std::vector<std::uint32_t>& primes,
                                    const DerivationReport& rational,
                                    const OracleConfig& config) {
  OracleCrossCheck out;
  out.all_match = true;
  for (std::uint32_t p : primes) {
    OracleCrossCheck::Entry entry;
    entry.report = oracle_aid(L, p, config);
    entry.der_matches = entry.report.dim_der == rational.der.dim();
    entry.inn_matches = entry.report.dim_inn == rational.inn.dim();
    entry.aid_matches = entry.report.dim_aid == rational.aid.dim();
    if (!entry.der_matches || !entry.inn_matches || !entry.aid_matches) {
      out.all_match = false;
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

}  // namespace liederiv
