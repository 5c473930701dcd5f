#include "liederiv/derivations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "liederiv/rng.hpp"

namespace liederiv {

namespace {

Rat dot(const Vec& a, const Vec& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
  }
  return s;
}

}  // namespace

Subspace compute_der(const LieAlgebra& L) {
  int n = L.dim();
  RowEchelon sys(n * n);
  // D is a derivation iff D[e_i,e_j] = [D e_i, e_j] + [e_i, D e_j] for all
  // i < j; each (i, j, k) coordinate gives one linear row in the entries of D.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Matrix& adi = L.ad(i);
      const Matrix& adj = L.ad(j);
      Vec cij = L.bracket_basis(i, j);
      for (int k = 0; k < n; ++k) {
        Vec row(std::size_t(n) * n, Rat(0));
        bool nonzero = false;
        for (int m = 0; m < n; ++m) {
          if (!is_zero(cij[std::size_t(m)])) {
            row[std::size_t(k) * n + m] += cij[std::size_t(m)];
            nonzero = true;
          }
        }
        for (int a = 0; a < n; ++a) {
          // -[D e_i, e_j]_k contributes +ad(e_j)(k, a) at D(a, i); the sign
          // flip absorbs [e_a, e_j] = -ad(e_j) e_a.
          const Rat& t = adj.at(k, a);
          if (!is_zero(t)) {
            row[std::size_t(a) * n + i] += t;
            nonzero = true;
          }
        }
        for (int b = 0; b < n; ++b) {
          const Rat& t = adi.at(k, b);
          if (!is_zero(t)) {
            row[std::size_t(b) * n + j] -= t;
            nonzero = true;
          }
        }
        if (nonzero) sys.insert(std::move(row));
      }
    }
  }
  return Subspace::span(n * n, sys.kernel());
}

Subspace compute_inn(const LieAlgebra& L) {
  int n = L.dim();
  std::vector<Vec> gens;
  for (int i = 0; i < n; ++i) gens.push_back(L.ad(i).flatten());
  return Subspace::span(n * n, gens);
}

namespace {

/// Upper-bound state of the sandwich: the subspace U of gl(g) cut out by the
/// pointwise membership constraints applied so far, always containing AID.
struct UpperBound {
  const LieAlgebra& L;
  int n;
  Subspace usub;
  std::vector<Matrix> basis;
  long samples_used = 0;

  UpperBound(const LieAlgebra& l, const Subspace& start)
      : L(l), n(l.dim()), usub(start) {
    rebuild();
  }

  void rebuild() {
    basis.clear();
    for (const Vec& row : usub.basis()) {
      basis.push_back(vec_to_matrix(row, n, n));
    }
  }

  /// Imposes D x in [g, x] at the sample x; returns true when U shrank.
  /// Every constraint is satisfied by all of AID, so AID stays inside U.
  bool constrain(const Vec& x) {
    ++samples_used;
    if (basis.empty()) return false;
    Matrix B = L.ad(x);
    RowEchelon colspan(n);
    for (int c = 0; c < n; ++c) colspan.insert(B.col(c));
    if (colspan.rank() == n) return false;
    std::vector<Vec> nus = colspan.kernel();

    std::size_t u = basis.size();
    std::vector<Vec> w(u);
    for (std::size_t k = 0; k < u; ++k) w[k] = basis[k].apply(x);

    RowEchelon constraints{int(u)};
    for (const Vec& nu : nus) {
      Vec row(u, Rat(0));
      bool nonzero = false;
      for (std::size_t k = 0; k < u; ++k) {
        row[k] = dot(nu, w[k]);
        if (!is_zero(row[k])) nonzero = true;
      }
      if (nonzero) constraints.insert(std::move(row));
    }
    if (constraints.rank() == 0) return false;

    std::vector<Vec> kept;
    for (const Vec& combo : constraints.kernel()) {
      Vec v(std::size_t(n) * n, Rat(0));
      for (std::size_t k = 0; k < u; ++k) {
        if (is_zero(combo[k])) continue;
        Vec flat = basis[k].flatten();
        for (std::size_t t = 0; t < v.size(); ++t) v[t] += combo[k] * flat[t];
      }
      kept.push_back(std::move(v));
    }
    usub = Subspace::span(n * n, kept);
    rebuild();
    return true;
  }
};

std::vector<Vec> complement_vectors(const Subspace& u, const Subspace& inner) {
  RowEchelon inner_ech(u.ambient());
  for (const Vec& row : inner.basis()) inner_ech.insert(Vec(row));
  RowEchelon comp(u.ambient());
  for (const Vec& row : u.basis()) comp.insert(inner_ech.reduce(Vec(row)));
  std::vector<Vec> out;
  for (const Vec& row : comp.rows()) out.push_back(vec_primitive(row));
  return out;
}

/// Deterministic sample schedule: basis vectors, pairwise sums and
/// differences, table-matched combinations beta e_j - alpha e_k that trap
/// two bracket targets at once, then seeded random batches.
std::vector<Vec> structured_samples(const LieAlgebra& L) {
  int n = L.dim();
  std::vector<Vec> samples;
  std::set<Vec> seen;
  auto push = [&](Vec v) {
    if (vec_is_zero(v)) return;
    Vec key = vec_primitive(v);
    if (seen.insert(key).second) samples.push_back(std::move(v));
  };
  for (int i = 0; i < n; ++i) push(L.basis_vector(i));
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      Vec v = L.basis_vector(j);
      v[std::size_t(k)] = 1;
      push(v);
      v[std::size_t(k)] = -1;
      push(std::move(v));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = j + 1; k < n; ++k) {
        if (k == i) continue;
        for (int l = 0; l < n; ++l) {
          Rat alpha = L.struct_const(j, i, l);
          Rat beta = L.struct_const(k, i, l);
          if (is_zero(alpha) || is_zero(beta)) continue;
          Vec v(std::size_t(n), Rat(0));
          v[std::size_t(j)] = beta;
          v[std::size_t(k)] = -alpha;
          push(std::move(v));
        }
      }
    }
  }
  return samples;
}

int candidate_cap(int n) { return n > 12 ? 6 : n; }

std::optional<CertificatePiece> solve_piece(const LieAlgebra& L,
                                            const Matrix& D,
                                            const std::vector<int>& zeros,
                                            int s, int level) {
  using Mono = Poly::Mono;
  int n = L.dim();
  std::vector<char> zeroed(std::size_t(n), 0);
  for (int z : zeros) zeroed[std::size_t(z)] = 1;
  if (level > 0 && zeroed[std::size_t(s)]) return std::nullopt;

  // Template for the section numerators: homogeneous of degree `level` in
  // the live coordinates (affine when level is 0), with denominator x_s^level.
  std::vector<Mono> monos;
  Mono zero_mono(std::size_t(n), 0);
  if (level == 0) {
    monos.push_back(zero_mono);
    for (int b = 0; b < n; ++b) {
      if (zeroed[std::size_t(b)]) continue;
      Mono m = zero_mono;
      m[std::size_t(b)] = 1;
      monos.push_back(std::move(m));
    }
  } else if (level == 1) {
    for (int b = 0; b < n; ++b) {
      if (zeroed[std::size_t(b)]) continue;
      Mono m = zero_mono;
      m[std::size_t(b)] = 1;
      monos.push_back(std::move(m));
    }
  } else {
    for (int a = 0; a < n; ++a) {
      if (zeroed[std::size_t(a)]) continue;
      for (int b = a; b < n; ++b) {
        if (zeroed[std::size_t(b)]) continue;
        Mono m = zero_mono;
        m[std::size_t(a)] += 1;
        m[std::size_t(b)] += 1;
        monos.push_back(std::move(m));
      }
    }
  }
  if (monos.empty()) return std::nullopt;

  std::size_t nm = monos.size();
  std::size_t unknowns = std::size_t(n) * nm;
  auto unknown_index = [&](int j, std::size_t midx) {
    return std::size_t(j) * nm + midx;
  };

  std::map<std::pair<int, Mono>, Vec> rows;
  auto row_of = [&](int k, const Mono& m) -> Vec& {
    auto it = rows.find({k, m});
    if (it == rows.end()) {
      it = rows.emplace(std::make_pair(k, m), Vec(unknowns + 1, Rat(0))).first;
    }
    return it->second;
  };

  // Coefficients of [x, N(x)] per monomial, restricted to the subspace
  // where the zeroed coordinates vanish.
  for (const auto& [pair, terms] : L.table()) {
    auto [i, j] = pair;
    for (std::size_t midx = 0; midx < nm; ++midx) {
      if (!zeroed[std::size_t(i)]) {
        Mono m = monos[midx];
        m[std::size_t(i)] += 1;
        for (const auto& [k, c] : terms) {
          row_of(k, m)[unknown_index(j, midx)] += c;
        }
      }
      if (!zeroed[std::size_t(j)]) {
        Mono m = monos[midx];
        m[std::size_t(j)] += 1;
        for (const auto& [k, c] : terms) {
          row_of(k, m)[unknown_index(i, midx)] -= c;
        }
      }
    }
  }
  // Right-hand side x_s^level * (D x).
  for (int k = 0; k < n; ++k) {
    for (int b = 0; b < n; ++b) {
      if (zeroed[std::size_t(b)]) continue;
      const Rat& d = D.at(k, b);
      if (is_zero(d)) continue;
      Mono m = zero_mono;
      if (level > 0) m[std::size_t(s)] += level;
      m[std::size_t(b)] += 1;
      row_of(k, m)[unknowns] += d;
    }
  }

  RowEchelon ech(int(unknowns) + 1);
  for (auto& [key, row] : rows) ech.insert(std::move(row));
  for (int p : ech.pivots()) {
    if (p == int(unknowns)) return std::nullopt;  // inconsistent system
  }
  Vec sol(unknowns, Rat(0));
  for (std::size_t r = 0; r < ech.rows().size(); ++r) {
    sol[std::size_t(ech.pivots()[r])] = ech.rows()[r][unknowns];
  }

  CertificatePiece piece;
  for (int z : zeros) piece.zero_conditions.push_back(Poly::var(z, n));
  if (level > 0) piece.nonzero_conditions.push_back(Poly::var(s, n));
  piece.phi_numerators.assign(std::size_t(n), Poly(n));
  for (int j = 0; j < n; ++j) {
    for (std::size_t midx = 0; midx < nm; ++midx) {
      const Rat& c = sol[unknown_index(j, midx)];
      if (is_zero(c)) continue;
      Poly term = Poly::constant(c, n);
      for (int v = 0; v < n; ++v) {
        for (int e = 0; e < monos[midx][std::size_t(v)]; ++e) {
          term = term * Poly::var(v, n);
        }
      }
      piece.phi_numerators[std::size_t(j)] =
          piece.phi_numerators[std::size_t(j)] + term;
    }
  }
  piece.phi_denominator = Poly::constant(1, n);
  for (int e = 0; e < level; ++e) {
    piece.phi_denominator = piece.phi_denominator * Poly::var(s, n);
  }
  return piece;
}

std::optional<PiecewiseCertificate> try_chain(const LieAlgebra& L,
                                              const Matrix& D,
                                              const std::vector<int>& splits) {
  int n = L.dim();
  PiecewiseCertificate cert;
  cert.nvars = n;
  std::vector<int> zeros;
  for (int s : splits) {
    std::optional<CertificatePiece> piece = solve_piece(L, D, zeros, s, 1);
    if (!piece && n <= 10) piece = solve_piece(L, D, zeros, s, 2);
    if (!piece) return std::nullopt;
    cert.pieces.push_back(std::move(*piece));
    zeros.push_back(s);
  }
  std::optional<CertificatePiece> final_piece = solve_piece(L, D, zeros, -1, 0);
  if (!final_piece) return std::nullopt;
  cert.pieces.push_back(std::move(*final_piece));
  try {
    if (verify_certificate(L, D, cert)) return cert;
  } catch (const std::invalid_argument&) {
  }
  return std::nullopt;
}

}  // namespace

std::optional<PiecewiseCertificate> search_certificate(const LieAlgebra& L,
                                                       const Matrix& D) {
  int n = L.dim();
  if (n == 0) return std::nullopt;

  // Coordinates whose D-column is dense first: the split coordinate of a
  // working chain is usually one the derivation actually reads.
  std::vector<int> order;
  for (int s = 0; s < n; ++s) order.push_back(s);
  std::vector<int> weight(std::size_t(n), 0);
  for (int s = 0; s < n; ++s) {
    for (int k = 0; k < n; ++k) {
      if (!is_zero(D.at(k, s))) ++weight[std::size_t(s)];
    }
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weight[std::size_t(a)] > weight[std::size_t(b)]; });
  int cap = candidate_cap(n);
  if (int(order.size()) > cap) order.resize(std::size_t(cap));

  for (int s : order) {
    if (auto cert = try_chain(L, D, {s})) return cert;
  }
  if (n <= 10) {
    for (int s : order) {
      for (int t : order) {
        if (t == s) continue;
        if (auto cert = try_chain(L, D, {s, t})) return cert;
      }
    }
  }
  return std::nullopt;
}

AidResult compute_aid(const LieAlgebra& L, const Subspace& der,
                      const Subspace& inn, const DerivationConfig& config) {
  int n = L.dim();
  AidResult result;
  result.aid = der;
  result.aid_lower = inn;
  if (n == 0 || der == inn) {
    result.aid = inn;
    result.status = AidStatus::Exact;
    return result;
  }

  UpperBound upper(L, der);
  bool at_inn = false;
  auto apply = [&](const Vec& x) {
    upper.constrain(x);
    at_inn = upper.usub.dim() == inn.dim();
    return at_inn;
  };

  for (const Vec& x : structured_samples(L)) {
    if (apply(x)) break;
  }
  if (!at_inn) {
    SplitMix64 rng(config.seed * 0x9e3779b97f4a7c15ULL + 17);
    int quiet = 0;
    for (int batch = 0;
         batch < config.max_random_batches && quiet < config.settled_batches;
         ++batch) {
      bool changed = false;
      for (int t = 0; t < 2 * n; ++t) {
        Vec x;
        for (int i = 0; i < n; ++i) x.push_back(Rat(rng.uniform(-9, 9)));
        if (vec_is_zero(x)) continue;
        if (upper.constrain(x)) changed = true;
        if (upper.usub.dim() == inn.dim()) {
          at_inn = true;
          break;
        }
      }
      if (at_inn) break;
      quiet = changed ? 0 : quiet + 1;
    }
  }

  if (at_inn) {
    // Inn is contained in AID which is contained in U, and U collapsed to
    // the dimension of Inn, so all three coincide.
    result.aid = inn;
    result.aid_lower = inn;
    result.status = AidStatus::Exact;
    result.samples_used = upper.samples_used;
    return result;
  }

  // Lower-bound phase: certify the complement generators of U over Inn, or
  // shrink U again whenever the decision procedure finds a counterexample.
  long max_restarts = long(n) * n + 4;
  for (long round = 0; round <= max_restarts; ++round) {
    std::vector<Vec> gens = complement_vectors(upper.usub, inn);
    std::vector<NonInnerGenerator> items;
    std::vector<Vec> certified;
    bool restarted = false;
    for (std::size_t gi = 0; gi < gens.size() && !restarted; ++gi) {
      const Vec& g = gens[gi];
      NonInnerGenerator item;
      item.matrix = vec_to_matrix(g, n, n);
      item.nilpotent = is_nilpotent_matrix(item.matrix);
      if (config.enable_certificate_search) {
        item.certificate = search_certificate(L, item.matrix);
        if (item.certificate) item.status = GeneratorStatus::CertifiedByFormula;
      }
      if (item.status == GeneratorStatus::Unverified &&
          config.enable_decision_fallback) {
        DecideConfig dc;
        dc.leaf_cap = config.depth_cap;
        dc.witness_seed = config.seed + 101 * (gi + 1);
        DecisionOutcome outcome =
            decide_pointwise_membership(L, item.matrix, dc);
        if (outcome.kind == DecisionOutcome::Kind::AlwaysMember) {
          item.status = GeneratorStatus::CertifiedByDecision;
        } else if (outcome.kind == DecisionOutcome::Kind::Counterexample) {
          if (!upper.constrain(outcome.witness)) {
            throw std::logic_error(
                "counterexample failed to shrink the upper bound");
          }
          restarted = true;
          break;
        }
      }
      if (item.status != GeneratorStatus::Unverified) certified.push_back(g);
      items.push_back(std::move(item));
    }
    if (restarted) {
      if (upper.usub.dim() == inn.dim()) {
        result.aid = inn;
        result.aid_lower = inn;
        result.status = AidStatus::Exact;
        result.samples_used = upper.samples_used;
        return result;
      }
      continue;
    }

    std::vector<Vec> lower_vecs = inn.basis();
    for (const Vec& g : certified) lower_vecs.push_back(g);
    result.aid = upper.usub;
    result.aid_lower = Subspace::span(n * n, lower_vecs);
    result.non_inner = std::move(items);
    result.status = result.aid == result.aid_lower ? AidStatus::Exact
                                                   : AidStatus::Bracketed;
    result.samples_used = upper.samples_used;
    return result;
  }
  result.aid = upper.usub;
  result.aid_lower = inn;
  result.status = AidStatus::Bracketed;
  result.samples_used = upper.samples_used;
  return result;
}

Subspace compute_caid(const LieAlgebra& L, const Subspace& der,
                      const Subspace& inn, const Subspace& aid) {
  int n = L.dim();
  // D is central almost inner iff D is almost inner and D = ad(x) + C with
  // C a derivation mapping into the center, a linear condition.
  RowEchelon zech(n);
  for (const Vec& z : L.center().basis()) zech.insert(Vec(z));
  std::vector<Vec> kappas = zech.kernel();
  RowEchelon constraints(n * n);
  for (const Vec& kappa : kappas) {
    for (int j = 0; j < n; ++j) {
      Vec row(std::size_t(n) * n, Rat(0));
      bool nonzero = false;
      for (int a = 0; a < n; ++a) {
        if (!is_zero(kappa[std::size_t(a)])) {
          row[std::size_t(a) * n + j] = kappa[std::size_t(a)];
          nonzero = true;
        }
      }
      if (nonzero) constraints.insert(std::move(row));
    }
  }
  Subspace into_center = Subspace::span(n * n, constraints.kernel());
  Subspace cz = intersect(der, into_center);
  return intersect(aid, sum(inn, cz));
}

bool check_ideal_in_der(const LieAlgebra& L, const Subspace& der,
                        const Subspace& aid) {
  int n = L.dim();
  std::vector<Matrix> dmats, amats;
  for (const Vec& row : der.basis()) dmats.push_back(vec_to_matrix(row, n, n));
  for (const Vec& row : aid.basis()) amats.push_back(vec_to_matrix(row, n, n));
  for (const Matrix& d : dmats) {
    for (const Matrix& a : amats) {
      if (!aid.contains(commutator(d, a).flatten())) return false;
    }
  }
  return true;
}

DerivationReport compute_report(const LieAlgebra& L,
                                const DerivationConfig& config) {
  DerivationReport report;
  report.dim = L.dim();
  report.der = compute_der(L);
  report.inn = compute_inn(L);
  AidResult aid = compute_aid(L, report.der, report.inn, config);
  report.status = aid.status;
  report.aid = aid.aid;
  report.aid_lower =
      aid.status == AidStatus::Exact ? aid.aid : aid.aid_lower;
  report.non_inner = std::move(aid.non_inner);
  report.samples_used = aid.samples_used;
  report.caid = compute_caid(L, report.der, report.inn, report.aid);
  report.caid_lower =
      aid.status == AidStatus::Exact
          ? report.caid
          : compute_caid(L, report.der, report.inn, report.aid_lower);
  if (report.status == AidStatus::Exact) {
    report.aid_ideal_in_der = check_ideal_in_der(L, report.der, report.aid);
  }
  return report;
}

Matrix induce_on_quotient(const Quotient& q, const Subspace& ideal,
                          const Matrix& D) {
  for (const Vec& v : ideal.basis()) {
    if (!ideal.contains(D.apply(v))) {
      throw std::invalid_argument("map does not preserve the ideal");
    }
  }
  return q.projection * D * q.section;
}

}  // namespace liederiv
