#include "liederiv/goldens.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <iomanip>
#include <iterator>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "liederiv/certificate.hpp"
#include "liederiv/derivations.hpp"
#include "liederiv/families.hpp"
#include "liederiv/fixed_vectors.hpp"
#include "liederiv/lie_algebra.hpp"
#include "liederiv/membership.hpp"
#include "liederiv/oracle.hpp"
#include "liederiv/rng.hpp"

namespace liederiv {

namespace {

Vec unit_flat(int n, int r, int c) {
  Matrix m(n, n);
  m.at(r, c) = 1;
  return m.flatten();
}

/// inn extended by the given flattened matrices, inside gl(n).
Subspace inn_plus(const Subspace& inn, int n, std::vector<Vec> extra) {
  std::vector<Vec> vecs = inn.basis();
  for (Vec& v : extra) vecs.push_back(std::move(v));
  return Subspace::span(n * n, std::move(vecs));
}

struct Cached {
  LieAlgebra algebra;
  DerivationReport report;
};

struct Runner {
  GoldenOptions options;
  std::map<std::string, Cached> cache;
  std::vector<std::string> order;

  bool ok = true;
  std::vector<std::string> faults;

  void check(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (faults.size() < 12) faults.push_back(what);
  }

  const Cached& report_for(const std::string& name, const LieAlgebra& L) {
    auto it = cache.find(name);
    if (it == cache.end()) {
      DerivationConfig cfg;
      cfg.seed = options.seed;
      Cached entry{L, compute_report(L, cfg)};
      it = cache.emplace(name, std::move(entry)).first;
      order.push_back(name);
    }
    return it->second;
  }

  /// Shared table-row check: the four dimensions plus exactness.
  void expect_dims(const std::string& name, const LieAlgebra& L, int inn,
                   int caid, int aid, int der) {
    const Cached& c = report_for(name, L);
    const DerivationReport& r = c.report;
    check(r.status == AidStatus::Exact, name + ": aid not certified exact");
    check(r.inn.dim() == inn && r.caid.dim() == caid && r.aid.dim() == aid &&
              r.der.dim() == der,
          name + ": dims (" + std::to_string(r.inn.dim()) + "," +
              std::to_string(r.caid.dim()) + "," + std::to_string(r.aid.dim()) +
              "," + std::to_string(r.der.dim()) + ") expected (" +
              std::to_string(inn) + "," + std::to_string(caid) + "," +
              std::to_string(aid) + "," + std::to_string(der) + ")");
  }

  void dim5_table();
  void dim6_table();
  void aqr_strata();
  void aqr_isomorphisms();
  void graphs_5_vertices();
  void free_nilpotent_check();
  void free_metabelian_check();
  void almost_abelian_filiform();
  void metabelian_filiform_check();
  void triangular_check();
  void gn_certificates();
  void property_suite();
  void oracle_concordance();
  void negative_control();
};

void Runner::dim5_table() {
  struct Row {
    const char* name;
    LieAlgebra L;
    int inn, caid, aid, der, cls, len;
  };
  const Row rows[] = {
      {"g5_6", g5_6(), 4, 5, 5, 8, 4, 2},
      {"g5_3", g5_3(), 4, 5, 5, 10, 3, 2},
      {"n3+C2", direct_sum(heisenberg(), abelian(2)), 2, 2, 2, 16, 2, 2},
      {"C5", abelian(5), 0, 0, 0, 25, 1, 1},
  };
  for (const Row& row : rows) {
    expect_dims(row.name, row.L, row.inn, row.caid, row.aid, row.der);
    check(row.L.nilpotency_class() == std::optional<int>(row.cls),
          std::string(row.name) + ": wrong nilpotency class");
    check(row.L.derived_length() == std::optional<int>(row.len),
          std::string(row.name) + ": wrong derived length");
  }
  // The non-inner parts are one-dimensional with frozen generators.
  const Cached& a = report_for("g5_6", g5_6());
  check(a.report.aid == inn_plus(a.report.inn, 5, {unit_flat(5, 4, 1)}),
        "g5_6: aid is not inn + <E_{5,2}>");
  const Cached& b = report_for("g5_3", g5_3());
  check(b.report.aid == inn_plus(b.report.inn, 5, {unit_flat(5, 4, 2)}),
        "g5_3: aid is not inn + <E_{5,3}>");
}

void Runner::dim6_table() {
  expect_dims("g5_6+C", direct_sum(g5_6(), abelian(1)), 4, 5, 5, 12);
  expect_dims("g5_3+C", direct_sum(g5_3(), abelian(1)), 4, 5, 5, 15);
  expect_dims("n3+n3", direct_sum(heisenberg(), heisenberg()), 4, 4, 4, 16);
  expect_dims("n4+C2", direct_sum(filiform_standard(4), abelian(2)), 3, 3, 3,
              17);
  expect_dims("g6_1", gn_family(1), 4, 6, 6, 17);
  const Cached& c = report_for("g6_1", gn_family(1));
  check(c.report.aid.quotient_dim(c.report.inn) == 2,
        "g6_1: dim(aid/inn) != 2");
}

void Runner::aqr_strata() {
  const std::pair<int, int> points[] = {{2, 3},  {1, 0}, {0, 1},
                                        {1, -1}, {0, 0}, {2, -2},
                                        {3, 0},  {0, 0}, {5, 7}};
  for (const auto& [q, r] : points) {
    const std::string name =
        "A(" + std::to_string(q) + "," + std::to_string(r) + ")";
    const int der = (q == 0 && r == 0) ? 8 : 7;
    const bool big = q * r == 0 || q + r == 0;
    const int aid = big ? 5 : 4;
    // On this family the almost inner complement generators all shift into
    // maps with central image, so CAID coincides with AID at every point.
    expect_dims(name, a_family(Rat(q), Rat(r)), 4, aid, aid, der);
  }
}

void Runner::aqr_isomorphisms() {
  for (int qi : {2, 3, 5}) {
    const Rat q(qi);
    const Rat one(1);
    // Basis images are the columns.
    const Matrix to_r0 = Matrix::from_rows({
        {q * q, 0, 0, 0, 0},
        {one - q * q, q, 0, 0, 0},
        {0, 0, q, 0, 0},
        {0, 0, 0, 1, (one - q * q) / q},
        {0, 0, 0, 0, q},
    });
    check(verify_isomorphism(a_family(q, Rat(0)), a_family(Rat(1), Rat(0)),
                             to_r0),
          "A(q,0) ~ A(1,0) rejected at q=" + std::to_string(qi));
    const Matrix to_opp = Matrix::from_rows({
        {one, 0, (q * q - one) / q, (q * q - one) / (q * q), 0},
        {0, q, (q * q - one) / q, 0, 0},
        {0, 0, q, 0, 0},
        {0, 0, 0, 1, 0},
        {0, 0, 0, 0, q},
    });
    check(verify_isomorphism(a_family(q, -q), a_family(Rat(1), Rat(-1)),
                             to_opp),
          "A(q,-q) ~ A(1,-1) rejected at q=" + std::to_string(qi));
  }
  check(!verify_isomorphism(a_family(Rat(1), Rat(0)), a_family(Rat(1), Rat(-1)),
                            Matrix::identity(5)),
        "identity accepted as isomorphism A(1,0) -> A(1,-1)");
}

void Runner::graphs_5_vertices() {
  // All 2^10 labeled graphs on 5 vertices, deduplicated by the
  // lexicographically least edge bitmask over all vertex permutations.
  std::vector<std::pair<int, int>> all_edges;
  int index[5][5] = {};
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      index[i][j] = int(all_edges.size());
      all_edges.push_back({i, j});
    }
  }
  std::array<int, 5> perm = {0, 1, 2, 3, 4};
  std::vector<std::array<int, 5>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<unsigned> classes;
  for (unsigned mask = 0; mask < 1024; ++mask) {
    unsigned best = ~0u;
    for (const auto& p : perms) {
      unsigned image = 0;
      for (int b = 0; b < 10; ++b) {
        if (!(mask >> b & 1u)) continue;
        int i = p[all_edges[b].first], j = p[all_edges[b].second];
        if (i > j) std::swap(i, j);
        image |= 1u << index[i][j];
      }
      best = std::min(best, image);
    }
    classes.insert(best);
  }
  check(classes.size() == 34, "expected 34 graph classes, found " +
                                  std::to_string(classes.size()));

  for (unsigned mask : classes) {
    Graph g;
    g.vertices = 5;
    for (int b = 0; b < 10; ++b) {
      if (mask >> b & 1u) g.edges.push_back(all_edges[b]);
    }
    const LieAlgebra L = graph_algebra(g);
    const std::string name = "graph_" + std::to_string(mask);
    const Cached& c = report_for(name, L);
    check(c.report.status == AidStatus::Exact &&
              c.report.aid == c.report.inn,
          name + ": aid != inn");
    check(fixed_vector_prover(L).all_fixed(),
          name + ": fixed-vector prover incomplete");
  }
}

void Runner::free_nilpotent_check() {
  for (int r : {2, 3, 4}) {
    const LieAlgebra L = free_nilpotent(r, 2);
    Graph complete;
    complete.vertices = r;
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) complete.edges.push_back({i, j});
    }
    check(L.same_table(graph_algebra(complete)),
          "f_" + std::to_string(r) + ",2 differs from its complete graph");
    const std::string name = "free2_" + std::to_string(r);
    const Cached& c = report_for(name, L);
    check(c.report.status == AidStatus::Exact && c.report.aid == c.report.inn,
          name + ": aid != inn");
  }
  for (int r : {2, 3}) {
    const std::string name = "free3_" + std::to_string(r);
    const Cached& c = report_for(name, free_nilpotent(r, 3));
    check(c.report.status == AidStatus::Exact && c.report.aid == c.report.inn,
          name + ": aid != inn");
  }
}

void Runner::free_metabelian_check() {
  for (int cls = 2; cls <= 5; ++cls) {
    const std::string name = "m2_" + std::to_string(cls);
    const Cached& c = report_for(name, free_metabelian(cls));
    check(c.report.status == AidStatus::Exact && c.report.aid == c.report.inn,
          name + ": aid != inn");
  }
}

void Runner::almost_abelian_filiform() {
  const std::vector<std::vector<JordanBlock>> data = {
      {{Rat(0), 4}},
      {{Rat(1), 2}, {Rat(2), 2}},
      {{Rat(0), 2}, {Rat(0), 2}},
      {{Rat(1), 3}},
  };
  for (std::size_t t = 0; t < data.size(); ++t) {
    const LieAlgebra L = almost_abelian(data[t]);
    const std::string name = "almost_abelian_" + std::to_string(t);
    const Cached& c = report_for(name, L);
    check(c.report.status == AidStatus::Exact && c.report.aid == c.report.inn,
          name + ": aid != inn");
    check(fixed_vector_prover(L).all_fixed(),
          name + ": fixed-vector prover incomplete");
  }
  for (int n = 4; n <= 8; ++n) {
    const LieAlgebra L = filiform_standard(n);
    const std::string name = "f" + std::to_string(n);
    const Cached& c = report_for(name, L);
    check(c.report.status == AidStatus::Exact && c.report.aid == c.report.inn,
          name + ": aid != inn");
    check(fixed_vector_prover(L).all_fixed(),
          name + ": fixed-vector prover incomplete");
  }
}

void Runner::metabelian_filiform_check() {
  SplitMix64 rng(options.seed * 0x9e3779b97f4a7c15ULL + 7);
  for (int n : {5, 6, 7}) {
    const int m = n - 4;
    std::vector<Vec> coeff_sets;
    coeff_sets.push_back(Vec(std::size_t(m), Rat(1)));
    Vec first(std::size_t(m), Rat(0));
    first[0] = 1;
    coeff_sets.push_back(first);
    Vec last(std::size_t(m), Rat(0));
    last[std::size_t(m) - 1] = 1;
    coeff_sets.push_back(last);
    Vec random;
    for (int t = 0; t < m; ++t) random.push_back(Rat(rng.uniform(1, 5)));
    coeff_sets.push_back(random);
    for (std::size_t t = 0; t < coeff_sets.size(); ++t) {
      const LieAlgebra L = metabelian_filiform(n, coeff_sets[t]);
      const std::string name =
          "m" + std::to_string(n) + "_" + std::to_string(t);
      const Cached& c = report_for(name, L);
      check(c.report.status == AidStatus::Exact,
            name + ": aid not certified exact");
      check(c.report.aid.quotient_dim(c.report.inn) == 1,
            name + ": dim(aid/inn) != 1");
      check(c.report.aid ==
                inn_plus(c.report.inn, n, {unit_flat(n, n - 1, 1)}),
            name + ": aid is not inn + <E_{n,2}>");
      check(c.report.caid == c.report.aid, name + ": caid != aid");
    }
  }
}

void Runner::triangular_check() {
  for (int n = 2; n <= 5; ++n) {
    for (bool strict : {true, false}) {
      const std::string name =
          std::string(strict ? "n" : "t") + std::to_string(n) + "_matrices";
      const Cached& c = report_for(name, triangular(n, strict));
      check(c.report.status == AidStatus::Exact &&
                c.report.aid == c.report.inn,
            name + ": aid != inn");
    }
  }
}

void Runner::gn_certificates() {
  for (int n : {2, 3, 4}) {
    const LieAlgebra L = gn_family(n);
    const int dim = 4 * n + 2;
    const std::string name = "gn_" + std::to_string(n);
    const Cached& c = report_for(name, L);
    check(c.report.status == AidStatus::Exact,
          name + ": aid not certified exact");
    check(c.report.aid.quotient_dim(c.report.inn) == n,
          name + ": dim(aid/inn) != n");
    check(c.report.caid == c.report.aid, name + ": caid != aid");
    for (const NonInnerGenerator& g : c.report.non_inner) {
      check(g.status != GeneratorStatus::Unverified,
            name + ": uncertified generator in report");
    }

    std::vector<Vec> gens;
    for (int i = 0; i < n; ++i) {
      const int x1 = 2 + i, x2 = 2 + n + i, y2 = 2 + 3 * n + i;
      Matrix D(dim, dim);
      D.at(y2, 0) = 1;  // t1 -> y_{2,i}
      gens.push_back(D.flatten());
      check(c.report.aid.contains(gens.back()),
            name + ": E_{y2" + std::to_string(i + 1) + ",t1} not in aid");

      // phi(x) = (-x2 e_{x1,i} + x1 e_{x2,i}) / x1 off {x1 = 0}, else 0.
      PiecewiseCertificate cert;
      cert.nvars = dim;
      CertificatePiece main;
      main.nonzero_conditions = {Poly::var(0, dim)};
      main.phi_numerators.assign(std::size_t(dim), Poly(dim));
      main.phi_numerators[std::size_t(x1)] = -Poly::var(1, dim);
      main.phi_numerators[std::size_t(x2)] = Poly::var(0, dim);
      main.phi_denominator = Poly::var(0, dim);
      CertificatePiece rest;
      rest.zero_conditions = {Poly::var(0, dim)};
      rest.phi_numerators.assign(std::size_t(dim), Poly(dim));
      rest.phi_denominator = Poly::constant(Rat(1), dim);
      cert.pieces = {main, rest};
      bool good = false;
      try {
        good = verify_certificate(L, D, cert);
      } catch (const std::exception&) {
        good = false;
      }
      check(good, name + ": hand certificate rejected for generator " +
                      std::to_string(i + 1));
    }
    check(c.report.aid == inn_plus(c.report.inn, dim, gens),
          name + ": aid is not inn + <E_{y2i,t1}>");
  }
}

void Runner::property_suite() {
  const std::vector<std::string> names = order;  // snapshot
  for (const std::string& name : names) {
    const Cached& c = cache.at(name);
    const LieAlgebra& L = c.algebra;
    const DerivationReport& rep = c.report;
    const int n = L.dim();
    check(rep.der.contains(rep.aid) && rep.aid.contains(rep.caid) &&
              rep.caid.contains(rep.inn),
          name + ": chain inclusion broken");

    std::vector<Matrix> aid_mats, caid_mats, inn_mats, der_mats;
    for (const Vec& v : rep.aid.basis()) aid_mats.push_back(vec_to_matrix(v, n, n));
    for (const Vec& v : rep.caid.basis())
      caid_mats.push_back(vec_to_matrix(v, n, n));
    for (const Vec& v : rep.inn.basis()) inn_mats.push_back(vec_to_matrix(v, n, n));
    for (const Vec& v : rep.der.basis()) der_mats.push_back(vec_to_matrix(v, n, n));

    bool closed = true;
    for (const Matrix& a : aid_mats) {
      for (const Matrix& b : aid_mats) {
        if (!rep.aid.contains(commutator(a, b).flatten())) closed = false;
      }
    }
    check(closed, name + ": aid not closed under bracket");

    bool caid_ideal = true;
    for (const Matrix& a : aid_mats) {
      for (const Matrix& b : caid_mats) {
        if (!rep.caid.contains(commutator(a, b).flatten())) caid_ideal = false;
      }
    }
    check(caid_ideal, name + ": caid not an ideal of aid");

    bool inn_ideal = true;
    for (const Matrix& a : der_mats) {
      for (const Matrix& b : inn_mats) {
        if (!rep.inn.contains(commutator(a, b).flatten())) inn_ideal = false;
      }
    }
    check(inn_ideal, name + ": inn not an ideal of der");

    bool kills_center = true;
    for (const Matrix& d : aid_mats) {
      for (const Vec& z : L.center().basis()) {
        if (!vec_is_zero(d.apply(z))) kills_center = false;
      }
    }
    check(kills_center, name + ": aid does not kill the center");

    std::vector<Subspace> ideals = L.lower_central_series();
    for (Subspace& s : L.derived_series()) ideals.push_back(std::move(s));
    ideals.push_back(derived_subalgebra(L));
    bool preserved = true;
    for (const Matrix& d : aid_mats) {
      for (const Subspace& s : ideals) {
        for (const Vec& v : s.basis()) {
          if (!s.contains(d.apply(v))) preserved = false;
        }
      }
    }
    check(preserved, name + ": aid does not preserve a series ideal");

    if (L.nilpotency_class()) {
      bool nil = true;
      for (const Matrix& d : aid_mats) {
        if (!is_nilpotent_matrix(d)) nil = false;
      }
      check(nil, name + ": non-nilpotent aid matrix on a nilpotent algebra");
    }
  }

  // Additivity of aid over direct sums, on random pairs of small cached
  // nilpotent algebras.
  std::vector<std::string> pool;
  for (const std::string& name : names) {
    const Cached& c = cache.at(name);
    if (c.algebra.dim() <= 6 && c.algebra.nilpotency_class()) {
      pool.push_back(name);
    }
  }
  SplitMix64 rng(options.seed * 0x9e3779b97f4a7c15ULL + 12);
  for (int t = 0; t < 5 && pool.size() >= 2; ++t) {
    const std::string na = pool[std::size_t(rng.uniform(0, int(pool.size()) - 1))];
    const std::string nb = pool[std::size_t(rng.uniform(0, int(pool.size()) - 1))];
    const int da = cache.at(na).report.aid.dim();
    const int db = cache.at(nb).report.aid.dim();
    const LieAlgebra sum_algebra =
        direct_sum(cache.at(na).algebra, cache.at(nb).algebra);
    const Cached& s = report_for("sum_" + na + "_" + nb, sum_algebra);
    check(s.report.status == AidStatus::Exact &&
              s.report.aid.dim() == da + db,
          "aid not additive on " + na + " + " + nb);
  }
}

void Runner::oracle_concordance() {
  Graph p3;
  p3.vertices = 3;
  p3.edges = {{0, 1}, {1, 2}};
  const std::pair<std::string, LieAlgebra> algs[] = {
      {"n3", heisenberg()},
      {"g5_3", g5_3()},
      {"g5_6", g5_6()},
      {"gn_2", gn_family(2)},
      {"path3", graph_algebra(p3)},
  };
  OracleConfig cfg;
  cfg.budget = 400'000'000ULL;
  for (const auto& [name, L] : algs) {
    const Cached& c = report_for(name, L);
    check(c.report.status == AidStatus::Exact,
          name + ": rational aid not certified exact");
    OracleCrossCheck cross = oracle_cross_check(L, {5, 7}, c.report, cfg);
    for (const auto& entry : cross.entries) {
      check(entry.der_matches && entry.inn_matches && entry.aid_matches,
            name + " mod " + std::to_string(entry.report.prime) +
                ": dims (der,inn,aid) = (" +
                std::to_string(entry.report.dim_der) + "," +
                std::to_string(entry.report.dim_inn) + "," +
                std::to_string(entry.report.dim_aid) +
                ") disagree with the rational result");
    }
  }
}

void Runner::negative_control() {
  const LieAlgebra L = heisenberg();
  Matrix D(3, 3);
  D.at(1, 0) = 1;  // e1 -> e2, not a multiple of e3
  DecisionOutcome out = decide_pointwise_membership(L, D);
  check(out.kind == DecisionOutcome::Kind::Counterexample,
        "decision procedure failed to refute E_{2,1} on n3");
  if (out.kind == DecisionOutcome::Kind::Counterexample) {
    check(!pointwise_member(L, D, out.witness),
          "returned witness does not violate membership");
  }
}

}  // namespace

std::vector<GoldenResult> run_goldens(const GoldenOptions& options) {
  Runner runner;
  runner.options = options;

  struct Item {
    const char* name;
    void (Runner::*fn)();
  };
  const Item items[] = {
      {"dim5-table", &Runner::dim5_table},
      {"dim6-table", &Runner::dim6_table},
      {"aqr-strata", &Runner::aqr_strata},
      {"aqr-isomorphisms", &Runner::aqr_isomorphisms},
      {"graphs-5-vertices", &Runner::graphs_5_vertices},
      {"free-nilpotent", &Runner::free_nilpotent_check},
      {"free-metabelian", &Runner::free_metabelian_check},
      {"almost-abelian-filiform", &Runner::almost_abelian_filiform},
      {"metabelian-filiform", &Runner::metabelian_filiform_check},
      {"triangular", &Runner::triangular_check},
      {"gn-certificates", &Runner::gn_certificates},
      {"property-suite", &Runner::property_suite},
      {"oracle-concordance", &Runner::oracle_concordance},
      {"negative-control", &Runner::negative_control},
  };

  std::vector<GoldenResult> results;
  int index = 1;
  for (const Item& item : items) {
    runner.ok = true;
    runner.faults.clear();
    const auto start = std::chrono::steady_clock::now();
    try {
      (runner.*item.fn)();
    } catch (const std::exception& e) {
      runner.ok = false;
      runner.faults.push_back(std::string("exception: ") + e.what());
    }
    const auto stop = std::chrono::steady_clock::now();

    GoldenResult res;
    res.index = index++;
    res.name = item.name;
    res.pass = runner.ok;
    res.seconds = std::chrono::duration<double>(stop - start).count();
    if (!runner.ok) {
      std::string joined;
      for (const std::string& f : runner.faults) {
        if (!joined.empty()) joined += "; ";
        joined += f;
      }
      res.detail = joined;
    }
    if (options.progress) {
      std::ostringstream line;
      line << "[" << res.index << "/" << std::size(items) << "] "
           << (res.pass ? "pass" : "FAIL") << "  " << res.name << "  ("
           << std::fixed << std::setprecision(2) << res.seconds << "s)";
      if (!res.detail.empty()) line << "  [" << res.detail << "]";
      (*options.progress) << line.str() << "\n";
      options.progress->flush();
    }
    results.push_back(std::move(res));
  }
  return results;
}

int run_goldens_with_output(std::ostream& out, GoldenOptions options) {
  options.progress = &out;
  const std::vector<GoldenResult> results = run_goldens(options);
  int failures = 0;
  for (const GoldenResult& r : results) {
    if (!r.pass) ++failures;
  }
  if (failures == 0) {
    out << "all " << results.size() << " checks passed\n";
  } else {
    out << failures << " of " << results.size() << " checks FAILED\n";
  }
  return failures;
}

}  // namespace liederiv
