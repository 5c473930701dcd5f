#include "liederiv/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace liederiv {

namespace {

int parse_int(const std::string& s, int lo, int hi, const std::string& what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected an integer for " + what + ", got '" +
                                s + "'");
  }
  if (pos != s.size() || v < lo || v > hi) {
    throw std::invalid_argument("value out of range for " + what + ": '" + s +
                                "'");
  }
  return v;
}

}  // namespace

LieAlgebra abelian(int n) {
  if (n < 0) throw std::invalid_argument("abelian: dimension must be >= 0");
  return LieAlgebra::Builder(n).build();
}

LieAlgebra heisenberg() {
  LieAlgebra::Builder b(3);
  b.add(0, 1, 2, 1);
  return b.build();
}

LieAlgebra g5_3() {
  LieAlgebra::Builder b(5);
  b.add(0, 1, 3, 1);
  b.add(0, 3, 4, 1);
  b.add(1, 2, 4, 1);
  return b.build();
}

LieAlgebra g5_6() {
  LieAlgebra::Builder b(5);
  b.add(0, 1, 2, 1);
  b.add(0, 2, 3, 1);
  b.add(0, 3, 4, 1);
  b.add(1, 2, 4, 1);
  return b.build();
}

LieAlgebra filiform_standard(int n) {
  if (n < 2) throw std::invalid_argument("filiform: dimension must be >= 2");
  LieAlgebra::Builder b(n);
  for (int i = 1; i + 1 < n; ++i) b.add(0, i, i + 1, 1);
  return b.build();
}

LieAlgebra metabelian_filiform(int n, const Vec& coeffs) {
  if (n < 5) {
    throw std::invalid_argument("metabelian filiform: dimension must be >= 5");
  }
  if (int(coeffs.size()) != n - 4) {
    throw std::invalid_argument(
        "metabelian filiform: expected " + std::to_string(n - 4) +
        " coefficients alpha_5..alpha_" + std::to_string(n));
  }
  LieAlgebra::Builder b(n);
  for (int i = 1; i + 1 < n; ++i) b.add(0, i, i + 1, 1);
  // 1-based: [e2, e_k] = sum_{m=5}^{n-k+3} alpha_m e_{m+k-3}, 3 <= k <= n-2.
  for (int k = 3; k <= n - 2; ++k) {
    for (int m = 5; m <= n - k + 3; ++m) {
      const Rat& alpha = coeffs[std::size_t(m - 5)];
      if (!is_zero(alpha)) b.add(1, k - 1, m + k - 4, alpha);
    }
  }
  return b.build();
}

LieAlgebra almost_abelian(const std::vector<JordanBlock>& blocks) {
  int total = 0;
  for (const JordanBlock& blk : blocks) {
    if (blk.size < 1) {
      throw std::invalid_argument("almost abelian: block size must be >= 1");
    }
    total += blk.size;
  }
  if (total == 0) {
    throw std::invalid_argument("almost abelian: need at least one block");
  }
  LieAlgebra::Builder b(total + 1);
  int first = 0;
  for (const JordanBlock& blk : blocks) {
    for (int j = first; j < first + blk.size; ++j) {
      if (!is_zero(blk.lambda)) b.add(total, j, j, blk.lambda);
      if (j > first) b.add(total, j, j - 1, 1);
    }
    first += blk.size;
  }
  return b.build();
}

LieAlgebra graph_algebra(const Graph& g) {
  int r = g.vertices;
  if (r < 0) throw std::invalid_argument("graph: vertex count must be >= 0");
  std::vector<std::pair<int, int>> edges = g.edges;
  for (auto& [i, j] : edges) {
    if (i > j) std::swap(i, j);
    if (i == j || i < 0 || j >= r) {
      throw std::invalid_argument("graph: invalid edge");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("graph: duplicate edge");
  }
  int s = int(edges.size());
  LieAlgebra::Builder b(r + s);
  std::vector<std::string> names;
  for (int v = 0; v < r; ++v) names.push_back("x" + std::to_string(v + 1));
  for (int e = 0; e < s; ++e) {
    b.add(edges[std::size_t(e)].first, edges[std::size_t(e)].second, r + e, 1);
    names.push_back("y_{" + std::to_string(edges[std::size_t(e)].first + 1) +
                    "," + std::to_string(edges[std::size_t(e)].second + 1) +
                    "}");
  }
  b.labels(std::move(names));
  return b.build();
}

namespace {

LieAlgebra free_nilpotent_two(int r) {
  Graph g;
  g.vertices = r;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) g.edges.push_back({i, j});
  }
  return graph_algebra(g);
}

LieAlgebra free_nilpotent_three(int r) {
  // Hall basis: e_i; y_{j,k} = [e_j, e_k] for j < k;
  // z_{j,k,i} = [y_{j,k}, e_i] for j < k, i <= k.
  std::map<std::pair<int, int>, int> yidx;
  std::map<std::tuple<int, int, int>, int> zidx;
  int next = r;
  std::vector<std::string> names;
  for (int i = 0; i < r; ++i) names.push_back("e" + std::to_string(i + 1));
  for (int j = 0; j < r; ++j) {
    for (int k = j + 1; k < r; ++k) {
      yidx[{j, k}] = next++;
      names.push_back("y_{" + std::to_string(j + 1) + "," +
                      std::to_string(k + 1) + "}");
    }
  }
  for (int j = 0; j < r; ++j) {
    for (int k = j + 1; k < r; ++k) {
      for (int i = 0; i <= k; ++i) {
        zidx[{j, k, i}] = next++;
        names.push_back("z_{" + std::to_string(j + 1) + "," +
                        std::to_string(k + 1) + ";" + std::to_string(i + 1) +
                        "}");
      }
    }
  }
  LieAlgebra::Builder b(next);
  b.labels(std::move(names));
  for (auto& [jk, y] : yidx) {
    auto [j, k] = jk;
    b.add(j, k, y, 1);
    for (int i = 0; i < r; ++i) {
      if (i <= k) {
        b.add(y, i, zidx.at({j, k, i}), 1);
      } else {
        // [y_{j,k}, e_i] = z_{j,i,k} - z_{k,i,j} by Jacobi when i > k.
        b.add(y, i, zidx.at({j, i, k}), 1);
        b.add(y, i, zidx.at({k, i, j}), -1);
      }
    }
  }
  return b.build();
}

}  // namespace

LieAlgebra free_nilpotent(int r, int step) {
  if (r < 1) throw std::invalid_argument("free nilpotent: need >= 1 generator");
  if (step == 2) return free_nilpotent_two(r);
  if (step == 3) return free_nilpotent_three(r);
  throw std::invalid_argument("free nilpotent: step must be 2 or 3");
}

LieAlgebra free_metabelian(int c) {
  if (c < 1) throw std::invalid_argument("free metabelian: class must be >= 1");
  // Basis x1, x2 and y^m_n for 2 <= m <= c, 1 <= n <= m-1, with
  // [x2, x1] = y^2_1, [y^m_n, x1] = y^{m+1}_n, [y^m_n, x2] = y^{m+1}_{n+1}.
  auto idx = [](int m, int n) { return 2 + (m - 1) * (m - 2) / 2 + (n - 1); };
  int dim = 2 + c * (c - 1) / 2;
  LieAlgebra::Builder b(dim);
  std::vector<std::string> names = {"x1", "x2"};
  for (int m = 2; m <= c; ++m) {
    for (int n = 1; n < m; ++n) {
      names.push_back("y" + std::to_string(m) + "_" + std::to_string(n));
    }
  }
  b.labels(std::move(names));
  if (c >= 2) b.add(1, 0, idx(2, 1), 1);
  for (int m = 2; m < c; ++m) {
    for (int n = 1; n < m; ++n) {
      b.add(idx(m, n), 0, idx(m + 1, n), 1);
      b.add(idx(m, n), 1, idx(m + 1, n + 1), 1);
    }
  }
  return b.build();
}

LieAlgebra a_family(const Rat& q, const Rat& r) {
  LieAlgebra::Builder b(5);
  b.add(0, 4, 1, 1);
  b.add(1, 4, 1, q + r);
  b.add(2, 3, 1, 1);
  b.add(2, 4, 0, 1);
  b.add(2, 4, 2, q);
  b.add(3, 4, 2, 1);
  b.add(3, 4, 3, r);
  return b.build();
}

LieAlgebra triangular(int n, bool strict) {
  if (n < 1) throw std::invalid_argument("triangular: size must be >= 1");
  std::map<std::pair<int, int>, int> idx;
  std::vector<std::string> names;
  int next = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = strict ? i + 1 : i; j < n; ++j) {
      idx[{i, j}] = next++;
      names.push_back("E_{" + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + "}");
    }
  }
  LieAlgebra::Builder b(next);
  b.labels(std::move(names));
  // [E_{ij}, E_{kl}] = delta_{jk} E_{il} - delta_{li} E_{kj}.
  for (const auto& [p1, a] : idx) {
    for (const auto& [p2, c] : idx) {
      if (a >= c) continue;
      auto [i, j] = p1;
      auto [k, l] = p2;
      if (j == k) b.add(a, c, idx.at({i, l}), 1);
      if (l == i) b.add(a, c, idx.at({k, j}), -1);
    }
  }
  return b.build();
}

LieAlgebra gn_family(int n) {
  if (n < 1) throw std::invalid_argument("gn: parameter must be >= 1");
  int dim = 4 * n + 2;
  auto x = [n](int fam, int i) { return 2 + (fam - 1) * n + i; };
  auto y = [n](int fam, int i) { return 2 + 2 * n + (fam - 1) * n + i; };
  LieAlgebra::Builder b(dim);
  std::vector<std::string> names = {"t1", "t2"};
  for (const char* stem : {"x_{", "y_{"}) {
    for (int fam = 1; fam <= 2; ++fam) {
      for (int i = 0; i < n; ++i) {
        names.push_back(stem + std::to_string(fam) + "," +
                        std::to_string(i + 1) + "}");
      }
    }
  }
  b.labels(std::move(names));
  for (int i = 0; i < n; ++i) {
    b.add(0, x(1, i), y(1, i), 1);
    b.add(0, x(2, i), y(2, i), 1);
    b.add(1, x(2, i), y(1, i), 1);
  }
  return b.build();
}

bool verify_isomorphism(const LieAlgebra& src, const LieAlgebra& dst,
                        const Matrix& M) {
  int n = src.dim();
  if (dst.dim() != n || M.rows() != n || M.cols() != n) {
    throw std::invalid_argument("isomorphism check: dimension mismatch");
  }
  if (rank(M) != n) {
    throw std::invalid_argument("isomorphism check: matrix is singular");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Vec lhs = M.apply(src.bracket_basis(i, j));
      Vec rhs = dst.bracket(M.col(i), M.col(j));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::string family_grammar_help() {
  return
      "  abelian <n>\n"
      "  n3 | g53 | g56\n"
      "  graph <vertices> <i-j> [<i-j> ...]      1-based vertex pairs\n"
      "  free2 <r>                               free 2-step on r generators\n"
      "  free3 <r>                               free 3-step on r generators\n"
      "  metabelian-free <c>                     m_{2,c}\n"
      "  filiform <n>                            standard filiform f_n\n"
      "  metabelian-filiform <n> <a5> [... <an>] rational coefficients\n"
      "  almost-abelian <lambda:size> [...]      Jordan blocks\n"
      "  aqr <q> <r>                             family A(q,r)\n"
      "  triangular <n> | strict-triangular <n>\n"
      "  gn <n>\n";
}

LieAlgebra make_family(const std::string& name,
                       const std::vector<std::string>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw std::invalid_argument("family '" + name + "' expects " +
                                  std::to_string(count) + " parameter(s)\n" +
                                  family_grammar_help());
    }
  };
  if (name == "abelian") {
    need(1);
    return abelian(parse_int(params[0], 0, 64, "dimension"));
  }
  if (name == "n3") {
    need(0);
    return heisenberg();
  }
  if (name == "g53") {
    need(0);
    return g5_3();
  }
  if (name == "g56") {
    need(0);
    return g5_6();
  }
  if (name == "graph") {
    if (params.empty()) {
      throw std::invalid_argument("family 'graph' needs a vertex count\n" +
                                  family_grammar_help());
    }
    Graph g;
    g.vertices = parse_int(params[0], 0, 64, "vertex count");
    for (std::size_t t = 1; t < params.size(); ++t) {
      std::size_t dash = params[t].find('-');
      if (dash == std::string::npos) {
        throw std::invalid_argument("graph edge must look like i-j, got '" +
                                    params[t] + "'");
      }
      int i = parse_int(params[t].substr(0, dash), 1, g.vertices, "edge end");
      int j = parse_int(params[t].substr(dash + 1), 1, g.vertices, "edge end");
      g.edges.push_back({i - 1, j - 1});
    }
    return graph_algebra(g);
  }
  if (name == "free2") {
    need(1);
    return free_nilpotent(parse_int(params[0], 1, 16, "generators"), 2);
  }
  if (name == "free3") {
    need(1);
    return free_nilpotent(parse_int(params[0], 1, 8, "generators"), 3);
  }
  if (name == "metabelian-free") {
    need(1);
    return free_metabelian(parse_int(params[0], 1, 16, "class"));
  }
  if (name == "filiform") {
    need(1);
    return filiform_standard(parse_int(params[0], 2, 64, "dimension"));
  }
  if (name == "metabelian-filiform") {
    if (params.empty()) {
      throw std::invalid_argument(
          "family 'metabelian-filiform' needs a dimension\n" +
          family_grammar_help());
    }
    int n = parse_int(params[0], 5, 64, "dimension");
    Vec coeffs;
    for (std::size_t t = 1; t < params.size(); ++t) {
      coeffs.push_back(rat_from_string(params[t]));
    }
    return metabelian_filiform(n, coeffs);
  }
  if (name == "almost-abelian") {
    if (params.empty()) {
      throw std::invalid_argument(
          "family 'almost-abelian' needs at least one block\n" +
          family_grammar_help());
    }
    std::vector<JordanBlock> blocks;
    for (const std::string& p : params) {
      std::size_t colon = p.find(':');
      if (colon == std::string::npos) {
        throw std::invalid_argument(
            "almost-abelian block must look like lambda:size, got '" + p +
            "'");
      }
      JordanBlock blk;
      blk.lambda = rat_from_string(p.substr(0, colon));
      blk.size = parse_int(p.substr(colon + 1), 1, 64, "block size");
      blocks.push_back(std::move(blk));
    }
    return almost_abelian(blocks);
  }
  if (name == "aqr") {
    need(2);
    return a_family(rat_from_string(params[0]), rat_from_string(params[1]));
  }
  if (name == "triangular") {
    need(1);
    return triangular(parse_int(params[0], 1, 10, "size"), false);
  }
  if (name == "strict-triangular") {
    need(1);
    return triangular(parse_int(params[0], 1, 10, "size"), true);
  }
  if (name == "gn") {
    need(1);
    return gn_family(parse_int(params[0], 1, 8, "parameter"));
  }
  throw std::invalid_argument("unknown family '" + name + "'\n" +
                              family_grammar_help());
}

}  // namespace liederiv
