#include "liederiv/lie_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace liederiv {

namespace {

void add_terms(Vec& acc, const LieAlgebra::Terms& terms, const Rat& scale) {
  if (is_zero(scale)) return;
  for (const auto& [k, c] : terms) acc[k] += scale * c;
}

}  // namespace

LieAlgebra::Builder::Builder(int dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
}

LieAlgebra::Builder& LieAlgebra::Builder::add(int i, int j, int k, const Rat& c) {
  if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
    throw std::invalid_argument("basis index out of range");
  if (i == j) throw std::invalid_argument("bracket [e_i, e_i] is zero");
  if (is_zero(c)) return *this;
  Rat v = c;
  int a = i, b = j;
  if (a > b) {
    std::swap(a, b);
    v = -v;
  }
  Terms& t = table_[{a, b}];
  for (auto& [idx, coeff] : t) {
    if (idx == k) {
      coeff += v;
      if (is_zero(coeff)) {
        t.erase(std::remove_if(t.begin(), t.end(),
                               [&](const auto& e) { return e.first == k; }),
                t.end());
        if (t.empty()) table_.erase({a, b});
      }
      return *this;
    }
  }
  t.emplace_back(k, std::move(v));
  std::sort(t.begin(), t.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return *this;
}

LieAlgebra::Builder& LieAlgebra::Builder::labels(std::vector<std::string> names) {
  if (int(names.size()) != dim_) throw std::invalid_argument("label count");
  labels_ = std::move(names);
  return *this;
}

std::optional<JacobiViolation> LieAlgebra::Builder::check() const {
  return validate_jacobi(dim_, table_);
}

LieAlgebra LieAlgebra::Builder::build() const {
  if (auto v = check()) {
    throw std::invalid_argument(
        "Jacobi identity fails at basis triple (" + std::to_string(v->i + 1) +
        ", " + std::to_string(v->j + 1) + ", " + std::to_string(v->k + 1) +
        "), defect " + vec_to_string(v->defect));
  }
  return LieAlgebra(dim_, table_, labels_);
}

LieAlgebra::LieAlgebra(int dim, Table table, std::vector<std::string> labels)
    : dim_(dim), table_(std::move(table)), labels_(std::move(labels)) {
  ad_.reserve(dim_);
  for (int i = 0; i < dim_; ++i) {
    Matrix m(dim_, dim_);
    for (const auto& [ij, terms] : table_) {
      auto [a, b] = ij;
      if (a == i)
        for (const auto& [k, c] : terms) m.at(k, b) += c;
      else if (b == i)
        for (const auto& [k, c] : terms) m.at(k, a) -= c;
    }
    ad_.push_back(std::move(m));
  }
}

std::string LieAlgebra::label(int i) const {
  if (i < int(labels_.size())) return labels_[i];
  return "e" + std::to_string(i + 1);
}

Rat LieAlgebra::struct_const(int i, int j, int k) const {
  if (i == j) return 0;
  auto it = table_.find({std::min(i, j), std::max(i, j)});
  if (it == table_.end()) return 0;
  for (const auto& [idx, c] : it->second)
    if (idx == k) return i < j ? c : -c;
  return 0;
}

Vec LieAlgebra::bracket_basis(int i, int j) const {
  Vec out(dim_);
  if (i == j) return out;
  auto it = table_.find({std::min(i, j), std::max(i, j)});
  if (it != table_.end()) add_terms(out, it->second, i < j ? Rat(1) : Rat(-1));
  return out;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (int(x.size()) != dim_ || int(y.size()) != dim_)
    throw std::invalid_argument("dimension mismatch");
  Vec out(dim_);
  for (const auto& [ij, terms] : table_) {
    auto [i, j] = ij;
    Rat coeff = x[i] * y[j] - x[j] * y[i];
    add_terms(out, terms, coeff);
  }
  return out;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  if (int(x.size()) != dim_) throw std::invalid_argument("dimension mismatch");
  Matrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    const Matrix& a = ad_[i];
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c)
        if (!is_zero(a.at(r, c))) m.at(r, c) += x[i] * a.at(r, c);
  }
  return m;
}

Vec LieAlgebra::basis_vector(int i) const {
  Vec v(dim_);
  v[i] = 1;
  return v;
}

const Subspace& LieAlgebra::center() const {
  if (!center_) {
    RowEchelon sys(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int r = 0; r < dim_; ++r) sys.insert(ad_[i].row(r));
    center_ = Subspace::span(dim_, sys.kernel());
  }
  return *center_;
}

Subspace LieAlgebra::centralizer(const Vec& x) const { return nullspace(ad(x)); }

std::vector<Subspace> LieAlgebra::lower_central_series() const {
  std::vector<Subspace> out{Subspace::full(dim_)};
  for (;;) {
    Subspace next = bracket_space(*this, Subspace::full(dim_), out.back());
    if (next.dim() == out.back().dim()) break;
    out.push_back(std::move(next));
    if (out.back().dim() == 0) break;
  }
  return out;
}

std::vector<Subspace> LieAlgebra::derived_series() const {
  std::vector<Subspace> out{Subspace::full(dim_)};
  for (;;) {
    Subspace next = bracket_space(*this, out.back(), out.back());
    if (next.dim() == out.back().dim()) break;
    out.push_back(std::move(next));
    if (out.back().dim() == 0) break;
  }
  return out;
}

std::optional<int> LieAlgebra::nilpotency_class() const {
  auto series = lower_central_series();
  if (series.back().dim() != 0 && dim_ > 0) return std::nullopt;
  return int(series.size()) - 1;
}

std::optional<int> LieAlgebra::derived_length() const {
  auto series = derived_series();
  if (series.back().dim() != 0 && dim_ > 0) return std::nullopt;
  return int(series.size()) - 1;
}

bool LieAlgebra::same_table(const LieAlgebra& other) const {
  return dim_ == other.dim_ && table_ == other.table_;
}

std::optional<JacobiViolation> validate_jacobi(int dim, const LieAlgebra::Table& table) {
  auto bracket_of = [&](int i, int j) {
    Vec out(dim);
    if (i == j) return out;
    auto it = table.find({std::min(i, j), std::max(i, j)});
    if (it != table.end()) add_terms(out, it->second, i < j ? Rat(1) : Rat(-1));
    return out;
  };
  auto bracket_vec = [&](const Vec& x, int j) {
    Vec out(dim);
    for (int i = 0; i < dim; ++i) {
      if (is_zero(x[i])) continue;
      Vec b = bracket_of(i, j);
      for (int k = 0; k < dim; ++k) out[k] += x[i] * b[k];
    }
    return out;
  };
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        Vec defect = bracket_vec(bracket_of(i, j), k);
        Vec t2 = bracket_vec(bracket_of(j, k), i);
        Vec t3 = bracket_vec(bracket_of(k, i), j);
        for (int m = 0; m < dim; ++m) defect[m] += t2[m] + t3[m];
        if (!vec_is_zero(defect)) return JacobiViolation{i, j, k, defect};
      }
  return std::nullopt;
}

std::optional<JacobiViolation> validate_jacobi(const LieAlgebra& L) {
  return validate_jacobi(L.dim(), L.table());
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  LieAlgebra::Builder builder(a.dim() + b.dim());
  for (const auto& [ij, terms] : a.table())
    for (const auto& [k, c] : terms) builder.add(ij.first, ij.second, k, c);
  for (const auto& [ij, terms] : b.table())
    for (const auto& [k, c] : terms)
      builder.add(ij.first + a.dim(), ij.second + a.dim(), k + a.dim(), c);
  std::vector<std::string> labels;
  for (int i = 0; i < a.dim(); ++i) labels.push_back(a.label(i));
  for (int i = 0; i < b.dim(); ++i) labels.push_back(b.label(i) + "'");
  builder.labels(std::move(labels));
  return builder.build();
}

Subspace bracket_space(const LieAlgebra& L, const Subspace& A, const Subspace& B) {
  std::vector<Vec> gens;
  for (const Vec& a : A.basis())
    for (const Vec& b : B.basis()) gens.push_back(L.bracket(a, b));
  return Subspace::span(L.dim(), gens);
}

Subspace derived_subalgebra(const LieAlgebra& L) {
  return bracket_space(L, Subspace::full(L.dim()), Subspace::full(L.dim()));
}

bool is_ideal(const LieAlgebra& L, const Subspace& s) {
  if (s.ambient() != L.dim()) throw std::invalid_argument("ambient mismatch");
  for (int i = 0; i < L.dim(); ++i)
    for (const Vec& v : s.basis())
      if (!s.contains(L.bracket(L.basis_vector(i), v))) return false;
  return true;
}

Quotient quotient(const LieAlgebra& L, const Subspace& ideal) {
  if (!is_ideal(L, ideal))
    throw std::invalid_argument("quotient requires an ideal");
  int n = L.dim();
  std::vector<bool> is_pivot(n, false);
  for (int p : ideal.pivots()) is_pivot[p] = true;
  std::vector<int> kept;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) kept.push_back(c);
  int m = int(kept.size());

  Matrix projection(m, n);
  for (int c = 0; c < n; ++c) {
    Vec r = ideal.reduce(L.basis_vector(c));
    for (int t = 0; t < m; ++t) projection.at(t, c) = r[kept[t]];
  }
  Matrix section(n, m);
  for (int t = 0; t < m; ++t) section.at(kept[t], t) = 1;

  LieAlgebra::Builder builder(m);
  for (int s = 0; s < m; ++s)
    for (int t = s + 1; t < m; ++t) {
      Vec w = projection.apply(L.bracket_basis(kept[s], kept[t]));
      for (int k = 0; k < m; ++k)
        if (!is_zero(w[k])) builder.add(s, t, k, w[k]);
    }
  std::vector<std::string> labels;
  for (int t = 0; t < m; ++t) labels.push_back(L.label(kept[t]));
  builder.labels(std::move(labels));
  return Quotient{builder.build(), std::move(projection), std::move(section),
                  std::move(kept)};
}

}  // namespace liederiv
