#include "liederiv/fixed_vectors.hpp"

#include <numeric>

#include "liederiv/rational.hpp"

namespace liederiv {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool verify_lemma_instance(const LieAlgebra& L, const LemmaInstance& inst) {
  int n = L.dim();
  auto in_range = [n](int v) { return v >= 0 && v < n; };
  if (!in_range(inst.i) || !in_range(inst.j) || !in_range(inst.k) ||
      !in_range(inst.l)) {
    return false;
  }
  if (inst.j == inst.k || inst.j == inst.i || inst.k == inst.i) return false;

  const int i = inst.i, j = inst.j, k = inst.k, l = inst.l;
  if (inst.kind == LemmaInstance::Kind::OneTarget) {
    // [e_j, e_i] and [e_k, e_i] both hit e_l, and nothing else brackets
    // e_j or e_k into the e_l coordinate.
    if (is_zero(L.struct_const(j, i, l))) return false;
    if (is_zero(L.struct_const(k, i, l))) return false;
    for (int p = 0; p < n; ++p) {
      if (p == i) continue;
      if (!is_zero(L.struct_const(j, p, l))) return false;
      if (!is_zero(L.struct_const(k, p, l))) return false;
    }
    return true;
  }

  const int m = inst.m;
  if (!in_range(m) || m == l) return false;
  // [e_j, e_i] hits e_l but not e_m, [e_k, e_i] hits e_m but not e_l, and
  // nothing else brackets e_j or e_k into the e_l or e_m coordinates.
  if (is_zero(L.struct_const(j, i, l))) return false;
  if (is_zero(L.struct_const(k, i, m))) return false;
  if (!is_zero(L.struct_const(j, i, m))) return false;
  if (!is_zero(L.struct_const(k, i, l))) return false;
  for (int p = 0; p < n; ++p) {
    if (p == i) continue;
    if (!is_zero(L.struct_const(j, p, l))) return false;
    if (!is_zero(L.struct_const(j, p, m))) return false;
    if (!is_zero(L.struct_const(k, p, l))) return false;
    if (!is_zero(L.struct_const(k, p, m))) return false;
  }
  return true;
}

bool FixedVectorProof::all_fixed() const {
  for (const Entry& e : per_index) {
    if (e.status == Status::NotProved) return false;
  }
  return true;
}

std::string FixedVectorProof::to_string(const LieAlgebra& L) const {
  std::string out;
  for (std::size_t i = 0; i < per_index.size(); ++i) {
    const Entry& e = per_index[i];
    out += L.label(int(i)) + ": ";
    switch (e.status) {
      case Status::TriviallyFixed:
        out += "fixed (at most one non-centralizing partner)";
        break;
      case Status::LinkedFixed: {
        out += "fixed via links";
        for (const LemmaInstance& inst : e.links) {
          out += " [" + L.label(inst.j) + "~" + L.label(inst.k) + " through " +
                 L.label(inst.l);
          if (inst.kind == LemmaInstance::Kind::TwoTargets) {
            out += "," + L.label(inst.m);
          }
          out += "]";
        }
        break;
      }
      case Status::NotProved:
        out += "not proved fixed";
        break;
    }
    out += "\n";
  }
  return out;
}

FixedVectorProof fixed_vector_prover(const LieAlgebra& L) {
  int n = L.dim();
  FixedVectorProof proof;
  proof.per_index.resize(std::size_t(n));

  for (int i = 0; i < n; ++i) {
    FixedVectorProof::Entry& entry = proof.per_index[std::size_t(i)];
    for (int j = 0; j < n; ++j) {
      if (j != i && !vec_is_zero(L.bracket_basis(i, j))) {
        entry.partners.push_back(j);
      }
    }
    if (entry.partners.size() <= 1) {
      entry.status = FixedVectorProof::Status::TriviallyFixed;
      continue;
    }

    // Link partners pairwise; a connected partner graph pins the common
    // e_i-coefficient of every almost inner derivation's section.
    int s = int(entry.partners.size());
    UnionFind uf(s);
    int components = s;
    for (int a = 0; a < s && components > 1; ++a) {
      for (int b = a + 1; b < s && components > 1; ++b) {
        if (uf.find(a) == uf.find(b)) continue;
        int j = entry.partners[std::size_t(a)];
        int k = entry.partners[std::size_t(b)];
        bool linked = false;
        LemmaInstance found{};
        for (int l = 0; l < n && !linked; ++l) {
          LemmaInstance one{LemmaInstance::Kind::OneTarget, i, j, k, l, -1};
          if (verify_lemma_instance(L, one)) {
            found = one;
            linked = true;
          }
        }
        for (int l = 0; l < n && !linked; ++l) {
          if (is_zero(L.struct_const(j, i, l))) continue;
          for (int m = 0; m < n && !linked; ++m) {
            if (m == l || is_zero(L.struct_const(k, i, m))) continue;
            LemmaInstance two{LemmaInstance::Kind::TwoTargets, i, j, k, l, m};
            if (verify_lemma_instance(L, two)) {
              found = two;
              linked = true;
            }
          }
        }
        if (linked && uf.merge(a, b)) {
          entry.links.push_back(found);
          --components;
        }
      }
    }
    entry.status = components == 1 ? FixedVectorProof::Status::LinkedFixed
                                   : FixedVectorProof::Status::NotProved;
  }
  return proof;
}

}  // namespace liederiv
