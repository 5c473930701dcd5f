#include "liederiv/context.hpp"

#include <algorithm>
#include <stdexcept>

namespace liederiv {

Poly ConstraintContext::normal_form(Poly p) const {
  if (nonlinear_.empty()) return p;
  bool changed = true;
  while (changed && !p.is_zero()) {
    changed = false;
    for (const Poly& g : nonlinear_) {
      const auto& glead = *g.terms().begin();
      bool reduced = true;
      while (reduced && !p.is_zero()) {
        reduced = false;
        for (const auto& [m, c] : p.terms()) {
          bool div = true;
          for (int v = 0; v < p.nvars(); ++v)
            if (glead.first[v] > m[v]) {
              div = false;
              break;
            }
          if (!div) continue;
          Poly::Mono qm(p.nvars());
          for (int v = 0; v < p.nvars(); ++v) qm[v] = m[v] - glead.first[v];
          Poly t(p.nvars());
          t = Poly::constant(c / glead.second, p.nvars());
          Poly mono = Poly::constant(1, p.nvars());
          for (int v = 0; v < p.nvars(); ++v)
            for (int e = 0; e < qm[v]; ++e) mono = mono * Poly::var(v, p.nvars());
          p = p - t * mono * g;
          reduced = true;
          changed = true;
          break;
        }
      }
    }
  }
  return p;
}

bool ConstraintContext::is_zero_mod(const Poly& p) const {
  Poly q = reduce(p);
  if (q.is_zero()) return true;
  if (nonlinear_.empty()) return false;
  for (const Poly& g : nonlinear_)
    if (g.proportional_to(q)) return true;
  return normal_form(q).is_zero();
}

ConstraintContext::AddResult ConstraintContext::refresh_after_substitution() {
  // Re-reduce stored polynomials after subst_ gained an entry; nonlinear
  // equalities that collapse to affine ones cascade back through
  // add_equality.
  std::vector<Poly> pending = std::move(nonlinear_);
  nonlinear_.clear();
  for (Poly& g : pending) {
    Poly r = reduce(g);
    if (r.is_zero()) continue;
    if (r.is_constant()) return AddResult::Infeasible;
    if (r.is_affine()) {
      if (add_equality(r) == AddResult::Infeasible) return AddResult::Infeasible;
    } else {
      nonlinear_.push_back(r.normalized());
    }
  }
  std::vector<Poly> ineqs = std::move(inequations_);
  inequations_.clear();
  for (Poly& q : ineqs) {
    Poly r = reduce(q);
    if (is_zero_mod(r)) return AddResult::Infeasible;
    if (r.is_constant()) continue;
    r = r.normalized();
    bool dup = false;
    for (const Poly& e : inequations_) dup = dup || e == r;
    if (!dup) inequations_.push_back(std::move(r));
  }
  return AddResult::Ok;
}

ConstraintContext::AddResult ConstraintContext::add_equality(Poly p) {
  p = normal_form(reduce(p));
  if (p.is_zero()) return AddResult::Ok;
  if (p.is_constant()) return AddResult::Infeasible;
  if (!p.is_affine()) {
    p = p.normalized();
    for (const Poly& g : nonlinear_)
      if (g == p) return AddResult::Ok;
    nonlinear_.push_back(std::move(p));
    return AddResult::Ok;
  }
  int target = -1;
  for (int v = nvars_ - 1; v >= 0; --v)
    if (!is_zero(p.coeff_of_var(v))) {
      target = v;
      break;
    }
  Rat c = p.coeff_of_var(target);
  // x_target = x_target - p / c on the zero set of p.
  Poly image = Poly::var(target, nvars_) - p * (Rat(1) / c);
  std::map<int, Poly> one{{target, image}};
  for (auto& [v, img] : subst_) img = img.substitute(one);
  subst_[target] = std::move(image);
  return refresh_after_substitution();
}

ConstraintContext::AddResult ConstraintContext::add_inequation(const Poly& p) {
  Poly r = reduce(p);
  if (is_zero_mod(r)) return AddResult::Infeasible;
  if (r.is_constant()) return AddResult::Ok;
  r = r.normalized();
  for (const Poly& e : inequations_)
    if (e == r) return AddResult::Ok;
  inequations_.push_back(std::move(r));
  return AddResult::Ok;
}

bool ConstraintContext::known_nonzero(const Poly& p) const {
  Poly r = reduce(p);
  if (r.is_zero()) return false;
  if (r.is_constant()) return true;
  auto [vars, h] = r.split_monomial_factors();
  auto listed = [&](const Poly& q) {
    Poly n = q.normalized();
    for (const Poly& e : inequations_)
      if (e == n) return true;
    return false;
  };
  for (int v : vars)
    if (!listed(Poly::var(v, nvars_))) return false;
  if (!h.is_constant() && !listed(h)) return false;
  return true;
}

std::vector<int> ConstraintContext::free_variables() const {
  std::vector<int> out;
  for (int v = 0; v < nvars_; ++v)
    if (!subst_.count(v)) out.push_back(v);
  return out;
}

Vec ConstraintContext::materialize(const std::map<int, Rat>& free_values) const {
  Vec full(nvars_);
  Vec point(nvars_);
  for (const auto& [v, val] : free_values) point[v] = val;
  for (int v = 0; v < nvars_; ++v) {
    auto it = subst_.find(v);
    if (it == subst_.end()) {
      auto fv = free_values.find(v);
      full[v] = fv == free_values.end() ? Rat(0) : fv->second;
    } else {
      full[v] = it->second.eval(point);
    }
  }
  return full;
}

std::string ConstraintContext::to_string() const {
  std::string out;
  for (const auto& [v, img] : subst_) {
    if (!out.empty()) out += ", ";
    out += "x" + std::to_string(v + 1) + " = " + img.to_string();
  }
  for (const Poly& g : nonlinear_) {
    if (!out.empty()) out += ", ";
    out += g.to_string() + " = 0";
  }
  for (const Poly& q : inequations_) {
    if (!out.empty()) out += ", ";
    out += q.to_string() + " != 0";
  }
  return out.empty() ? "(empty)" : out;
}

}  // namespace liederiv
