#include "liederiv/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace liederiv {

namespace {

Poly::Mono mono_mul(const Poly::Mono& a, const Poly::Mono& b) {
  Poly::Mono out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool mono_divides(const Poly::Mono& d, const Poly::Mono& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

}  // namespace

Poly Poly::constant(const Rat& c, int nvars) {
  Poly p(nvars);
  if (!liederiv::is_zero(c)) p.terms_[Mono(nvars)] = c;
  return p;
}

Poly Poly::var(int v, int nvars) {
  if (v < 0 || v >= nvars) throw std::invalid_argument("variable out of range");
  Poly p(nvars);
  Mono m(nvars);
  m[v] = 1;
  p.terms_[std::move(m)] = 1;
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                     [](int e) { return e == 0; });
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("not a constant polynomial");
  return terms_.begin()->second;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (int e : m) t += e;
    d = std::max(d, t);
  }
  return d;
}

int Poly::degree_in(int v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

void Poly::add_term(Mono m, Rat c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!liederiv::is_zero(c)) terms_.emplace(std::move(m), std::move(c));
  } else {
    it->second += c;
    if (liederiv::is_zero(it->second)) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& rhs) const {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("nvars mismatch");
  Poly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& rhs) const {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("nvars mismatch");
  Poly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
  return out;
}

Poly Poly::operator-() const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

Poly Poly::operator*(const Poly& rhs) const {
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("nvars mismatch");
  Poly out(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
  return out;
}

Poly Poly::operator*(const Rat& s) const {
  Poly out(nvars_);
  if (liederiv::is_zero(s)) return out;
  for (const auto& [m, c] : terms_) out.terms_[m] = c * s;
  return out;
}

bool Poly::operator==(const Poly& rhs) const {
  return nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
}

Rat Poly::eval(const Vec& point) const {
  if (int(point.size()) != nvars_) throw std::invalid_argument("point size");
  Rat out = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (int v = 0; v < nvars_; ++v)
      for (int e = 0; e < m[v]; ++e) t *= point[v];
    out += t;
  }
  return out;
}

Poly Poly::substitute(const std::map<int, Poly>& subst) const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    Poly term = Poly::constant(c, nvars_);
    Mono kept(nvars_);
    for (int v = 0; v < nvars_; ++v) {
      if (m[v] == 0) continue;
      auto it = subst.find(v);
      if (it == subst.end()) {
        kept[v] = m[v];
      } else {
        for (int e = 0; e < m[v]; ++e) term = term * it->second;
      }
    }
    Poly keep(nvars_);
    keep.terms_[std::move(kept)] = 1;
    out = out + term * keep;
  }
  return out;
}

Poly Poly::normalized() const {
  if (terms_.empty()) return *this;
  Int den_lcm = 1, num_gcd = 0;
  for (const auto& [m, c] : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (scale < 0) scale = -scale;
  if (terms_.begin()->second < 0) scale = -scale;
  return *this * scale;
}

std::pair<std::vector<int>, Poly> Poly::split_monomial_factors() const {
  std::vector<int> factors;
  if (terms_.empty()) return {factors, *this};
  Mono min_exp = terms_.begin()->first;
  for (const auto& [m, c] : terms_)
    for (int v = 0; v < nvars_; ++v) min_exp[v] = std::min(min_exp[v], m[v]);
  Poly h(nvars_);
  for (const auto& [m, c] : terms_) {
    Mono red(nvars_);
    for (int v = 0; v < nvars_; ++v) red[v] = m[v] - min_exp[v];
    h.terms_[std::move(red)] = c;
  }
  for (int v = 0; v < nvars_; ++v)
    for (int e = 0; e < min_exp[v]; ++e) factors.push_back(v);
  return {factors, h};
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (nvars_ != divisor.nvars_) throw std::invalid_argument("nvars mismatch");
  if (divisor.is_zero()) return std::nullopt;
  Poly r = *this;
  Poly q(nvars_);
  const auto& dlead = *divisor.terms_.begin();
  while (!r.is_zero()) {
    const auto& rlead = *r.terms_.begin();
    if (!mono_divides(dlead.first, rlead.first)) return std::nullopt;
    Mono qm(nvars_);
    for (int v = 0; v < nvars_; ++v) qm[v] = rlead.first[v] - dlead.first[v];
    Rat qc = rlead.second / dlead.second;
    Poly t(nvars_);
    t.terms_[std::move(qm)] = qc;
    q = q + t;
    r = r - t * divisor;
  }
  return q;
}

bool Poly::is_affine() const { return total_degree() <= 1; }

Rat Poly::coeff_of_var(int v) const {
  Mono m(nvars_);
  m[v] = 1;
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::constant_term() const {
  auto it = terms_.find(Mono(nvars_));
  return it == terms_.end() ? Rat(0) : it->second;
}

bool Poly::proportional_to(const Poly& rhs) const {
  if (nvars_ != rhs.nvars_) return false;
  if (is_zero() || rhs.is_zero()) return is_zero() && rhs.is_zero();
  if (terms_.size() != rhs.terms_.size()) return false;
  Rat ratio = 0;
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  for (; a != terms_.end(); ++a, ++b) {
    if (a->first != b->first) return false;
    Rat r = b->second / a->second;
    if (liederiv::is_zero(ratio))
      ratio = r;
    else if (r != ratio)
      return false;
  }
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    std::string vars;
    for (int v = 0; v < nvars_; ++v) {
      if (m[v] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(v + 1);
      if (m[v] > 1) vars += "^" + std::to_string(m[v]);
    }
    if (vars.empty()) {
      out += rat_to_string(a);
    } else {
      if (a != 1) out += rat_to_string(a) + "*";
      out += vars;
    }
  }
  return out;
}

}  // namespace liederiv
