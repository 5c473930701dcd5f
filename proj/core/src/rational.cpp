#include "liederiv/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace liederiv {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t digits = 0;
  std::size_t slashes = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ++digits;
    } else if (c == '/') {
      ++slashes;
      if (slashes > 1 || i == 0 || i + 1 == s.size())
        throw std::invalid_argument("bad rational literal: " + s);
    } else if (c == '-' || c == '+') {
      if (i != 0 && s[i - 1] != '/')
        throw std::invalid_argument("bad rational literal: " + s);
    } else {
      throw std::invalid_argument("bad rational literal: " + s);
    }
  }
  if (digits == 0) throw std::invalid_argument("bad rational literal: " + s);
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string vec_to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rat_to_string(v[i]);
  }
  out += ")";
  return out;
}

bool vec_is_zero(const Vec& v) {
  for (const Rat& r : v)
    if (!is_zero(r)) return false;
  return true;
}

Vec vec_primitive(const Vec& v) {
  Int den_lcm = 1;
  Int num_gcd = 0;
  for (const Rat& r : v) {
    if (is_zero(r)) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), r.get_num().get_mpz_t());
  }
  if (num_gcd == 0) return v;
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (scale < 0) scale = -scale;
  Vec out = v;
  for (Rat& r : out) r *= scale;
  for (const Rat& r : out) {
    if (!is_zero(r)) {
      if (r < 0)
        for (Rat& e : out) e = -e;
      break;
    }
  }
  return out;
}

}  // namespace liederiv
