#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace liederiv {

/// Exact rational scalar. Always held in canonical form (gcd(num, den) = 1,
/// den > 0); arithmetic never overflows.
using Rat = mpq_class;
using Int = mpz_class;

using Vec = std::vector<Rat>;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else.
Rat rat_from_string(const std::string& s);

/// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rat& r);

std::string vec_to_string(const Vec& v);

bool vec_is_zero(const Vec& v);

/// Scales v so entries are coprime integers and the first nonzero entry is
/// positive. The zero vector is returned unchanged.
Vec vec_primitive(const Vec& v);

}  // namespace liederiv
