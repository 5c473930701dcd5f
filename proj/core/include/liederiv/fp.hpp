#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "liederiv/lie_algebra.hpp"
#include "liederiv/rational.hpp"

namespace liederiv {

/// Arithmetic mod a prime p, with division-free Barrett reduction for the
/// hot loops. Accepts odd and even primes up to 2^15.
class FpContext {
 public:
  explicit FpContext(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  std::uint32_t reduce(std::uint64_t a) const {
    std::uint64_t q = std::uint64_t((__uint128_t(a) * magic_) >> 64);
    std::uint64_t r = a - q * p_;
    if (r >= p_) r -= p_;
    return std::uint32_t(r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return reduce(std::uint64_t(a) * b);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t inv(std::uint32_t a) const;

 private:
  std::uint32_t p_;
  std::uint64_t magic_;  // floor(2^64 / p)
};

/// Reduction of a rational mod p; throws std::invalid_argument when p
/// divides the denominator (a bad prime for this input).
std::uint32_t fp_from_rat(const Rat& r, const FpContext& fp);

struct FpMat {
  int rows = 0, cols = 0;
  std::vector<std::uint32_t> a;

  FpMat() = default;
  FpMat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

  std::uint32_t& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  std::uint32_t at(int r, int c) const { return a[std::size_t(r) * cols + c]; }
};

/// In-place reduced row echelon form; returns the rank.
int fp_rref(FpMat& m, const FpContext& fp);

/// Canonical nullspace basis (one vector per free column, ascending).
std::vector<std::vector<std::uint32_t>> fp_nullspace(const FpMat& m,
                                                     const FpContext& fp);

/// Structure-constant table over F_p.
struct FpLieAlgebra {
  std::uint32_t p = 0;
  int dim = 0;
  /// Signed entries for keys i < j, mirroring LieAlgebra::Table.
  std::map<std::pair<int, int>, std::vector<std::pair<int, std::uint32_t>>>
      table;
};

/// Reduces a rational table mod p; throws on a bad prime.
FpLieAlgebra reduce_mod_p(const LieAlgebra& L, std::uint32_t p);

/// First violated Jacobi triple (i < j < k, 0-based), if any.
std::optional<std::tuple<int, int, int>> fp_validate_jacobi(
    const FpLieAlgebra& A);

}  // namespace liederiv
