#include "liederiv/fp.hpp"

#include <stdexcept>

namespace liederiv {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

FpContext::FpContext(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p > (1u << 15)) {
    throw std::invalid_argument("modulus must be a prime up to 2^15");
  }
  magic_ = std::uint64_t((__uint128_t(1) << 64) / p);  // floor(2^64 / p)
}

std::uint32_t FpContext::inv(std::uint32_t a) const {
  if (a == 0) throw std::invalid_argument("division by zero mod p");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a % p_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p_;
  return std::uint32_t(t);
}

std::uint32_t fp_from_rat(const Rat& r, const FpContext& fp) {
  Int num = r.get_num(), den = r.get_den();
  std::uint32_t n = std::uint32_t(mpz_fdiv_ui(num.get_mpz_t(), fp.p()));
  std::uint32_t d = std::uint32_t(mpz_fdiv_ui(den.get_mpz_t(), fp.p()));
  if (d == 0) {
    throw std::invalid_argument(
        "denominator vanishes mod " + std::to_string(fp.p()) +
        "; pick another prime");
  }
  return fp.mul(n, fp.inv(d));
}

int fp_rref(FpMat& m, const FpContext& fp) {
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (m.at(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    }
    std::uint32_t iv = fp.inv(m.at(rank, c));
    for (int j = c; j < m.cols; ++j) m.at(rank, j) = fp.mul(m.at(rank, j), iv);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, c) == 0) continue;
      std::uint32_t f = m.at(r, c);
      for (int j = c; j < m.cols; ++j) {
        m.at(r, j) = fp.sub(m.at(r, j), fp.mul(f, m.at(rank, j)));
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<std::uint32_t>> fp_nullspace(const FpMat& m,
                                                     const FpContext& fp) {
  FpMat r = m;
  int rank = fp_rref(r, fp);
  std::vector<int> pivots;
  std::vector<char> is_pivot(std::size_t(m.cols), 0);
  for (int row = 0, c = 0; row < rank; ++row) {
    while (c < m.cols && r.at(row, c) == 0) ++c;
    pivots.push_back(c);
    is_pivot[std::size_t(c)] = 1;
  }
  std::vector<std::vector<std::uint32_t>> basis;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[std::size_t(f)]) continue;
    std::vector<std::uint32_t> v(std::size_t(m.cols), 0);
    v[std::size_t(f)] = 1;
    for (int row = 0; row < rank; ++row) {
      v[std::size_t(pivots[std::size_t(row)])] = fp.neg(r.at(row, f));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

FpLieAlgebra reduce_mod_p(const LieAlgebra& L, std::uint32_t p) {
  FpContext fp(p);
  FpLieAlgebra out;
  out.p = p;
  out.dim = L.dim();
  for (const auto& [pair, terms] : L.table()) {
    std::vector<std::pair<int, std::uint32_t>> reduced;
    for (const auto& [k, c] : terms) {
      std::uint32_t v = fp_from_rat(c, fp);
      if (v != 0) reduced.push_back({k, v});
    }
    if (!reduced.empty()) out.table[pair] = std::move(reduced);
  }
  return out;
}

std::optional<std::tuple<int, int, int>> fp_validate_jacobi(
    const FpLieAlgebra& A) {
  FpContext fp(A.p);
  int n = A.dim;
  auto sc = [&](int i, int j, int k) -> std::uint32_t {
    if (i == j) return 0;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = A.table.find({i, j});
    if (it == A.table.end()) return 0;
    for (const auto& [idx, c] : it->second) {
      if (idx == k) return flip ? fp.neg(c) : c;
    }
    return 0;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        for (int m = 0; m < n; ++m) {
          std::uint64_t acc = 0;
          for (int a = 0; a < n; ++a) {
            acc += std::uint64_t(fp.mul(sc(j, k, a), sc(i, a, m)));
            acc += std::uint64_t(fp.mul(sc(i, j, a), sc(k, a, m)));
            acc += std::uint64_t(fp.mul(sc(k, i, a), sc(j, a, m)));
          }
          if (fp.reduce(acc) != 0) return std::tuple{i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace liederiv
