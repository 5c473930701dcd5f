#include "liederiv/certificate.hpp"

#include <stdexcept>
#include <vector>

#include "liederiv/context.hpp"

namespace liederiv {

namespace {

/// Coordinates of [x, N(x)] as polynomials in x, for polynomial N.
std::vector<Poly> bracket_with_section(const LieAlgebra& L,
                                       const std::vector<Poly>& N) {
  int n = L.dim();
  std::vector<Poly> out(n, Poly(n));
  for (const auto& [pair, terms] : L.table()) {
    auto [i, j] = pair;
    Poly p = Poly::var(i, n) * N[j] - Poly::var(j, n) * N[i];
    for (const auto& [k, c] : terms) out[k] = out[k] + p * c;
  }
  return out;
}

bool same_poly_multiset(std::vector<Poly> a, const std::vector<Poly>& b) {
  if (a.size() != b.size()) return false;
  for (const Poly& p : b) {
    bool found = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == p) {
        a.erase(a.begin() + long(i));
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

std::string PiecewiseCertificate::to_string(const LieAlgebra* L) const {
  std::string out;
  for (const CertificatePiece& piece : pieces) {
    std::string guard;
    for (const Poly& z : piece.zero_conditions) {
      if (!guard.empty()) guard += ", ";
      guard += z.to_string() + " = 0";
    }
    for (const Poly& nz : piece.nonzero_conditions) {
      if (!guard.empty()) guard += ", ";
      guard += nz.to_string() + " != 0";
    }
    if (guard.empty()) guard = "otherwise";
    std::string phi;
    for (std::size_t j = 0; j < piece.phi_numerators.size(); ++j) {
      const Poly& num = piece.phi_numerators[j];
      if (num.is_zero()) continue;
      if (!phi.empty()) phi += " + ";
      std::string label = L ? L->label(int(j)) : "e" + std::to_string(j + 1);
      phi += "(" + num.to_string() + ")*" + label;
    }
    if (phi.empty()) phi = "0";
    if (!piece.phi_denominator.is_constant() ||
        piece.phi_denominator.constant_value() != 1) {
      phi = "[" + phi + "] / (" + piece.phi_denominator.to_string() + ")";
    }
    out += "case " + guard + ": phi(x) = " + phi + "\n";
  }
  return out;
}

bool verify_certificate(const LieAlgebra& L, const Matrix& D,
                        const PiecewiseCertificate& cert) {
  int n = L.dim();
  if (cert.nvars != n || cert.pieces.empty()) {
    throw std::invalid_argument("certificate does not match the algebra");
  }

  // Chain shape: piece k is guarded by the accumulated failures of the
  // single nonzero conditions of pieces 0..k-1, and the final piece has no
  // nonzero condition. This makes the case cover exhaustive by construction.
  std::vector<Poly> accumulated;
  for (std::size_t k = 0; k < cert.pieces.size(); ++k) {
    const CertificatePiece& piece = cert.pieces[k];
    if (int(piece.phi_numerators.size()) != n) {
      throw std::invalid_argument("certificate section has wrong dimension");
    }
    if (!same_poly_multiset(piece.zero_conditions, accumulated)) {
      throw std::invalid_argument("certificate pieces do not cover all cases");
    }
    bool last = (k + 1 == cert.pieces.size());
    if (last && !piece.nonzero_conditions.empty()) {
      throw std::invalid_argument("final certificate piece must be a catch-all");
    }
    if (!last && piece.nonzero_conditions.size() != 1) {
      throw std::invalid_argument("certificate pieces do not form a chain");
    }
    for (const Poly& nz : piece.nonzero_conditions) {
      accumulated.push_back(nz);
    }
  }

  for (const CertificatePiece& piece : cert.pieces) {
    ConstraintContext ctx(n);
    bool vacuous = false;
    for (const Poly& z : piece.zero_conditions) {
      if (!z.is_affine()) {
        throw std::invalid_argument("non-affine certificate case condition");
      }
      if (ctx.add_equality(z) == ConstraintContext::AddResult::Infeasible) {
        vacuous = true;
        break;
      }
    }
    if (!vacuous) {
      for (const Poly& nz : piece.nonzero_conditions) {
        if (ctx.is_zero_mod(nz)) vacuous = true;
      }
    }
    if (vacuous) continue;

    // The denominator must be a product of this piece's nonzero conditions
    // times a nonzero constant, so it cannot vanish on the piece.
    Poly rem = piece.phi_denominator;
    if (rem.is_zero()) {
      throw std::invalid_argument("zero certificate denominator");
    }
    bool progressed = true;
    while (!rem.is_constant() && progressed) {
      progressed = false;
      for (const Poly& nz : piece.nonzero_conditions) {
        if (auto d = rem.divide_exact(nz)) {
          rem = std::move(*d);
          progressed = true;
          break;
        }
      }
    }
    if (!rem.is_constant()) {
      throw std::invalid_argument(
          "denominator not justified by the piece conditions");
    }

    // Polynomial identity den * (D x) = [x, N(x)] on the piece's affine
    // closure; it vanishes on a dense subset of that closure iff it
    // vanishes identically, so reduction to zero is exact.
    std::vector<Poly> bracket = bracket_with_section(L, piece.phi_numerators);
    for (int k = 0; k < n; ++k) {
      Poly dx(n);
      for (int j = 0; j < n; ++j) {
        const Rat& d = D.at(k, j);
        if (!is_zero(d)) dx = dx + Poly::var(j, n) * d;
      }
      Poly residual =
          ctx.reduce(piece.phi_denominator * dx - bracket[std::size_t(k)]);
      if (!residual.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace liederiv
