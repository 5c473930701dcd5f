#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liederiv/lie_algebra.hpp"
#include "liederiv/matrix.hpp"

namespace liederiv {

/// Abelian algebra of dimension n.
LieAlgebra abelian(int n);

/// Heisenberg algebra n3: [e1, e2] = e3.
LieAlgebra heisenberg();

/// Five-dimensional nilpotent algebra with
/// [e1,e2] = e4, [e1,e4] = e5, [e2,e3] = e5.
LieAlgebra g5_3();

/// Five-dimensional filiform-type algebra with
/// [e1,e2] = e3, [e1,e3] = e4, [e1,e4] = e5, [e2,e3] = e5.
LieAlgebra g5_6();

/// Standard filiform algebra f_n: [e1, e_i] = e_{i+1} for 2 <= i <= n-1.
LieAlgebra filiform_standard(int n);

/// Metabelian filiform algebra on f_n with extra brackets
/// [e2, e_k] = sum over m of alpha_m e_{m+k-3} for 3 <= k <= n-2,
/// where coeffs[t] is the coefficient alpha_{5+t}, t = 0..n-5.
LieAlgebra metabelian_filiform(int n, const Vec& coeffs);

struct JordanBlock {
  Rat lambda;
  int size = 1;
};

/// Almost abelian algebra: abelian ideal of dimension N = sum of block
/// sizes, plus e_{N+1} acting by the given Jordan matrix.
LieAlgebra almost_abelian(const std::vector<JordanBlock>& blocks);

struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based, i < j
};

/// Two-step nilpotent algebra of a simple graph: one generator per vertex,
/// one central element y_e per edge e = (i, j) with [x_i, x_j] = y_e.
LieAlgebra graph_algebra(const Graph& g);

/// Free nilpotent algebra on r generators of class 2 or 3 (Hall basis).
LieAlgebra free_nilpotent(int r, int step);

/// Free metabelian nilpotent algebra m_{2,c} on two generators of class c.
LieAlgebra free_metabelian(int c);

/// Five-dimensional two-parameter solvable family A(q, r):
/// [e1,e5] = e2, [e2,e5] = (q+r) e2, [e3,e4] = e2,
/// [e3,e5] = e1 + q e3, [e4,e5] = e3 + r e4.
LieAlgebra a_family(const Rat& q, const Rat& r);

/// Upper triangular (strict: nilpotent) matrices of size n under commutator.
LieAlgebra triangular(int n, bool strict);

/// Two-step family g(n) of dimension 4n + 2 on t1, t2, x_{1,i}, x_{2,i},
/// y_{1,i}, y_{2,i} with [t1, x_{1,i}] = y_{1,i}, [t1, x_{2,i}] = y_{2,i},
/// [t2, x_{2,i}] = y_{1,i}.
LieAlgebra gn_family(int n);

/// Checks that M is an isomorphism src -> dst on basis brackets, columns
/// holding images: M [x, y]_src = [M x, M y]_dst. Throws on singular M or
/// dimension mismatch; returns false when some bracket is not respected.
bool verify_isomorphism(const LieAlgebra& src, const LieAlgebra& dst,
                        const Matrix& M);

/// Builds a family member from a CLI-style name and parameter list.
/// Throws std::invalid_argument with a usage hint on bad input.
LieAlgebra make_family(const std::string& name,
                       const std::vector<std::string>& params);

/// One-line-per-family usage text for make_family.
std::string family_grammar_help();

}  // namespace liederiv
