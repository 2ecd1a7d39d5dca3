#ifndef HOMLIE_EXAMPLES_HPP
#define HOMLIE_EXAMPLES_HPP

#include "homlie/homalg.hpp"

#include <functional>
#include <map>

namespace homlie {

/// A classical algebra together with an endomorphism, before twisting.
struct AlgebraWithMap {
  FinAlgebra algebra;
  LinearSelfMap alpha;
};

/// sl(n) on the basis h_1..h_{n-1}, then E_ij (i != j) in row-major order,
/// with the diagonal structure map determined by lambda_1..lambda_{n-1}.
/// For n = 2 the labels are h, e, f.
AlgebraWithMap sl_n(std::size_t n, const std::vector<Rational>& lambdas);

/// Heisenberg algebra on (e, f, h) with alpha = diag(l1, l2, l1*l2).
AlgebraWithMap heisenberg(const Rational& l1, const Rational& l2);

FinAlgebra abelian(std::size_t n);

/// M_n(Q) on the matrix units E_ij, row-major.
FinAlgebra matrix_algebra(std::size_t n);

/// Coordinates of an n x n matrix in the matrix-unit basis.
Vector matrix_to_vector(const Matrix& m);

using CayleyTable = std::vector<std::vector<std::size_t>>;

CayleyTable cyclic_group_table(std::size_t order);

/// Group algebra Q[G] with the permutation map induced by a group endomorphism.
AlgebraWithMap group_algebra(const CayleyTable& cayley, const std::vector<std::size_t>& endo);

/// Q[x]/(x^d) with alpha(x) = p(x); coeffs[k] is the coefficient of x^k.
AlgebraWithMap truncated_poly(std::size_t d, const std::vector<Rational>& coeffs);

/// gl(n) as the commutator algebra of M_n(Q) with conjugation by x.
AlgebraWithMap matrix_lie(const Matrix& x);

// ---------------------------------------------------------------------------
// Countable-basis algebras given by rules.

/// Finitely supported vector indexed by integer basis labels.
using SparseVector = std::map<int, Rational>;

struct SparseAlgebra {
  std::function<SparseVector(int, int)> bracket_rule;
  std::function<SparseVector(int)> alpha_rule;
  std::function<bool(int)> index_domain;
};

SparseVector sparse_basis(int n);
SparseVector& sparse_axpy(SparseVector& y, const Rational& a, const SparseVector& x);

SparseVector sparse_bracket(const SparseAlgebra& a, const SparseVector& x, const SparseVector& y);
SparseVector sparse_alpha(const SparseAlgebra& a, const SparseVector& x);
/// alpha([x, y]).
SparseVector sparse_twisted_bracket(const SparseAlgebra& a, const SparseVector& x, const SparseVector& y);

/// Classical Jacobi sum [x,[y,z]] + [y,[z,x]] + [z,[x,y]].
SparseVector sparse_jacobi_defect(const SparseAlgebra& a, const SparseVector& x, const SparseVector& y,
                                  const SparseVector& z);
/// Hom-Jacobi sum of the twisted bracket.
SparseVector sparse_hom_jacobi_defect(const SparseAlgebra& a, const SparseVector& x, const SparseVector& y,
                                      const SparseVector& z);
/// alpha([x,y]) - [alpha(x), alpha(y)].
SparseVector sparse_multiplicativity_defect(const SparseAlgebra& a, const SparseVector& x, const SparseVector& y);

/// Vector fields L_n = t^{n+1} d/dt, n >= -1, with the shift t -> t + lambda.
SparseAlgebra witt_line(const Rational& lambda);

}  // namespace homlie

#endif  // HOMLIE_EXAMPLES_HPP
