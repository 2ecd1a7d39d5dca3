#ifndef HOMLIE_HOMOLOGY_HPP
#define HOMLIE_HOMOLOGY_HPP

#include "homlie/homalg.hpp"

namespace homlie {

/// Right Hom-L-module (M, alpha_M, rho). action[a][i] is m_a * e_i as a
/// coordinate vector in M.
struct HomModule {
  std::size_t m_dim = 0;
  LinearSelfMap alpha;
  std::vector<std::vector<Vector>> action;

  [[nodiscard]] Vector act(const Vector& m, const Vector& x) const;
};

enum class ModuleKind { Adjoint, Trivial };

/// Which compatibility condition failed, and where.
struct ModuleViolation {
  int axiom;  // 1: alpha_M(m)[x,y] = (mx)alpha(y) - (my)alpha(x); 2: alpha_M(mx) = alpha_M(m)alpha(x)
  std::size_t m, x, y;  // y is unused for axiom 2
  Vector defect;
};

/// Defects of both module axioms at basis elements (m_a; e_i, e_j).
std::pair<Vector, Vector> hom_module_defects(const HomAlgebra& l, const HomModule& m, std::size_t a, std::size_t i,
                                             std::size_t j);

std::optional<ModuleViolation> find_module_violation(const HomAlgebra& l, const HomModule& m);
bool check_hom_module(const HomAlgebra& l, const HomModule& m);

HomModule make_module(const HomAlgebra& l, ModuleKind kind);
/// Explicit data; throws AlgebraError if the axioms fail.
HomModule make_module(const HomAlgebra& l, LinearSelfMap alpha_m, std::vector<std::vector<Vector>> action);

/// Strictly increasing index tuples of length p from {0..n-1}, lexicographic.
std::vector<std::vector<std::size_t>> wedge_basis(std::size_t n, std::size_t p);

/// Matrix of the induced map on the p-th exterior power, in wedge_basis order.
Matrix exterior_power(const Matrix& a, std::size_t p);

/// CE chains C_p = M (x) Lambda^p L, basis ordered module-index-major.
struct ChainComplex {
  std::vector<std::size_t> dims;   // C_0 .. C_N
  std::vector<Matrix> boundaries;  // boundaries[p-1] = d_p : C_p -> C_{p-1}
  std::size_t algebra_dim = 0;
  std::size_t module_dim = 0;
  bool truncated = false;          // N < dim L

  [[nodiscard]] std::size_t top_degree() const { return dims.empty() ? 0 : dims.size() - 1; }
  [[nodiscard]] const Matrix& d(std::size_t p) const { return boundaries.at(p - 1); }
};

ChainComplex build_ce_complex(const HomAlgebra& l, const HomModule& m, std::size_t max_degree);
ChainComplex build_ce_complex(const HomAlgebra& l, const HomModule& m);

bool verify_d_squared(const ChainComplex& c);

struct HomologyRow {
  std::size_t degree;
  std::size_t chain_dim;
  std::size_t rank_d;       // rank of d_p (0 for p = 0)
  std::size_t rank_d_next;  // rank of d_{p+1} (0 past the top)
  std::size_t homology_dim;
};

struct HomologyReport {
  std::vector<HomologyRow> rows;
  bool truncated = false;  // top row is an upper bound: d_{N+1} was not built

  [[nodiscard]] std::vector<std::size_t> dims() const;
};

/// Throws AlgebraError if d^2 != 0.
HomologyReport homology_dims(const ChainComplex& c);

std::size_t h0_dim(const HomAlgebra& l, const HomModule& m);

}  // namespace homlie

#endif  // HOMLIE_HOMOLOGY_HPP
