#include "homlie/examples.hpp"

#include <string>

namespace homlie {

namespace {

void require_nonzero(const Rational& r, const char* what) {
  if (r.is_zero()) throw AlgebraError(std::string(what) + " must be nonzero");
}

void require_multiplicative(const AlgebraWithMap& r, const char* builder) {
  if (!is_multiplicative(r.algebra, r.alpha)) {
    throw AlgebraError(std::string(builder) + ": constructed map is not multiplicative");
  }
}

// Structure constants of a matrix-realized Lie algebra: bracket the
// matrices and read off coordinates with `coords`.
template <typename Coords>
StructureTensor bracket_constants(const std::vector<Matrix>& basis, Coords coords) {
  const std::size_t d = basis.size();
  StructureTensor c(d, std::vector<Vector>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c[i][j] = coords(basis[i] * basis[j] - basis[j] * basis[i]);
  return c;
}

}  // namespace

AlgebraWithMap sl_n(std::size_t n, const std::vector<Rational>& lambdas) {
  if (n < 2) throw AlgebraError("sl_n: n must be at least 2");
  if (lambdas.size() != n - 1) throw AlgebraError("sl_n: expected n-1 parameters");
  for (const auto& l : lambdas) require_nonzero(l, "sl_n parameter");

  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  std::vector<Rational> scale;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Matrix h(n, n);
    h(i, i) = 1;
    h(i + 1, i + 1) = -1;
    basis.push_back(std::move(h));
    labels.push_back(n == 2 ? "h" : "h" + std::to_string(i + 1));
    scale.emplace_back(1);
  }
  // Off-diagonal E_ij in row-major order; (i, j) -> position in basis.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> off;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix e(n, n);
      e(i, j) = 1;
      off[{i, j}] = basis.size();
      basis.push_back(std::move(e));
      if (n == 2) {
        labels.push_back(i < j ? "e" : "f");
      } else {
        labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      }
      Rational prod = 1;
      for (std::size_t k = std::min(i, j); k < std::max(i, j); ++k) prod *= lambdas[k];
      scale.push_back(i < j ? prod : prod.inverse());
    }

  const std::size_t d = basis.size();
  auto coords = [&](const Matrix& m) {
    Vector v(d);
    Rational partial = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      partial += m(i, i);
      v[i] = partial;
    }
    for (const auto& [ij, pos] : off) v[pos] = m(ij.first, ij.second);
    return v;
  };
  AlgebraWithMap r{FinAlgebra(std::move(labels), bracket_constants(basis, coords)), LinearSelfMap::diagonal(scale)};
  require_multiplicative(r, "sl_n");
  return r;
}

AlgebraWithMap heisenberg(const Rational& l1, const Rational& l2) {
  require_nonzero(l1, "heisenberg parameter l1");
  require_nonzero(l2, "heisenberg parameter l2");
  FinAlgebra a = FinAlgebra::zero({"e", "f", "h"});
  StructureTensor c = a.constants();
  c[0][1][2] = 1;
  c[1][0][2] = -1;
  AlgebraWithMap r{FinAlgebra(a.labels(), std::move(c)), LinearSelfMap::diagonal({l1, l2, l1 * l2})};
  require_multiplicative(r, "heisenberg");
  return r;
}

FinAlgebra abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
  return FinAlgebra::zero(std::move(labels));
}

FinAlgebra matrix_algebra(std::size_t n) {
  if (n < 1) throw AlgebraError("matrix_algebra: n must be at least 1");
  const std::size_t d = n * n;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  StructureTensor c(d, std::vector<Vector>(d, Vector(d)));
  // E_ij E_kl = delta_jk E_il
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) c[i * n + j][j * n + l][i * n + l] = 1;
  return FinAlgebra(std::move(labels), std::move(c));
}

Vector matrix_to_vector(const Matrix& m) {
  if (!m.is_square()) throw AlgebraError("matrix_to_vector: matrix must be square");
  Vector v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

CayleyTable cyclic_group_table(std::size_t order) {
  CayleyTable t(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) t[a][b] = (a + b) % order;
  return t;
}

AlgebraWithMap group_algebra(const CayleyTable& cayley, const std::vector<std::size_t>& endo) {
  const std::size_t n = cayley.size();
  if (n == 0) throw AlgebraError("group_algebra: empty table");
  for (const auto& row : cayley) {
    if (row.size() != n) throw AlgebraError("group_algebra: table is not square");
    for (auto g : row)
      if (g >= n) throw AlgebraError("group_algebra: table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]]) throw AlgebraError("group_algebra: table is not associative");
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = cayley[e][g] == g && cayley[g][e] == g;
    if (ok) identity = e;
  }
  if (!identity) throw AlgebraError("group_algebra: table has no identity");
  for (std::size_t g = 0; g < n; ++g) {
    bool has_inverse = false;
    for (std::size_t h = 0; h < n && !has_inverse; ++h)
      has_inverse = cayley[g][h] == *identity && cayley[h][g] == *identity;
    if (!has_inverse) throw AlgebraError("group_algebra: element without inverse");
  }
  if (endo.size() != n) throw AlgebraError("group_algebra: endomorphism has wrong length");
  for (auto g : endo)
    if (g >= n) throw AlgebraError("group_algebra: endomorphism image out of range");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (endo[cayley[a][b]] != cayley[endo[a]][endo[b]]) throw AlgebraError("group_algebra: map is not a group morphism");

  std::vector<std::string> labels;
  for (std::size_t g = 0; g < n; ++g) labels.push_back("g" + std::to_string(g));
  StructureTensor c(n, std::vector<Vector>(n, Vector(n)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) c[a][b][cayley[a][b]] = 1;
  Matrix alpha(n, n);
  for (std::size_t g = 0; g < n; ++g) alpha(endo[g], g) = 1;
  AlgebraWithMap r{FinAlgebra(std::move(labels), std::move(c)), LinearSelfMap(std::move(alpha))};
  require_multiplicative(r, "group_algebra");
  return r;
}

AlgebraWithMap truncated_poly(std::size_t d, const std::vector<Rational>& coeffs) {
  if (d < 1) throw AlgebraError("truncated_poly: degree bound must be at least 1");
  if (!coeffs.empty() && !coeffs[0].is_zero()) {
    throw AlgebraError("truncated_poly: substitution polynomial must have zero constant term");
  }
  std::vector<std::string> labels{"1"};
  for (std::size_t k = 1; k < d; ++k) labels.push_back(k == 1 ? "x" : "x^" + std::to_string(k));
  StructureTensor c(d, std::vector<Vector>(d, Vector(d)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; i + j < d; ++j) c[i][j][i + j] = 1;

  auto mul_trunc = [d](const Vector& a, const Vector& b) {
    Vector out(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < d; ++j)
        if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
    return out;
  };
  Vector p(d);
  for (std::size_t k = 0; k < coeffs.size() && k < d; ++k) p[k] = coeffs[k];
  Matrix alpha(d, d);
  Vector power = unit_vector(d, 0);
  for (std::size_t k = 0; k < d; ++k) {
    alpha.set_column(k, power);
    power = mul_trunc(power, p);
  }
  AlgebraWithMap r{FinAlgebra(std::move(labels), std::move(c)), LinearSelfMap(std::move(alpha))};
  require_multiplicative(r, "truncated_poly");
  return r;
}

AlgebraWithMap matrix_lie(const Matrix& x) {
  const FinAlgebra m = matrix_algebra(x.rows());
  AlgebraWithMap r{commutator_algebra(m), inner_automorphism(m, matrix_to_vector(x))};
  require_multiplicative(r, "matrix_lie");
  return r;
}

// ---------------------------------------------------------------------------

SparseVector sparse_basis(int n) { return SparseVector{{n, Rational(1)}}; }

SparseVector& sparse_axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (a.is_zero()) return y;
  for (const auto& [i, v] : x) {
    Rational& slot = y[i];
    slot += a * v;
    if (slot.is_zero()) y.erase(i);
  }
  return y;
}

SparseVector sparse_bracket(const SparseAlgebra& a, const SparseVector& x, const SparseVector& y) {
  SparseVector out;
  for (const auto& [m, xm] : x)
    for (const auto& [n, yn] : y) sparse_axpy(out, xm * yn, a.bracket_rule(m, n));
  return out;
}

SparseVector sparse_alpha(const SparseAlgebra& a, const SparseVector& x) {
  SparseVector out;
  for (const auto& [n, xn] : x) sparse_axpy(out, xn, a.alpha_rule(n));
  return out;
}

SparseVector sparse_twisted_bracket(const SparseAlgebra& a, const SparseVector& x, const SparseVector& y) {
  return sparse_alpha(a, sparse_bracket(a, x, y));
}

SparseVector sparse_jacobi_defect(const SparseAlgebra& a, const SparseVector& x, const SparseVector& y,
                                  const SparseVector& z) {
  SparseVector out;
  sparse_axpy(out, 1, sparse_bracket(a, x, sparse_bracket(a, y, z)));
  sparse_axpy(out, 1, sparse_bracket(a, y, sparse_bracket(a, z, x)));
  sparse_axpy(out, 1, sparse_bracket(a, z, sparse_bracket(a, x, y)));
  return out;
}

SparseVector sparse_hom_jacobi_defect(const SparseAlgebra& a, const SparseVector& x, const SparseVector& y,
                                      const SparseVector& z) {
  auto br = [&](const SparseVector& u, const SparseVector& v) { return sparse_twisted_bracket(a, u, v); };
  SparseVector out;
  sparse_axpy(out, 1, br(sparse_alpha(a, x), br(y, z)));
  sparse_axpy(out, 1, br(sparse_alpha(a, z), br(x, y)));
  sparse_axpy(out, 1, br(sparse_alpha(a, y), br(z, x)));
  return out;
}

SparseVector sparse_multiplicativity_defect(const SparseAlgebra& a, const SparseVector& x, const SparseVector& y) {
  SparseVector out = sparse_alpha(a, sparse_bracket(a, x, y));
  sparse_axpy(out, -1, sparse_bracket(a, sparse_alpha(a, x), sparse_alpha(a, y)));
  return out;
}

SparseAlgebra witt_line(const Rational& lambda) {
  auto check = [](int n) {
    if (n < -1) throw AlgebraError("witt_line: basis index " + std::to_string(n) + " is below -1");
  };
  SparseAlgebra a;
  a.index_domain = [](int n) { return n >= -1; };
  a.bracket_rule = [check](int m, int n) {
    check(m);
    check(n);
    SparseVector out;
    // [L_m, L_n] = (n - m) L_{m+n}; m + n = -2 only when m = n = -1.
    if (m != n) out[m + n] = Rational(static_cast<long>(n) - m);
    return out;
  };
  a.alpha_rule = [check, lambda](int n) {
    check(n);
    // (t + lambda)^{n+1} d/dt expanded binomially.
    SparseVector out;
    const auto top = static_cast<unsigned long>(n + 1);
    for (unsigned long k = 0; k <= top; ++k) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), top, k);
      mpq_class pw = 1;
      for (unsigned long e = 0; e < top - k; ++e) pw *= lambda.raw();
      Rational coef(mpq_class(binom * pw));
      if (!coef.is_zero()) out[static_cast<int>(k) - 1] = coef;
    }
    return out;
  };
  return a;
}

}  // namespace homlie
