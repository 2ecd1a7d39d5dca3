#include "homlie/hybe.hpp"

namespace homlie {

HybeOperator build_B_alpha(const HomAlgebra& l) {
  if (!is_hom_lie(l.algebra(), l.alpha())) throw AlgebraError("build_B_alpha: algebra is not Hom-Lie");
  const std::size_t n = l.dim();
  const std::size_t d = n + 1;

  Matrix ext = Matrix::identity(d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ext(i + 1, j + 1) = l.alpha().matrix()(i, j);

  Matrix b(d * d, d * d);
  auto at = [d](std::size_t p, std::size_t q) { return p * d + q; };
  b(at(0, 0), at(0, 0)) = 1;
  for (std::size_t j = 1; j < d; ++j) {
    for (std::size_t k = 1; k < d; ++k) {
      // 1 (x) e_j  ->  alpha(e_j) (x) 1
      b(at(k, 0), at(0, j)) = ext(k, j);
      // e_j (x) 1  ->  1 (x) alpha(e_j)
      b(at(0, k), at(j, 0)) = ext(k, j);
    }
  }
  for (std::size_t i = 1; i < d; ++i)
    for (std::size_t j = 1; j < d; ++j) {
      const std::size_t col = at(i, j);
      for (std::size_t p = 1; p < d; ++p)
        for (std::size_t q = 1; q < d; ++q) b(at(p, q), col) += ext(p, j) * ext(q, i);
      const Vector& br = l.algebra().product(i - 1, j - 1);
      for (std::size_t k = 0; k < n; ++k) b(at(0, k + 1), col) += br[k];
    }

  HybeOperator op{d, 2, std::move(b), LinearSelfMap(std::move(ext))};
  if (!commutes_with_alpha(op)) throw AlgebraError("build_B_alpha: operator does not commute with alpha (x) alpha");
  return op;
}

bool commutes_with_alpha(const HybeOperator& b) {
  const Matrix a = kronecker_power(b.alpha_ext.matrix(), b.strands);
  return b.matrix * a == a * b.matrix;
}

bool check_hybe(const HybeOperator& b) {
  if (b.strands != 2) throw AlgebraError("check_hybe: operator must act on two strands");
  const Matrix& a = b.alpha_ext.matrix();
  const Matrix left = kronecker(a, b.matrix);   // alpha (x) B
  const Matrix right = kronecker(b.matrix, a);  // B (x) alpha
  return left * right * left == right * left * right;
}

std::vector<HybeOperator> braid_operators(const HybeOperator& b, std::size_t n) {
  if (n < 2) throw AlgebraError("braid_operators: need at least two strands");
  std::size_t ambient = 1;
  for (std::size_t i = 0; i < n; ++i) {
    ambient *= b.carrier_dim;
    if (ambient > kMaxBraidDim) {
      throw AlgebraError("braid_operators: carrier_dim^n exceeds " + std::to_string(kMaxBraidDim));
    }
  }
  if (!check_hybe(b)) throw AlgebraError("braid_operators: operator fails the Hom-Yang-Baxter equation");
  const Matrix& a = b.alpha_ext.matrix();
  std::vector<HybeOperator> ops;
  for (std::size_t i = 1; i < n; ++i) {
    Matrix m = kronecker(kronecker(kronecker_power(a, i - 1), b.matrix), kronecker_power(a, n - i - 1));
    ops.push_back(HybeOperator{b.carrier_dim, n, std::move(m), b.alpha_ext});
  }
  return ops;
}

bool check_braid_relations(const std::vector<HybeOperator>& ops) {
  if (ops.empty()) return true;
  const std::size_t dim = ops.front().matrix.rows();
  for (const auto& op : ops) {
    if (op.matrix.rows() != dim || op.matrix.cols() != dim) return false;
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      const Matrix& bi = ops[i].matrix;
      const Matrix& bj = ops[j].matrix;
      if (j == i + 1) {
        if (bi * bj * bi != bj * bi * bj) return false;
      } else if (bi * bj != bj * bi) {
        return false;
      }
    }
  }
  return true;
}

bool is_invertible_operator(const HybeOperator& b) {
  return b.matrix.is_square() && rank(b.matrix) == b.matrix.rows();
}

}  // namespace homlie
