#include "homlie/homalg.hpp"

#include <set>

namespace homlie {

FinAlgebra::FinAlgebra(std::vector<std::string> labels, StructureTensor c)
    : labels_(std::move(labels)), c_(std::move(c)) {
  const std::size_t n = labels_.size();
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n) {
    throw AlgebraError("duplicate basis labels");
  }
  if (c_.size() != n) throw AlgebraError("structure tensor has wrong outer dimension");
  for (const auto& plane : c_) {
    if (plane.size() != n) throw AlgebraError("ragged structure tensor");
    for (const auto& v : plane) {
      if (v.size() != n) throw AlgebraError("ragged structure tensor");
    }
  }
}

FinAlgebra FinAlgebra::zero(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  return FinAlgebra(std::move(labels), StructureTensor(n, std::vector<Vector>(n, Vector(n))));
}

std::optional<std::size_t> FinAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

Vector FinAlgebra::basis_vector(const std::string& label) const {
  auto i = index_of(label);
  if (!i) throw AlgebraError("no basis element labelled '" + label + "'");
  return unit_vector(dim(), *i);
}

FinAlgebra make_algebra(std::size_t dim, std::vector<std::string> labels, StructureTensor c) {
  if (labels.size() != dim) throw AlgebraError("label count does not match dimension");
  return FinAlgebra(std::move(labels), std::move(c));
}

Vector apply_mul(const FinAlgebra& a, const Vector& x, const Vector& y) {
  const std::size_t n = a.dim();
  if (x.size() != n || y.size() != n) throw AlgebraError("apply_mul: vector length does not match dimension");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      axpy(out, x[i] * y[j], a.product(i, j));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

LinearSelfMap::LinearSelfMap(Matrix m) : m_(std::move(m)) {
  if (!m_.is_square()) throw AlgebraError("linear self-map must be square");
}

LinearSelfMap LinearSelfMap::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return LinearSelfMap(std::move(m));
}

// ---------------------------------------------------------------------------

SubgroupS3::SubgroupS3(S3Tag tag) : tag_(tag) {
  const Permutation3 id{{0, 1, 2}, 1};
  const Permutation3 t12{{1, 0, 2}, -1};
  const Permutation3 t13{{2, 1, 0}, -1};
  const Permutation3 t23{{0, 2, 1}, -1};
  const Permutation3 c123{{1, 2, 0}, 1};
  const Permutation3 c132{{2, 0, 1}, 1};
  switch (tag) {
    case S3Tag::E: elements_ = {id}; break;
    case S3Tag::T12: elements_ = {id, t12}; break;
    case S3Tag::T13: elements_ = {id, t13}; break;
    case S3Tag::T23: elements_ = {id, t23}; break;
    case S3Tag::A3: elements_ = {id, c123, c132}; break;
    case S3Tag::S3: elements_ = {id, t12, t13, t23, c123, c132}; break;
  }
}

SubgroupS3 SubgroupS3::parse(const std::string& name) {
  if (name == "e") return SubgroupS3(S3Tag::E);
  if (name == "12") return SubgroupS3(S3Tag::T12);
  if (name == "13") return SubgroupS3(S3Tag::T13);
  if (name == "23") return SubgroupS3(S3Tag::T23);
  if (name == "a3") return SubgroupS3(S3Tag::A3);
  if (name == "s3") return SubgroupS3(S3Tag::S3);
  throw AlgebraError("unknown subgroup '" + name + "' (expected e, 12, 13, 23, a3, s3)");
}

std::string SubgroupS3::name() const {
  switch (tag_) {
    case S3Tag::E: return "e";
    case S3Tag::T12: return "12";
    case S3Tag::T13: return "13";
    case S3Tag::T23: return "23";
    case S3Tag::A3: return "a3";
    case S3Tag::S3: return "s3";
  }
  return "?";
}

// ---------------------------------------------------------------------------

HomAlgebra HomAlgebra::unchecked(FinAlgebra algebra, LinearSelfMap alpha) {
  if (alpha.dim() != algebra.dim()) throw AlgebraError("structure map dimension does not match algebra");
  return HomAlgebra(std::move(algebra), std::move(alpha), std::nullopt);
}

HomAlgebra HomAlgebra::checked(FinAlgebra algebra, LinearSelfMap alpha) {
  if (!is_multiplicative(algebra, alpha)) throw AlgebraError("structure map is not multiplicative");
  return HomAlgebra(std::move(algebra), std::move(alpha), std::nullopt);
}

bool is_multiplicative(const FinAlgebra& a, const LinearSelfMap& alpha) {
  const std::size_t n = a.dim();
  if (alpha.dim() != n) throw AlgebraError("is_multiplicative: dimension mismatch");
  std::vector<Vector> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = alpha.image(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (alpha(a.product(i, j)) != apply_mul(a, img[i], img[j])) return false;
    }
  return true;
}

bool is_skew_symmetric(const FinAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (a(i, j, k) != -a(j, i, k)) return false;
      }
  return true;
}

Vector hom_assoc_defect(const FinAlgebra& a, const LinearSelfMap& alpha, const SubgroupS3& g,
                        const Vector& x, const Vector& y, const Vector& z) {
  const std::size_t n = a.dim();
  if (alpha.dim() != n || x.size() != n || y.size() != n || z.size() != n) {
    throw AlgebraError("hom_assoc_defect: dimension mismatch");
  }
  const std::array<const Vector*, 3> xs{&x, &y, &z};
  Vector out(n);
  for (const auto& s : g.elements()) {
    const Vector& x1 = *xs[s.image[0]];
    const Vector& x2 = *xs[s.image[1]];
    const Vector& x3 = *xs[s.image[2]];
    const Rational sign = s.sign;
    axpy(out, sign, apply_mul(a, apply_mul(a, x1, x2), alpha(x3)));
    axpy(out, -sign, apply_mul(a, alpha(x1), apply_mul(a, x2, x3)));
  }
  return out;
}

std::optional<TripleCounterexample> find_hom_assoc_counterexample(const FinAlgebra& a, const LinearSelfMap& alpha,
                                                                  const SubgroupS3& g) {
  const std::size_t n = a.dim();
  if (alpha.dim() != n) throw AlgebraError("dimension mismatch between algebra and structure map");
  std::vector<Vector> basis(n);
  for (std::size_t i = 0; i < n; ++i) basis[i] = unit_vector(n, i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector d = hom_assoc_defect(a, alpha, g, basis[i], basis[j], basis[k]);
        if (!is_zero(d)) return TripleCounterexample{i, j, k, std::move(d)};
      }
  return std::nullopt;
}

bool is_g_hom_associative(const FinAlgebra& a, const LinearSelfMap& alpha, const SubgroupS3& g) {
  return !find_hom_assoc_counterexample(a, alpha, g).has_value();
}

bool is_hom_lie(const FinAlgebra& a, const LinearSelfMap& alpha) {
  return is_skew_symmetric(a) && is_g_hom_associative(a, alpha, SubgroupS3(S3Tag::A3));
}

HomAlgebra twist(const FinAlgebra& a, const LinearSelfMap& alpha) {
  if (alpha.dim() != a.dim()) throw AlgebraError("twist: dimension mismatch");
  if (!is_multiplicative(a, alpha)) throw AlgebraError("twist: structure map is not multiplicative");
  const std::size_t n = a.dim();
  StructureTensor c(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = alpha(a.product(i, j));
  FinAlgebra twisted(a.labels(), std::move(c));
  if (!is_multiplicative(twisted, alpha)) {
    throw AlgebraError("twist: structure map lost multiplicativity after twisting");
  }
  return HomAlgebra(std::move(twisted), alpha, Provenance{a, alpha});
}

FinAlgebra commutator_algebra(const FinAlgebra& a) {
  const std::size_t n = a.dim();
  StructureTensor c(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      c[i][j] = a.product(i, j);
      axpy(c[i][j], Rational(-1), a.product(j, i));
    }
  return FinAlgebra(a.labels(), std::move(c));
}

bool is_derivation(const FinAlgebra& a, const LinearSelfMap& d) {
  const std::size_t n = a.dim();
  if (d.dim() != n) throw AlgebraError("is_derivation: dimension mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector rhs = apply_mul(a, d.image(i), unit_vector(n, j));
      axpy(rhs, Rational(1), apply_mul(a, unit_vector(n, i), d.image(j)));
      if (d(a.product(i, j)) != rhs) return false;
    }
  return true;
}

LinearSelfMap exp_derivation(const FinAlgebra& a, const LinearSelfMap& d) {
  if (!is_derivation(a, d)) throw AlgebraError("exp_derivation: map is not a derivation");
  const std::size_t n = a.dim();
  Matrix sum = Matrix::identity(n);
  Matrix power = Matrix::identity(n);
  Rational factorial = 1;
  bool nilpotent = false;
  for (std::size_t k = 1; k <= n + 1; ++k) {
    power = power * d.matrix();
    if (power.is_zero()) {
      nilpotent = true;
      break;
    }
    factorial *= Rational(static_cast<long>(k));
    sum = sum + factorial.inverse() * power;
  }
  if (!nilpotent) throw AlgebraError("exp_derivation: derivation is not nilpotent");
  LinearSelfMap result(std::move(sum));
  if (!is_multiplicative(a, result)) throw AlgebraError("exp_derivation: result is not multiplicative");
  return result;
}

Matrix left_multiplication(const FinAlgebra& a, const Vector& u) {
  const std::size_t n = a.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, apply_mul(a, u, unit_vector(n, j)));
  return m;
}

Matrix right_multiplication(const FinAlgebra& a, const Vector& u) {
  const std::size_t n = a.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, apply_mul(a, unit_vector(n, j), u));
  return m;
}

std::optional<Vector> find_unit(const FinAlgebra& a) {
  const std::size_t n = a.dim();
  // Unknown u with u*e_j = e_j and e_j*u = e_j for every j.
  Matrix sys(2 * n * n, n);
  Vector rhs(2 * n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t left = j * n + k;
      const std::size_t right = n * n + left;
      for (std::size_t i = 0; i < n; ++i) {
        sys(left, i) = a(i, j, k);
        sys(right, i) = a(j, i, k);
      }
      if (j == k) rhs[left] = rhs[right] = 1;
    }
  return solve(sys, rhs);
}

LinearSelfMap inner_automorphism(const FinAlgebra& a, const Vector& u) {
  const std::size_t n = a.dim();
  if (u.size() != n) throw AlgebraError("inner_automorphism: vector length does not match dimension");
  const auto one = find_unit(a);
  if (!one) throw AlgebraError("inner_automorphism: algebra has no unit");
  const auto v = solve(left_multiplication(a, u), *one);
  if (!v || apply_mul(a, *v, u) != *one) throw AlgebraError("inner_automorphism: element is not invertible");
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, apply_mul(a, u, apply_mul(a, unit_vector(n, j), *v)));
  LinearSelfMap result(std::move(m));
  if (!is_multiplicative(a, result)) throw AlgebraError("inner_automorphism: conjugation is not multiplicative");
  return result;
}

LinearSelfMap adjoint_map(const FinAlgebra& a, const Vector& u) {
  return LinearSelfMap(left_multiplication(a, u) - right_multiplication(a, u));
}

}  // namespace homlie
