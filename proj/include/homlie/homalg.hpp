#ifndef HOMLIE_HOMALG_HPP
#define HOMLIE_HOMALG_HPP

#include "homlie/exactla.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace homlie {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structure-constant tensor: c[i][j][k] is the coefficient of e_k in e_i*e_j.
using StructureTensor = std::vector<std::vector<Vector>>;

/// Finite-dimensional (not necessarily associative) algebra over Q.
class FinAlgebra {
 public:
  /// Validates shapes and label uniqueness.
  FinAlgebra(std::vector<std::string> labels, StructureTensor c);

  /// Zero product on the given labels.
  static FinAlgebra zero(std::vector<std::string> labels);

  [[nodiscard]] std::size_t dim() const { return labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const StructureTensor& constants() const { return c_; }
  [[nodiscard]] const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[i][j][k]; }

  /// e_i * e_j as a coordinate vector.
  [[nodiscard]] const Vector& product(std::size_t i, std::size_t j) const { return c_[i][j]; }

  [[nodiscard]] std::optional<std::size_t> index_of(const std::string& label) const;
  [[nodiscard]] Vector basis_vector(const std::string& label) const;

  friend bool operator==(const FinAlgebra&, const FinAlgebra&) = default;

 private:
  std::vector<std::string> labels_;
  StructureTensor c_;
};

FinAlgebra make_algebra(std::size_t dim, std::vector<std::string> labels, StructureTensor c);

/// Bilinear extension of the structure constants.
Vector apply_mul(const FinAlgebra& a, const Vector& x, const Vector& y);

/// Square matrix whose columns are the images of the basis vectors.
class LinearSelfMap {
 public:
  explicit LinearSelfMap(Matrix m);
  static LinearSelfMap identity(std::size_t n) { return LinearSelfMap(Matrix::identity(n)); }
  static LinearSelfMap diagonal(const Vector& d);

  [[nodiscard]] std::size_t dim() const { return m_.rows(); }
  [[nodiscard]] const Matrix& matrix() const { return m_; }
  [[nodiscard]] Vector operator()(const Vector& x) const { return m_.apply(x); }
  [[nodiscard]] Vector image(std::size_t i) const { return m_.column(i); }
  [[nodiscard]] bool is_identity() const { return m_ == Matrix::identity(dim()); }

  friend LinearSelfMap operator*(const LinearSelfMap& a, const LinearSelfMap& b) {
    return LinearSelfMap(a.m_ * b.m_);
  }
  friend bool operator==(const LinearSelfMap&, const LinearSelfMap&) = default;

 private:
  Matrix m_;
};

/// The six subgroups of the symmetric group on three letters.
enum class S3Tag { E, T12, T13, T23, A3, S3 };

struct Permutation3 {
  std::array<int, 3> image;  // 0-based: sigma(i) = image[i]
  int sign;                  // +1 or -1
};

class SubgroupS3 {
 public:
  explicit SubgroupS3(S3Tag tag);
  static SubgroupS3 parse(const std::string& name);  // e, 12, 13, 23, a3, s3

  [[nodiscard]] S3Tag tag() const { return tag_; }
  [[nodiscard]] const std::vector<Permutation3>& elements() const { return elements_; }
  [[nodiscard]] std::string name() const;

 private:
  S3Tag tag_;
  std::vector<Permutation3> elements_;
};

/// Algebra carrying a (possibly twisted) product together with its structure map.
struct Provenance {
  FinAlgebra untwisted;
  LinearSelfMap twisting_map;
};

class HomAlgebra {
 public:
  /// No axiom or multiplicativity checks.
  static HomAlgebra unchecked(FinAlgebra algebra, LinearSelfMap alpha);
  /// Requires alpha to be multiplicative with respect to the product.
  static HomAlgebra checked(FinAlgebra algebra, LinearSelfMap alpha);

  [[nodiscard]] const FinAlgebra& algebra() const { return algebra_; }
  [[nodiscard]] const LinearSelfMap& alpha() const { return alpha_; }
  [[nodiscard]] const std::optional<Provenance>& provenance() const { return provenance_; }
  [[nodiscard]] std::size_t dim() const { return algebra_.dim(); }

 private:
  HomAlgebra(FinAlgebra a, LinearSelfMap al, std::optional<Provenance> p)
      : algebra_(std::move(a)), alpha_(std::move(al)), provenance_(std::move(p)) {}
  friend HomAlgebra twist(const FinAlgebra&, const LinearSelfMap&);

  FinAlgebra algebra_;
  LinearSelfMap alpha_;
  std::optional<Provenance> provenance_;
};

bool is_multiplicative(const FinAlgebra& a, const LinearSelfMap& alpha);
bool is_skew_symmetric(const FinAlgebra& a);

/// Signed sum over G of (x_s1 x_s2) alpha(x_s3) - alpha(x_s1)(x_s2 x_s3).
Vector hom_assoc_defect(const FinAlgebra& a, const LinearSelfMap& alpha, const SubgroupS3& g,
                        const Vector& x, const Vector& y, const Vector& z);

struct TripleCounterexample {
  std::size_t i, j, k;
  Vector defect;
};

/// Lowest lexicographic basis triple with nonzero defect.
std::optional<TripleCounterexample> find_hom_assoc_counterexample(const FinAlgebra& a, const LinearSelfMap& alpha,
                                                                  const SubgroupS3& g);

bool is_g_hom_associative(const FinAlgebra& a, const LinearSelfMap& alpha, const SubgroupS3& g);
bool is_hom_lie(const FinAlgebra& a, const LinearSelfMap& alpha);

/// Product alpha o mu. Throws AlgebraError if alpha is not multiplicative.
HomAlgebra twist(const FinAlgebra& a, const LinearSelfMap& alpha);

/// [x,y] = xy - yx.
FinAlgebra commutator_algebra(const FinAlgebra& a);

bool is_derivation(const FinAlgebra& a, const LinearSelfMap& d);

/// exp(D) as a finite sum; D must be a nilpotent derivation.
LinearSelfMap exp_derivation(const FinAlgebra& a, const LinearSelfMap& d);

/// Left multiplication by u as a linear map (columns: u*e_j).
Matrix left_multiplication(const FinAlgebra& a, const Vector& u);
Matrix right_multiplication(const FinAlgebra& a, const Vector& u);

/// Two-sided unit, if the algebra has one.
std::optional<Vector> find_unit(const FinAlgebra& a);

/// x -> u x u^{-1}. Throws if there is no unit or u is not invertible.
LinearSelfMap inner_automorphism(const FinAlgebra& a, const Vector& u);

/// ad(u)(x) = ux - xu.
LinearSelfMap adjoint_map(const FinAlgebra& a, const Vector& u);

}  // namespace homlie

#endif  // HOMLIE_HOMALG_HPP
