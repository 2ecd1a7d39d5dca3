#ifndef HOMLIE_EXACTLA_HPP
#define HOMLIE_EXACTLA_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace homlie {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact rational number, always stored in lowest terms with positive
/// denominator. Backed by GMP.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  /// Parses "p/q" or "p". Rejects decimal points, exponents, zero
  /// denominators and stray whitespace.
  static Rational parse(std::string_view text);

  [[nodiscard]] std::string str() const;
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] Rational inverse() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector& axpy(Vector& y, const Rational& a, const Vector& x);  // y += a*x
Vector scaled(const Rational& a, const Vector& x);
std::string to_string(const Vector& v);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] Vector column(std::size_t c) const;
  [[nodiscard]] Vector row(std::size_t r) const;
  void set_column(std::size_t c, const Vector& v);

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  [[nodiscard]] Vector apply(const Vector& x) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Exact rank over Q via fraction-free (Bareiss) elimination.
std::size_t rank(const Matrix& m);

/// Basis of the right null space, one basis vector per column.
/// Column count is cols(m) - rank(m).
Matrix kernel(const Matrix& m);

/// Some x with m*x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Kronecker product; index (i1,i2) maps to i1*dim2 + i2.
Matrix kronecker(const Matrix& a, const Matrix& b);

Matrix kronecker_power(const Matrix& a, std::size_t k);

}  // namespace homlie

#endif  // HOMLIE_EXACTLA_HPP
