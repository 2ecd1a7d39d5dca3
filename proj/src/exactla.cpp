#include "homlie/exactla.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace homlie {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) {
  if (sgn(value_.get_den()) == 0) throw DivisionByZero();
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
  };
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) {
    throw ParseError("bad rational literal '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in rational literal '" + std::string(text) + "'");
  if (text.front() == '-') n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const { return value_.get_str(10); }

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

Vector& axpy(Vector& y, const Rational& a, const Vector& x) {
  if (y.size() != x.size()) throw std::invalid_argument("axpy: length mismatch");
  if (a.is_zero()) return y;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
  return y;
}

Vector scaled(const Rational& a, const Vector& x) {
  Vector y(x.size());
  return axpy(y, a, x);
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw std::invalid_argument("set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r.is_zero(); });
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw std::invalid_argument("Matrix::apply: length mismatch");
  Vector y(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (!a.is_zero()) y[r] += a * x[c];
    }
  }
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix p(a.rows_, b.cols_);
  // i-k-j order skipping zeros; boundary and tensor matrices are sparse-ish.
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (!bkj.is_zero()) p(i, j) += aik * bkj;
      }
    }
  }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.data_) x *= s;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
  return os;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination

namespace {

struct Echelon {
  std::vector<std::vector<mpz_class>> rows;  // first rank() rows are the echelon rows
  std::vector<std::size_t> pivot_cols;
  [[nodiscard]] std::size_t rank() const { return pivot_cols.size(); }
};

// Each row is cleared of denominators independently; this does not change
// the row space.
std::vector<std::vector<mpz_class>> integer_rows(const Matrix& m) {
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& q = m(r, c).raw();
      if (sgn(q) != 0) out[r][c] = q.get_num() * (l / q.get_den());
    }
  }
  return out;
}

Echelon bareiss(const Matrix& m) {
  Echelon e;
  e.rows = integer_rows(m);
  auto& a = e.rows;
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  mpz_class prev = 1;
  mpz_class t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && sgn(a[piv][c]) == 0) ++piv;
    if (piv == nr) continue;
    std::swap(a[piv], a[r]);
    const mpz_class& p = a[r][c];
    for (std::size_t i = r + 1; i < nr; ++i) {
      const mpz_class f = a[i][c];
      for (std::size_t j = c + 1; j < nc; ++j) {
        t = p * a[i][j];
        if (sgn(f) != 0) t -= f * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = p;
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss(m).rank();
}

Matrix kernel(const Matrix& m) {
  const std::size_t nc = m.cols();
  if (m.rows() == 0) return Matrix::identity(nc);
  const Echelon e = bareiss(m);
  std::vector<bool> is_pivot(nc, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> x(nc);
    x[f] = 1;
    for (std::size_t k = e.rank(); k-- > 0;) {
      const auto& row = e.rows[k];
      const std::size_t pc = e.pivot_cols[k];
      mpq_class s = 0;
      for (std::size_t c = pc + 1; c < nc; ++c) {
        if (sgn(row[c]) != 0 && sgn(x[c]) != 0) s += mpq_class(row[c]) * x[c];
      }
      x[pc] = -s / mpq_class(row[pc]);
    }
    Vector v(nc);
    for (std::size_t c = 0; c < nc; ++c) v[c] = Rational(x[c]);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(nc, basis);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  // The last column is free iff b lies in the column span; the kernel
  // vector for that free column then carries a 1 in its last slot.
  const Matrix k = kernel(aug);
  for (std::size_t j = 0; j < k.cols(); ++j) {
    const Rational last = k(m.cols(), j);
    if (last.is_zero()) continue;
    Vector x(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) x[c] = -k(c, j) / last;
    return x;
  }
  return std::nullopt;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Rational& s = a(i1, j1);
      if (s.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          const Rational& t = b(i2, j2);
          if (!t.is_zero()) k(i1 * b.rows() + i2, j1 * b.cols() + j2) = s * t;
        }
    }
  return k;
}

Matrix kronecker_power(const Matrix& a, std::size_t k) {
  Matrix out = Matrix::identity(1);
  for (std::size_t i = 0; i < k; ++i) out = kronecker(out, a);
  return out;
}

}  // namespace homlie
