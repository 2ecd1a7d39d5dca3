#include "homlie/exactla.hpp"

#include <doctest.h>

#include <random>

using namespace homlie;

namespace {

// Plain rational Gaussian elimination, kept separate from the
// fraction-free implementation under test.
std::size_t naive_rank(Matrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t rank2x2_by_det(const Matrix& m) {
  if (!(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).is_zero()) return 2;
  return m.is_zero() ? 0 : 1;
}

Matrix random_matrix(std::mt19937& gen, std::size_t rows, std::size_t cols, int zero_bias) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> zero(0, 9);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (zero(gen) >= zero_bias) m(r, c) = Rational(num(gen), den(gen));
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK((Rational(1, 2) - Rational(1, 2)).denominator() == 1);
  CHECK(Rational(-3, 7) * Rational(7, 3) == Rational(-1));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(2, 3) == Rational(-2, 3));
  CHECK(Rational(5).str() == "5");
}

TEST_CASE("division by zero is reported") {
  CHECK_THROWS_AS((void)Rational(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("rational literals") {
  CHECK(Rational::parse("-3/7") == Rational(-3, 7));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
  for (const char* bad : {"1/0", "1.5", "", "-", "+1", "1/", "/2", "1e3", " 1", "1/-2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), ParseError);
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(Matrix(0, 4)) == 0);
  CHECK(rank(Matrix(3, 0)) == 0);
  CHECK(rank(Matrix{{0, 0, 1}, {0, 0, 2}, {1, 0, 0}}) == 2);
  CHECK(rank(Matrix{{Rational(1, 2), Rational(1, 3)}, {Rational(3, 2), 1}}) == 1);
}

TEST_CASE("kernel examples") {
  const Matrix k = kernel(Matrix{{1, 1}});
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == -k(1, 0));
  CHECK(!k(0, 0).is_zero());
  CHECK(kernel(Matrix{{1, 2}, {3, 4}}).cols() == 0);
  CHECK(kernel(Matrix(2, 3)).cols() == 3);
  CHECK(kernel(Matrix(0, 2)) == Matrix::identity(2));
}

TEST_CASE("solve") {
  const auto x = solve(Matrix{{1, 2}, {3, 4}}, Vector{5, 6});
  REQUIRE(x);
  CHECK(Matrix({{1, 2}, {3, 4}}).apply(*x) == Vector{5, 6});
  CHECK_FALSE(solve(Matrix{{1, 1}, {1, 1}}, Vector{1, 2}));
  const auto y = solve(Matrix{{1, 1}, {1, 1}}, Vector{2, 2});
  REQUIRE(y);
  CHECK((*y)[0] + (*y)[1] == Rational(2));
}

TEST_CASE("kronecker examples") {
  CHECK(kronecker(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
  const Matrix b{{1, 2, 3}, {4, 5, Rational(1, 2)}};
  CHECK(kronecker(Matrix{{2}}, b) == Rational(2) * b);
  const Matrix a{{1, 2}, {3, 4}};
  const Matrix k = kronecker(a, b);
  CHECK(k.rows() == 4);
  CHECK(k.cols() == 6);
  CHECK(k(1 * 2 + 1, 0 * 3 + 2) == a(1, 0) * b(1, 2));
}

TEST_CASE("rank of a kronecker product factors (random 2x2)") {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix a = random_matrix(gen, 2, 2, 4);
    const Matrix b = random_matrix(gen, 2, 2, 4);
    CHECK(rank(kronecker(a, b)) == rank2x2_by_det(a) * rank2x2_by_det(b));
  }
}

TEST_CASE("property: rank-nullity, kernel annihilation, agreement with naive elimination") {
  std::mt19937 gen(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = dim(gen);
    const std::size_t c = dim(gen);
    Matrix m = random_matrix(gen, r, c, trial % 8);
    if (trial % 5 == 0 && r > 1) {
      // force a dependent row
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = Rational(3) * m(0, j) - m(r / 2, j);
    }
    const std::size_t rk = rank(m);
    const Matrix k = kernel(m);
    CAPTURE(m);
    CHECK(rk == naive_rank(m));
    CHECK(rk + k.cols() == c);
    CHECK((m * k).is_zero());
    CHECK(rank(k) == k.cols());
  }
}

TEST_CASE("property: kronecker is associative") {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = random_matrix(gen, 2, 3, 3);
    const Matrix b = random_matrix(gen, 3, 1, 3);
    const Matrix c = random_matrix(gen, 2, 2, 3);
    CHECK(kronecker(kronecker(a, b), c) == kronecker(a, kronecker(b, c)));
  }
}

TEST_CASE("property: stored rationals are canonical") {
  std::mt19937 gen(3);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    long den = d(gen);
    if (den == 0) den = 1;
    const Rational q = Rational(d(gen), den) * Rational(d(gen), 7) + Rational(1, 3);
    mpq_class copy = q.raw();
    copy.canonicalize();
    CHECK(copy == q.raw());
    CHECK(q.denominator() > 0);
    CHECK(Rational::parse(q.str()) == q);
  }
}
