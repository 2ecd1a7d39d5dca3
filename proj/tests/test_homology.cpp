#include "homlie/examples.hpp"
#include "homlie/homology.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace homlie;

namespace {

HomAlgebra twisted(const AlgebraWithMap& b) { return twist(b.algebra, b.alpha); }

HomAlgebra classical(const FinAlgebra& a) { return HomAlgebra::checked(a, LinearSelfMap::identity(a.dim())); }

// ---------------------------------------------------------------------------
// Independent classical Chevalley-Eilenberg assembler (alpha = Id), used as
// an oracle. Tuples come from bitmasks; signs from bubble sort.

std::vector<std::vector<std::size_t>> combos(std::size_t n, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != p) continue;
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) t.push_back(i);
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Sorts in place; returns the permutation sign, or 0 on a repeated index.
int bubble_sign(std::vector<std::size_t>& t) {
  int sign = 1;
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b + 1 < t.size() - a; ++b) {
      if (t[b] == t[b + 1]) return 0;
      if (t[b] > t[b + 1]) {
        std::swap(t[b], t[b + 1]);
        sign = -sign;
      }
    }
  for (std::size_t b = 0; b + 1 < t.size(); ++b)
    if (t[b] == t[b + 1]) return 0;
  return sign;
}

Matrix classical_ce(const FinAlgebra& l, const HomModule& m, std::size_t p) {
  const std::size_t n = l.dim();
  const auto up = combos(n, p);
  const auto down = combos(n, p - 1);
  auto row_of = [&](std::size_t b, const std::vector<std::size_t>& t) {
    return b * down.size() + static_cast<std::size_t>(std::find(down.begin(), down.end(), t) - down.begin());
  };
  Matrix d(m.m_dim * down.size(), m.m_dim * up.size());
  for (std::size_t a = 0; a < m.m_dim; ++a)
    for (std::size_t c = 0; c < up.size(); ++c) {
      const auto& x = up[c];
      const std::size_t col = a * up.size() + c;
      for (std::size_t i = 0; i < p; ++i) {
        std::vector<std::size_t> rest;
        for (std::size_t k = 0; k < p; ++k)
          if (k != i) rest.push_back(x[k]);
        const Rational s = (i % 2 == 0) ? 1 : -1;
        for (std::size_t b = 0; b < m.m_dim; ++b) d(row_of(b, rest), col) += s * m.action[a][x[i]][b];
      }
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) {
          const Rational s = ((i + j) % 2 == 0) ? 1 : -1;
          for (std::size_t k = 0; k < n; ++k) {
            const Rational& coef = l(x[i], x[j], k);
            if (coef.is_zero()) continue;
            std::vector<std::size_t> t{k};
            for (std::size_t q = 0; q < p; ++q)
              if (q != i && q != j) t.push_back(x[q]);
            const int sg = bubble_sign(t);
            if (sg == 0) continue;
            d(row_of(a, t), col) += s * Rational(sg) * coef;
          }
        }
    }
  return d;
}

// Relabel the basis: new basis element i is old element perm[i].
HomAlgebra permuted(const HomAlgebra& l, const std::vector<std::size_t>& perm) {
  const std::size_t n = l.dim();
  std::vector<std::string> labels(n);
  StructureTensor c(n, std::vector<Vector>(n, Vector(n)));
  Matrix alpha(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = l.algebra().labels()[perm[i]];
    for (std::size_t j = 0; j < n; ++j) {
      alpha(i, j) = l.alpha().matrix()(perm[i], perm[j]);
      for (std::size_t k = 0; k < n; ++k) c[i][j][k] = l.algebra()(perm[i], perm[j], perm[k]);
    }
  }
  return HomAlgebra::unchecked(FinAlgebra(labels, c), LinearSelfMap(alpha));
}

std::vector<HomAlgebra> builtin_hom_lie() {
  std::vector<HomAlgebra> out;
  for (const auto& l : {Rational(1), Rational(2), Rational(-1, 3)}) {
    out.push_back(twisted(sl_n(2, {l})));
    out.push_back(twisted(heisenberg(l, Rational(3))));
  }
  out.push_back(twisted(sl_n(3, {Rational(2), Rational(3)})));
  out.push_back(classical(abelian(4)));
  out.push_back(twisted(matrix_lie(Matrix{{1, 1}, {0, 2}})));
  return out;
}

}  // namespace

TEST_CASE("wedge basis and exterior powers") {
  CHECK(wedge_basis(4, 2) == combos(4, 2));
  CHECK(wedge_basis(5, 3) == combos(5, 3));
  CHECK(wedge_basis(3, 0) == std::vector<std::vector<std::size_t>>{{}});
  CHECK(wedge_basis(2, 3).empty());
  const Matrix a{{1, 2, 0}, {3, 4, 0}, {0, 0, 5}};
  // top exterior power is the determinant
  CHECK(exterior_power(a, 3) == Matrix{{Rational(-10)}});
  CHECK(exterior_power(a, 1) == a);
  // Lambda^2 is functorial
  const Matrix b{{0, 1, 1}, {1, 0, 2}, {Rational(1, 2), 0, 1}};
  CHECK(exterior_power(a * b, 2) == exterior_power(a, 2) * exterior_power(b, 2));
}

TEST_CASE("check_hom_module") {
  for (const auto& l : builtin_hom_lie()) {
    CHECK(check_hom_module(l, make_module(l, ModuleKind::Adjoint)));
  }
  const HomAlgebra s = classical(sl_n(2, {Rational(1)}).algebra);
  CHECK(check_hom_module(s, make_module(s, ModuleKind::Trivial)));

  // adjoint action with alpha_M = Id over sl(2)_2
  const HomAlgebra s2 = twisted(sl_n(2, {Rational(2)}));
  const HomModule broken{3, LinearSelfMap::identity(3), s2.algebra().constants()};
  CHECK_FALSE(check_hom_module(s2, broken));
  const auto e = *s2.algebra().index_of("e");
  const auto f = *s2.algebra().index_of("f");
  // alpha_M([e,f]) = h but [alpha_M e, alpha f] = [e, f/2] = h/2
  const auto [first, second] = hom_module_defects(s2, broken, e, f, 0);
  CHECK(second == scaled(Rational(1, 2), s2.algebra().basis_vector("h")));
  const auto v = find_module_violation(s2, broken);
  REQUIRE(v);

  HomModule wrong = make_module(s2, ModuleKind::Adjoint);
  wrong.action.pop_back();
  CHECK_THROWS_AS(check_hom_module(s2, wrong), AlgebraError);
}

TEST_CASE("make_module") {
  const HomAlgebra s2 = twisted(sl_n(2, {Rational(2)}));
  const HomModule adj = make_module(s2, ModuleKind::Adjoint);
  CHECK(adj.m_dim == 3);
  CHECK(adj.alpha == s2.alpha());
  const HomAlgebra h = classical(heisenberg(1, 1).algebra);
  CHECK(check_hom_module(h, make_module(h, ModuleKind::Trivial)));

  CHECK_NOTHROW(make_module(s2, s2.alpha(), s2.algebra().constants()));

  std::mt19937 gen(17);
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<std::vector<Vector>> random_action(2, std::vector<Vector>(3, Vector(2)));
  for (auto& plane : random_action)
    for (auto& v : plane)
      for (auto& x : v) x = d(gen);
  CHECK_THROWS_AS(make_module(s2, LinearSelfMap::identity(2), random_action), AlgebraError);
}

TEST_CASE("build_ce_complex examples") {
  {
    const HomAlgebra a = classical(abelian(3));
    const ChainComplex c = build_ce_complex(a, make_module(a, ModuleKind::Trivial), 3);
    CHECK(c.dims == std::vector<std::size_t>{1, 3, 3, 1});
    for (const auto& d : c.boundaries) CHECK(d.is_zero());
  }
  {
    // sl(2) trivial coefficients: d_2(x ^ y) = -[x,y]
    const HomAlgebra s = classical(sl_n(2, {Rational(1)}).algebra);
    const ChainComplex c = build_ce_complex(s, make_module(s, ModuleKind::Trivial));
    // columns (h,e), (h,f), (e,f); rows h, e, f
    const Matrix by_hand{{0, 0, -1}, {-2, 0, 0}, {0, 2, 0}};
    CHECK(c.d(2) == by_hand);
    CHECK(rank(c.d(2)) == 3);
  }
  {
    // d_1 on the adjoint module is the action map
    const HomAlgebra s2 = twisted(sl_n(2, {Rational(2)}));
    const ChainComplex c = build_ce_complex(s2, make_module(s2, ModuleKind::Adjoint), 1);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t i = 0; i < 3; ++i) CHECK(c.d(1).column(a * 3 + i) == s2.algebra().product(a, i));
    CHECK(c.truncated);
  }
  const HomAlgebra s2 = twisted(sl_n(2, {Rational(2)}));
  CHECK(build_ce_complex(s2, make_module(s2, ModuleKind::Adjoint), 10).top_degree() == 3);
  const HomModule broken{3, LinearSelfMap::identity(3), s2.algebra().constants()};
  CHECK_THROWS_AS(build_ce_complex(s2, broken, 3), AlgebraError);
}

TEST_CASE("the bracket factor in eta_2 is not twisted") {
  // sl(2)_2 with trivial coefficients: d_2(h ^ e) = -[h,e]_alpha = -4e,
  // whereas twisting the bracket again would give -alpha(4e) = -8e.
  const HomAlgebra s2 = twisted(sl_n(2, {Rational(2)}));
  const ChainComplex c = build_ce_complex(s2, make_module(s2, ModuleKind::Trivial));
  CHECK(c.d(2).column(0) == (Vector{0, -4, 0}));
  // in degree 3 the remaining factor is twisted: d_3(h^e^f) = -[h,e]^a(f) + [h,f]^a(e) - [e,f]^a(h)
  // = -4e ^ f/2 + (-f) ^ 2e - h ^ h = -2 e^f + 2 e^f = 0
  CHECK(c.d(3).is_zero());
}

TEST_CASE("verify_d_squared") {
  for (const auto& l : builtin_hom_lie()) {
    for (auto kind : {ModuleKind::Adjoint, ModuleKind::Trivial}) {
      const HomModule m = make_module(l, kind);
      if (!check_hom_module(l, m)) continue;
      CHECK(verify_d_squared(build_ce_complex(l, m)));
    }
  }
  ChainComplex zero;
  zero.dims = {1, 3, 3, 1};
  zero.boundaries = {Matrix(1, 3), Matrix(3, 3), Matrix(3, 1)};
  CHECK(verify_d_squared(zero));

  const HomAlgebra s = classical(sl_n(2, {Rational(1)}).algebra);
  ChainComplex c = build_ce_complex(s, make_module(s, ModuleKind::Adjoint));
  c.boundaries[1](0, 0) += 1;
  CHECK_FALSE(verify_d_squared(c));
  CHECK_THROWS_AS(homology_dims(c), AlgebraError);
}

TEST_CASE("homology_dims examples") {
  {
    const HomAlgebra a = classical(abelian(3));
    CHECK(homology_dims(build_ce_complex(a, make_module(a, ModuleKind::Trivial))).dims() ==
          std::vector<std::size_t>{1, 3, 3, 1});
  }
  {
    const HomAlgebra s = classical(sl_n(2, {Rational(1)}).algebra);
    const HomologyReport r = homology_dims(build_ce_complex(s, make_module(s, ModuleKind::Trivial)));
    CHECK(r.dims() == std::vector<std::size_t>{1, 0, 0, 1});
    // ranks by hand: d_1 = 0, d_2 has rank 3, d_3(h^e^f) = -2 e^f + 2 e^f = 0
    CHECK(r.rows[1].rank_d == 0);
    CHECK(r.rows[2].rank_d == 3);
    CHECK(r.rows[3].rank_d == 0);
    CHECK_FALSE(r.truncated);
  }
  {
    const HomAlgebra h = classical(heisenberg(1, 1).algebra);
    const HomologyReport r = homology_dims(build_ce_complex(h, make_module(h, ModuleKind::Trivial)));
    CHECK(r.dims() == std::vector<std::size_t>{1, 2, 2, 1});
    CHECK(r.rows[2].rank_d == 1);
    CHECK(r.rows[3].rank_d == 0);
  }
  {
    const HomAlgebra a = classical(abelian(3));
    const HomologyReport r = homology_dims(build_ce_complex(a, make_module(a, ModuleKind::Trivial), 1));
    CHECK(r.truncated);
    CHECK(r.rows.size() == 2);
  }
}

TEST_CASE("h0_dim") {
  const HomAlgebra s2 = twisted(sl_n(2, {Rational(2)}));
  CHECK(h0_dim(s2, make_module(s2, ModuleKind::Adjoint)) == 0);
  const HomAlgebra a = classical(abelian(5));
  CHECK(h0_dim(a, make_module(a, ModuleKind::Adjoint)) == 5);
  const HomAlgebra h = classical(heisenberg(1, 1).algebra);
  CHECK(h0_dim(h, make_module(h, ModuleKind::Adjoint)) == 2);
  CHECK(h0_dim(h, make_module(h, ModuleKind::Trivial)) == 1);
}

TEST_CASE("property: classical limit agrees with the independent assembler") {
  std::vector<HomAlgebra> algebras{classical(sl_n(2, {Rational(1)}).algebra), classical(heisenberg(1, 1).algebra),
                                   classical(commutator_algebra(matrix_algebra(2)))};
  for (const auto& l : algebras) {
    for (auto kind : {ModuleKind::Adjoint, ModuleKind::Trivial}) {
      const HomModule m = make_module(l, kind);
      const ChainComplex c = build_ce_complex(l, m);
      for (std::size_t p = 1; p <= c.top_degree(); ++p) CHECK(c.d(p) == classical_ce(l.algebra(), m, p));
    }
  }
}

TEST_CASE("property: dimensions, Euler characteristic and H0") {
  for (const auto& l : builtin_hom_lie()) {
    for (auto kind : {ModuleKind::Adjoint, ModuleKind::Trivial}) {
      const HomModule m = make_module(l, kind);
      if (!check_hom_module(l, m)) continue;
      const ChainComplex c = build_ce_complex(l, m);
      const HomologyReport r = homology_dims(c);
      long chi_chain = 0;
      long chi_hom = 0;
      mpz_class binom;
      for (std::size_t p = 0; p <= c.top_degree(); ++p) {
        mpz_bin_uiui(binom.get_mpz_t(), l.dim(), p);
        CHECK(c.dims[p] == m.m_dim * binom.get_ui());
        const long sign = p % 2 == 0 ? 1 : -1;
        chi_chain += sign * static_cast<long>(c.dims[p]);
        chi_hom += sign * static_cast<long>(r.rows[p].homology_dim);
      }
      CHECK(chi_chain == chi_hom);
      CHECK(h0_dim(l, m) == r.rows[0].homology_dim);
    }
  }
}

TEST_CASE("property: homology does not depend on basis order") {
  std::mt19937 gen(4);
  const std::vector<HomAlgebra> algebras{twisted(sl_n(2, {Rational(2)})), twisted(heisenberg(2, -5)),
                                         twisted(matrix_lie(Matrix{{1, 1}, {0, 1}}))};
  for (const auto& l : algebras) {
    std::vector<std::size_t> perm(l.dim());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    for (int t = 0; t < 3; ++t) {
      std::shuffle(perm.begin(), perm.end(), gen);
      const HomAlgebra lp = permuted(l, perm);
      for (auto kind : {ModuleKind::Adjoint, ModuleKind::Trivial}) {
        const auto base = homology_dims(build_ce_complex(l, make_module(l, kind))).dims();
        CHECK(homology_dims(build_ce_complex(lp, make_module(lp, kind))).dims() == base);
      }
    }
  }
}
