#include "homlie/homology.hpp"

#include <algorithm>
#include <map>

namespace homlie {

Vector HomModule::act(const Vector& m, const Vector& x) const {
  Vector out(m_dim);
  for (std::size_t a = 0; a < m.size(); ++a) {
    if (m[a].is_zero()) continue;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!x[i].is_zero()) axpy(out, m[a] * x[i], action[a][i]);
    }
  }
  return out;
}

namespace {

void check_shapes(const HomAlgebra& l, const HomModule& m) {
  const std::size_t n = l.dim();
  if (m.alpha.dim() != m.m_dim || m.action.size() != m.m_dim) {
    throw AlgebraError("module data does not match module dimension");
  }
  for (const auto& row : m.action) {
    if (row.size() != n) throw AlgebraError("module action does not match algebra dimension");
    for (const auto& v : row)
      if (v.size() != m.m_dim) throw AlgebraError("module action does not match module dimension");
  }
}

}  // namespace

std::pair<Vector, Vector> hom_module_defects(const HomAlgebra& l, const HomModule& m, std::size_t a, std::size_t i,
                                             std::size_t j) {
  const std::size_t n = l.dim();
  const Vector ma = unit_vector(m.m_dim, a);
  const Vector xi = unit_vector(n, i);
  const Vector xj = unit_vector(n, j);
  const Vector am = m.alpha(ma);

  Vector first = m.act(am, l.algebra().product(i, j));
  axpy(first, -1, m.act(m.act(ma, xi), l.alpha()(xj)));
  axpy(first, 1, m.act(m.act(ma, xj), l.alpha()(xi)));

  Vector second = m.alpha(m.act(ma, xi));
  axpy(second, -1, m.act(am, l.alpha()(xi)));
  return {std::move(first), std::move(second)};
}

std::optional<ModuleViolation> find_module_violation(const HomAlgebra& l, const HomModule& m) {
  check_shapes(l, m);
  const std::size_t n = l.dim();
  for (std::size_t a = 0; a < m.m_dim; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto [first, second] = hom_module_defects(l, m, a, i, j);
        if (!is_zero(first)) return ModuleViolation{1, a, i, j, std::move(first)};
        if (j == 0 && !is_zero(second)) return ModuleViolation{2, a, i, 0, std::move(second)};
      }
  return std::nullopt;
}

bool check_hom_module(const HomAlgebra& l, const HomModule& m) { return !find_module_violation(l, m).has_value(); }

HomModule make_module(const HomAlgebra& l, ModuleKind kind) {
  const std::size_t n = l.dim();
  if (kind == ModuleKind::Trivial) {
    return HomModule{1, LinearSelfMap::identity(1), std::vector<std::vector<Vector>>(1, std::vector<Vector>(n, Vector(1)))};
  }
  return HomModule{n, l.alpha(), l.algebra().constants()};
}

HomModule make_module(const HomAlgebra& l, LinearSelfMap alpha_m, std::vector<std::vector<Vector>> action) {
  const std::size_t d = alpha_m.dim();
  HomModule m{d, std::move(alpha_m), std::move(action)};
  if (auto v = find_module_violation(l, m)) {
    throw AlgebraError("module axiom " + std::to_string(v->axiom) + " fails at (m" + std::to_string(v->m) + ", x" +
                       std::to_string(v->x) + (v->axiom == 1 ? ", x" + std::to_string(v->y) : std::string()) + ")");
  }
  return m;
}

// ---------------------------------------------------------------------------
// Exterior powers

std::vector<std::vector<std::size_t>> wedge_basis(std::size_t n, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  if (p > n) return out;
  std::vector<std::size_t> t(p);
  for (std::size_t i = 0; i < p; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    std::size_t i = p;
    while (i > 0 && t[i - 1] == n - p + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < p; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

namespace {

using Tuple = std::vector<std::size_t>;
using TupleIndex = std::map<Tuple, std::size_t>;

TupleIndex index_tuples(const std::vector<Tuple>& basis) {
  TupleIndex idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

// Inserts k into the sorted tuple t. Returns the sign of moving k from the
// front (front = true) or the back into sorted position, or 0 if k is
// already present.
int insert_sorted(Tuple& t, std::size_t k, bool front) {
  auto it = std::lower_bound(t.begin(), t.end(), k);
  if (it != t.end() && *it == k) return 0;
  const auto less = static_cast<std::size_t>(it - t.begin());
  const std::size_t passed = front ? less : t.size() - less;
  t.insert(it, k);
  return passed % 2 == 0 ? 1 : -1;
}

}  // namespace

Matrix exterior_power(const Matrix& a, std::size_t p) {
  if (!a.is_square()) throw AlgebraError("exterior_power: matrix must be square");
  const std::size_t n = a.rows();
  const auto basis = wedge_basis(n, p);
  const auto idx = index_tuples(basis);
  Matrix out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    std::map<Tuple, Rational> acc{{Tuple{}, Rational(1)}};
    for (std::size_t f : basis[col]) {
      std::map<Tuple, Rational> next;
      for (const auto& [t, coef] : acc) {
        for (std::size_t k = 0; k < n; ++k) {
          const Rational& v = a(k, f);
          if (v.is_zero()) continue;
          Tuple u = t;
          const int s = insert_sorted(u, k, false);
          if (s == 0) continue;
          next[u] += Rational(s) * coef * v;
        }
      }
      acc = std::move(next);
    }
    for (const auto& [t, coef] : acc) {
      if (!coef.is_zero()) out(idx.at(t), col) = coef;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chevalley-Eilenberg complex

ChainComplex build_ce_complex(const HomAlgebra& l, const HomModule& m, std::size_t max_degree) {
  check_shapes(l, m);
  if (auto v = find_module_violation(l, m)) {
    throw AlgebraError("build_ce_complex: module axiom " + std::to_string(v->axiom) + " fails");
  }
  if (!is_multiplicative(l.algebra(), l.alpha())) {
    throw AlgebraError("build_ce_complex: structure map is not multiplicative");
  }
  const std::size_t n = l.dim();
  const std::size_t top = std::min(max_degree, n);
  const std::size_t md = m.m_dim;
  const FinAlgebra& alg = l.algebra();

  std::vector<std::vector<Tuple>> bases;
  std::vector<TupleIndex> indices;
  std::vector<Matrix> lambda_alpha;
  for (std::size_t p = 0; p <= top; ++p) {
    bases.push_back(wedge_basis(n, p));
    indices.push_back(index_tuples(bases.back()));
    lambda_alpha.push_back(exterior_power(l.alpha().matrix(), p));
  }

  ChainComplex c;
  c.algebra_dim = n;
  c.module_dim = md;
  c.truncated = top < n;
  for (std::size_t p = 0; p <= top; ++p) c.dims.push_back(md * bases[p].size());

  for (std::size_t p = 1; p <= top; ++p) {
    const std::size_t lower = bases[p - 1].size();
    Matrix d(c.dims[p - 1], c.dims[p]);
    for (std::size_t a = 0; a < md; ++a) {
      for (std::size_t jc = 0; jc < bases[p].size(); ++jc) {
        const Tuple& x = bases[p][jc];
        const std::size_t col = a * bases[p].size() + jc;

        // eta_1: sum_i (-1)^{i+1} (m x_i) (x) alpha(x_1 .. ^x_i .. x_p)
        for (std::size_t t = 0; t < p; ++t) {
          const Rational sign = t % 2 == 0 ? 1 : -1;
          Tuple rest = x;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
          const std::size_t k = indices[p - 1].at(rest);
          const Vector& mx = m.action[a][x[t]];
          for (std::size_t b = 0; b < md; ++b) {
            if (mx[b].is_zero()) continue;
            for (std::size_t r = 0; r < lower; ++r) {
              const Rational& w = lambda_alpha[p - 1](r, k);
              if (!w.is_zero()) d(b * lower + r, col) += sign * mx[b] * w;
            }
          }
        }

        // eta_2: sum_{i<j} (-1)^{i+j} alpha_M(m) (x) [x_i,x_j] ^ alpha(x_1 .. ^x_i .. ^x_j .. x_p)
        // The bracket factor carries no alpha.
        if (p < 2) continue;
        const Vector am = m.alpha.image(a);
        const std::size_t lower2 = bases[p - 2].size();
        for (std::size_t s = 0; s < p; ++s) {
          for (std::size_t t = s + 1; t < p; ++t) {
            const Rational sign = (s + t) % 2 == 0 ? 1 : -1;
            Tuple rest = x;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(s));
            const std::size_t k = indices[p - 2].at(rest);
            const Vector& br = alg.product(x[s], x[t]);
            for (std::size_t kb = 0; kb < n; ++kb) {
              if (br[kb].is_zero()) continue;
              for (std::size_t r = 0; r < lower2; ++r) {
                const Rational& w = lambda_alpha[p - 2](r, k);
                if (w.is_zero()) continue;
                Tuple u = bases[p - 2][r];
                const int ws = insert_sorted(u, kb, true);
                if (ws == 0) continue;
                const std::size_t row = indices[p - 1].at(u);
                const Rational coef = Rational(ws) * sign * br[kb] * w;
                for (std::size_t b = 0; b < md; ++b) {
                  if (!am[b].is_zero()) d(b * lower + row, col) += coef * am[b];
                }
              }
            }
          }
        }
      }
    }
    c.boundaries.push_back(std::move(d));
  }
  return c;
}

ChainComplex build_ce_complex(const HomAlgebra& l, const HomModule& m) { return build_ce_complex(l, m, l.dim()); }

bool verify_d_squared(const ChainComplex& c) {
  for (std::size_t p = 1; p < c.boundaries.size(); ++p) {
    if (!(c.boundaries[p - 1] * c.boundaries[p]).is_zero()) return false;
  }
  return true;
}

std::vector<std::size_t> HomologyReport::dims() const {
  std::vector<std::size_t> out;
  for (const auto& r : rows) out.push_back(r.homology_dim);
  return out;
}

HomologyReport homology_dims(const ChainComplex& c) {
  if (!verify_d_squared(c)) throw AlgebraError("homology_dims: boundary maps do not square to zero");
  const std::size_t top = c.top_degree();
  std::vector<std::size_t> ranks(top + 2, 0);  // ranks[p] = rank d_p
  for (std::size_t p = 1; p <= top; ++p) ranks[p] = rank(c.d(p));
  HomologyReport rep;
  rep.truncated = c.truncated;
  for (std::size_t p = 0; p <= top; ++p) {
    rep.rows.push_back({p, c.dims[p], ranks[p], ranks[p + 1], c.dims[p] - ranks[p] - ranks[p + 1]});
  }
  return rep;
}

std::size_t h0_dim(const HomAlgebra& l, const HomModule& m) {
  check_shapes(l, m);
  const std::size_t n = l.dim();
  Matrix act(m.m_dim, m.m_dim * n);
  for (std::size_t a = 0; a < m.m_dim; ++a)
    for (std::size_t i = 0; i < n; ++i) act.set_column(a * n + i, m.action[a][i]);
  return m.m_dim - rank(act);
}

}  // namespace homlie
