#include "lieconf/constructions.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <tuple>

namespace lieconf {

namespace {

Rational max_abs(const Matrix& m) {
  Rational r;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r = std::max(r, m(i, j).abs());
  return r;
}

std::int64_t rand_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::int64_t rand_nonzero(std::mt19937_64& rng, int bound) {
  std::int64_t v = 0;
  while (v == 0) v = rand_int(rng, -bound, bound);
  return v;
}

Vector rand_vector(std::mt19937_64& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = Rational(rand_int(rng, -5, 5));
  return v;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

// Product of elementary matrices I + t E_ij: determinant 1.
Matrix rand_unimodular(std::mt19937_64& rng, std::size_t n, int factors = 3) {
  Matrix g = Matrix::identity(n);
  if (n < 2) return g;
  for (int f = 0; f < factors; ++f) {
    const auto i = static_cast<std::size_t>(rand_int(rng, 0, int(n) - 1));
    auto j = static_cast<std::size_t>(rand_int(rng, 0, int(n) - 2));
    if (j >= i) ++j;
    Matrix e = Matrix::identity(n);
    e(i, j) = Rational(rand_nonzero(rng, 3));
    g = g * e;
  }
  return g;
}

Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

Vector flatten(const Matrix& m) {
  Vector v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

std::size_t span_rank(const std::vector<Vector>& vs, std::size_t dim) {
  return vs.empty() ? 0 : rank(Matrix::from_rows(vs, dim));
}

bool in_span(const std::vector<Vector>& basis, const Vector& v,
             std::size_t dim) {
  auto ext = basis;
  ext.push_back(v);
  return span_rank(ext, dim) == span_rank(basis, dim);
}

void record(ConstructionVerdict& v, const Rational& residual,
            const std::string& what) {
  ++v.checks;
  v.worst_residual = std::max(v.worst_residual, residual.abs());
  if (!residual.is_zero() && v.failures.size() < 16)
    v.failures.push_back(what + ": residual " + residual.str());
}

void expect(ConstructionVerdict& v, bool cond, const std::string& what) {
  ++v.checks;
  if (!cond && v.failures.size() < 16) v.failures.push_back(what);
}

} // namespace

Rational QuadraticSpace::q(const Vector& z) const { return polar(z, z); }

Rational QuadraticSpace::polar(const Vector& z, const Vector& w) const {
  return dot(z, gram * w);
}

Rational QuadraticSpace::defect(const Matrix& g, const Rational& factor) const {
  return max_abs(g.transpose() * gram * g - factor * gram);
}

Matrix symplectic_form(int n) {
  const auto m = static_cast<std::size_t>(n);
  Matrix w(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    w(i, m + i) = 1;
    w(m + i, i) = -1;
  }
  return w;
}

QuadraticSpace sp_quadratic_space(int n) {
  const auto m = static_cast<std::size_t>(2 * n);
  const Matrix w = symplectic_form(n);
  QuadraticSpace qs;
  qs.dimension = 2 * m;
  qs.gram = Matrix(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      qs.gram(i, m + j) = w(i, j) / Rational(2);
      qs.gram(m + j, i) = w(i, j) / Rational(2);
    }
  return qs;
}

QuadraticSpace sl_quadratic_space(int n) {
  const auto m = static_cast<std::size_t>(n);
  QuadraticSpace qs;
  qs.dimension = 2 * m;
  qs.gram = Matrix(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    qs.gram(i, m + i) = Rational(1, 2);
    qs.gram(m + i, i) = Rational(1, 2);
  }
  return qs;
}

bool MatrixShapeSpec::matches(const Matrix& g) const {
  const auto m = static_cast<std::size_t>(n);
  if (g.rows() != m || g.cols() != m) return false;
  for (std::size_t i = 1; i < m; ++i)
    if (!g(i, 0).is_zero()) return false;
  for (std::size_t j = 0; j + 1 < m; ++j)
    if (!g(m - 1, j).is_zero()) return false;
  Matrix d(m - 2, m - 2);
  for (std::size_t i = 0; i + 2 < m; ++i)
    for (std::size_t j = 0; j + 2 < m; ++j) d(i, j) = g(i + 1, j + 1);
  const Rational det_d = m > 2 ? determinant(d) : Rational(1);
  const Rational ll = g(0, 0) * g(m - 1, m - 1);
  return normalizer ? ll * det_d == Rational(1)
                    : det_d == Rational(1) && ll == Rational(1);
}

std::vector<Matrix> MatrixShapeSpec::lie_basis() const {
  const auto m = static_cast<std::size_t>(n);
  std::vector<Matrix> out;
  for (std::size_t j = 1; j < m; ++j) out.push_back(unit(m, 0, j));
  for (std::size_t i = 1; i + 1 < m; ++i) out.push_back(unit(m, i, m - 1));
  for (std::size_t i = 1; i + 1 < m; ++i)
    for (std::size_t j = 1; j + 1 < m; ++j)
      if (i != j) out.push_back(unit(m, i, j));
  if (normalizer) {
    for (std::size_t i = 0; i + 1 < m; ++i)
      out.push_back(unit(m, i, i) - unit(m, i + 1, i + 1));
  } else {
    out.push_back(unit(m, 0, 0) - unit(m, m - 1, m - 1));
    for (std::size_t i = 1; i + 2 < m; ++i)
      out.push_back(unit(m, i, i) - unit(m, i + 1, i + 1));
  }
  return out;
}

Matrix MatrixShapeSpec::sample(std::mt19937_64& rng) const {
  const auto m = static_cast<std::size_t>(n);
  Matrix g(m, m);
  const Rational l(rand_nonzero(rng, 4));
  Rational det_d(1);
  if (m > 2) {
    Matrix d = rand_unimodular(rng, m - 2);
    if (normalizer) {
      const Rational mu(rand_nonzero(rng, 3));
      for (std::size_t j = 0; j + 2 < m; ++j) d(0, j) *= mu;
      det_d = mu;
    }
    for (std::size_t i = 0; i + 2 < m; ++i)
      for (std::size_t j = 0; j + 2 < m; ++j) g(i + 1, j + 1) = d(i, j);
  }
  g(0, 0) = l;
  g(m - 1, m - 1) = (l * det_d).inverse();
  for (std::size_t j = 1; j < m; ++j) g(0, j) = Rational(rand_int(rng, -3, 3));
  for (std::size_t i = 1; i + 1 < m; ++i)
    g(i, m - 1) = Rational(rand_int(rng, -3, 3));
  return g;
}

ConstructionVerdict check_sp_embedding(int n, std::size_t trials,
                                       std::uint64_t seed) {
  if (n < 1) throw Error(Errc::InvalidInput, "check_sp_embedding needs n >= 1");
  ConstructionVerdict v;
  v.construction = "sp";
  v.n = n;
  v.trials = trials;
  v.seed = seed;
  std::mt19937_64 rng(seed);
  const auto m = static_cast<std::size_t>(n);
  const Matrix w = symplectic_form(n);
  const QuadraticSpace qs = sp_quadratic_space(n);
  auto generator = [&]() -> Matrix {
    switch (rand_int(rng, 0, 3)) {
    case 0: {
      const Matrix a = rand_unimodular(rng, m);
      return block_diag(a, inverse(a).transpose());
    }
    case 1:
    case 2: {
      Matrix b(m, m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
          b(i, j) = b(j, i) = Rational(rand_int(rng, -3, 3));
      // (I B; 0 I) or (I 0; B I) with B symmetric.
      Matrix h = Matrix::identity(2 * m);
      const bool upper = rng() & 1;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          (upper ? h(i, m + j) : h(m + i, j)) = b(i, j);
      return h;
    }
    default: {
      // Transvection x -> x + t omega(x, u) u.
      const Vector u = rand_vector(rng, 2 * m);
      const Rational t(rand_nonzero(rng, 3));
      const Vector wu = w * u;
      Matrix g = Matrix::identity(2 * m);
      for (std::size_t i = 0; i < 2 * m; ++i)
        for (std::size_t j = 0; j < 2 * m; ++j) g(i, j) += t * u[i] * wu[j];
      return g;
    }
    }
  };

  for (std::size_t trial = 0; trial < trials; ++trial) {
    Matrix s = Matrix::identity(2 * m);
    if (trial > 0)
      for (int f = 0; f < 3; ++f) s = s * generator();
    const std::string tag = "trial " + std::to_string(trial);
    record(v, max_abs(s.transpose() * w * s - w), tag + " symplectic");
    const Matrix e = block_diag(s, s);
    record(v, qs.defect(e), tag + " q preserved");
    record(v, determinant(e) - Rational(1), tag + " det on Q^4n");
    const Vector x = rand_vector(rng, 2 * m), y = rand_vector(rng, 2 * m);
    record(v, dot(s * x, w * (s * y)) - dot(x, w * y), tag + " omega(Sx,Sy)");

    Rational a(1), b(0), c(0), d(1);
    if (trial > 0) {
      a = Rational(rand_int(rng, -4, 4));
      b = Rational(rand_int(rng, -4, 4));
      c = Rational(rand_int(rng, -4, 4));
      d = Rational(rand_int(rng, -4, 4));
    }
    const Rational det2 = a * d - b * c;
    Matrix g(4 * m, 4 * m);
    for (std::size_t i = 0; i < 2 * m; ++i) {
      g(i, i) = a;
      g(i, 2 * m + i) = b;
      g(2 * m + i, i) = c;
      g(2 * m + i, 2 * m + i) = d;
    }
    record(v, qs.defect(g, det2), tag + " GL2 scaling");
    const Vector xp = a * x + b * y, yp = c * x + d * y;
    record(v, dot(xp, w * yp) - det2 * dot(x, w * y),
           tag + " q(ax+by, cx+dy)");
  }
  return v;
}

ConstructionVerdict check_sl_embedding(int n, std::size_t trials,
                                       std::uint64_t seed) {
  if (n < 2) throw Error(Errc::InvalidInput, "check_sl_embedding needs n >= 2");
  ConstructionVerdict v;
  v.construction = "sl";
  v.n = n;
  v.trials = trials;
  v.seed = seed;
  std::mt19937_64 rng(seed);
  const auto m = static_cast<std::size_t>(n);
  const std::size_t nn = m * m;
  const QuadraticSpace qs = sl_quadratic_space(n);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    const Matrix g = trial == 0 ? Matrix::identity(m) : rand_unimodular(rng, m, 4);
    const std::string tag = "trial " + std::to_string(trial);
    record(v, determinant(g) - Rational(1), tag + " det g");
    const Matrix e = block_diag(g, inverse(g).transpose());
    record(v, qs.defect(e), tag + " q preserved");
    Vector z = rand_vector(rng, 2 * m);
    record(v, qs.q(e * z) - qs.q(z), tag + " f(x) pointwise");
  }

  // Stabilizer of [(e_1, e_n^*)] in sl(n): X e_1 = t e_1 and
  // -X^T e_n^* = t e_n^*. Unknowns: the n^2 entries of X, then t.
  Matrix eqs(0, nn + 1);
  auto row = [&] { return Vector(nn + 1); };
  for (std::size_t i = 0; i < m; ++i) {
    Vector r = row();
    r[i * m] = 1;
    if (i == 0) r[nn] = -1;
    eqs.append_row(r);
  }
  for (std::size_t j = 0; j < m; ++j) {
    Vector r = row();
    r[(m - 1) * m + j] = -1;
    if (j == m - 1) r[nn] = -1;
    eqs.append_row(r);
  }
  {
    Vector r = row();
    for (std::size_t i = 0; i < m; ++i) r[i * m + i] = 1;
    eqs.append_row(r);
  }
  std::vector<Vector> stab;
  for (const auto& s : nullspace(eqs))
    stab.emplace_back(s.begin(), s.begin() + static_cast<long>(nn));
  const std::size_t dim_q = span_rank(stab, nn);

  // Normalizer {X in sl(n) : [X, q] ⊆ q}.
  std::vector<Vector> annihilator =
      stab.empty() ? std::vector<Vector>{} : nullspace(Matrix::from_rows(stab, nn));
  Matrix neq(0, nn);
  for (const auto& yv : stab) {
    Matrix y(m, m);
    for (std::size_t k = 0; k < nn; ++k) y(k / m, k % m) = yv[k];
    for (const auto& ell : annihilator) {
      // ell([X, Y]) with [X, Y]_{ij} = sum_b X_ib Y_bj - Y_ia X_aj.
      Vector r(nn);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          const Rational& c = ell[i * m + j];
          if (c.is_zero()) continue;
          for (std::size_t b = 0; b < m; ++b) r[i * m + b] += c * y(b, j);
          for (std::size_t a = 0; a < m; ++a) r[a * m + j] -= c * y(i, a);
        }
      neq.append_row(r);
    }
  }
  {
    Vector r(nn);
    for (std::size_t i = 0; i < m; ++i) r[i * m + i] = 1;
    neq.append_row(r);
  }
  const auto norm = nullspace(neq);
  const std::size_t dim_p = norm.size();
  v.stabilizer_dim = dim_q;
  v.normalizer_dim = dim_p;
  const std::size_t expected_gap = m >= 3 ? 1 : 0;
  expect(v, dim_p == dim_q + expected_gap,
         "normalizer has dimension " + std::to_string(dim_p) +
             ", stabilizer " + std::to_string(dim_q));

  const MatrixShapeSpec qshape{n, false}, pshape{n, true};
  for (const auto& [shape, computed, what] :
       {std::tuple{qshape, stab, "stabilizer"},
        std::tuple{pshape, norm, "normalizer"}}) {
    std::vector<Vector> sb;
    for (const auto& b : shape.lie_basis()) sb.push_back(flatten(b));
    auto both = sb;
    both.insert(both.end(), computed.begin(), computed.end());
    const std::size_t r = span_rank(both, nn);
    expect(v, r == span_rank(sb, nn) && r == span_rank(computed, nn),
           std::string("displayed shape differs from the computed ") + what);
  }

  for (std::size_t trial = 0; trial < std::max<std::size_t>(1, trials / 4);
       ++trial) {
    const std::string tag = "shape sample " + std::to_string(trial);
    const Matrix gq = qshape.sample(rng);
    expect(v, qshape.matches(gq), tag + " not of stabilizer shape");
    record(v, determinant(gq) - Rational(1), tag + " det (stabilizer)");
    const Rational l = gq(0, 0);
    const Matrix gi = inverse(gq);
    Vector e1 = unit_vector(m, 0), en = unit_vector(m, m - 1);
    record(v, max_abs(Matrix::from_rows({gq * e1 - l * e1}, m)),
           tag + " g e_1 = l e_1");
    record(v, max_abs(Matrix::from_rows({gi.transpose() * en - l * en}, m)),
           tag + " e_n^* g^-1 = l e_n^*");

    const Matrix gp = pshape.sample(rng);
    expect(v, pshape.matches(gp), tag + " not of normalizer shape");
    record(v, determinant(gp) - Rational(1), tag + " det (normalizer)");
    const Matrix gpi = inverse(gp);
    for (const auto& yv : stab) {
      Matrix y(m, m);
      for (std::size_t k = 0; k < nn; ++k) y(k / m, k % m) = yv[k];
      expect(v, in_span(stab, flatten(gp * y * gpi), nn),
             tag + " Ad(g) does not preserve the stabilizer");
    }
  }

  // The one-parameter group diag(a, a^-2, 1, ..., 1, a) of P / Q.
  if (m >= 3) {
    Matrix t = Matrix::identity(m);
    const Rational a(2);
    t(0, 0) = a;
    t(1, 1) = Rational(1, 4);
    t(m - 1, m - 1) = a;
    expect(v, pshape.matches(t) && !qshape.matches(t),
           "diag(a, a^-2, .., a) is not in the normalizer minus the stabilizer");
  }
  return v;
}

std::optional<Rational> DiagonalWitness::scale_of(const Vector& r) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == r) return scales[i];
  return std::nullopt;
}

const std::vector<Rational>& witness_scales() {
  static const std::vector<Rational> s = {Rational(1),     Rational(-1),
                                          Rational(2),     Rational(-2),
                                          Rational(1, 2),  Rational(-1, 2)};
  return s;
}

RelationReport check_relations(const StructureConstants& sc, std::string name,
                               std::vector<AdjointRelation> relations) {
  const RootSystem& rs = sc.system();
  RelationReport rep;
  rep.name = std::move(name);
  std::vector<Vector> roots;
  std::vector<std::array<std::size_t, 3>> idx;
  auto index_of = [&](const Vector& r) {
    (void)rs.id_of(r);
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it != roots.end()) return std::size_t(it - roots.begin());
    roots.push_back(r);
    return roots.size() - 1;
  };
  for (const auto& rel : relations) {
    if (rel.x + rel.y != rel.z)
      throw Error(Errc::InvalidInput,
                  "relation " + to_string(rel.x) + " + " + to_string(rel.y) +
                      " != " + to_string(rel.z));
    idx.push_back({index_of(rel.x), index_of(rel.y), index_of(rel.z)});
    rep.computed.push_back(sc.n(rs.id_of(rel.x), rs.id_of(rel.y)));
  }
  rep.relations = std::move(relations);

  // Each relation is checked once all three of its roots carry a scale.
  std::vector<std::vector<std::size_t>> ready(roots.size());
  for (std::size_t k = 0; k < idx.size(); ++k)
    ready[*std::max_element(idx[k].begin(), idx[k].end())].push_back(k);

  const auto& scales = witness_scales();
  std::vector<Rational> c(roots.size());
  std::function<void(std::size_t)> search = [&](std::size_t pos) {
    if (pos == roots.size()) {
      rep.all_witnesses.push_back({roots, c});
      return;
    }
    for (const auto& s : scales) {
      c[pos] = s;
      bool ok = true;
      for (std::size_t k : ready[pos]) {
        const auto [x, y, z] = idx[k];
        if (c[x] * c[y] * Rational(rep.computed[k]) != rep.relations[k].k * c[z]) {
          ok = false;
          break;
        }
      }
      if (ok) search(pos + 1);
    }
  };
  search(0);
  if (!rep.all_witnesses.empty()) rep.witness = rep.all_witnesses.front();
  return rep;
}

namespace {

Vector v3(int a, int b, int c) { return {Rational(a), Rational(b), Rational(c)}; }

} // namespace

std::vector<AdjointRelation> g2_displayed_relations() {
  const Vector a = -v3(-2, 1, 1);  // -(-2e1+e2+e3)
  const Vector b = -v3(1, -1, 0);  // -(e1-e2)
  const Vector c = -v3(-1, 0, 1);  // -(e3-e1)
  const Vector d = -v3(1, -2, 1);  // -(-2e2+e1+e3)
  const Vector f = -v3(-1, -1, 2); // -(2e3-e1-e2)
  const Vector g = v3(-1, 0, 1);   // e3-e1
  const Vector h = -v3(0, -1, 1);  // -(e3-e2)
  const Vector i = v3(1, -1, 0);   // e1-e2
  return {
      {a, b, Rational(-1), c},
      {a, d, Rational(-1), f},
      {g, h, Rational(-2), b},
      {g, f, Rational(1), h},
      {i, h, Rational(-2), c},
      {i, d, Rational(-1), h},
  };
}

RelationReport check_g2_relations(const StructureConstants& sc) {
  if (sc.system().series() != Series::G2)
    throw Error(Errc::SystemMismatch, "G2 relations need the G2 system");
  auto rep = check_relations(sc, "G2", g2_displayed_relations());
  if (!rep.reproduced())
    throw Error(Errc::NoWitness,
                "no diagonal rescaling reproduces the G2 relations");
  return rep;
}

std::vector<PairingCycle> so_displayed_cycles() {
  auto e = [](std::size_t n, std::initializer_list<int> c) {
    Vector v;
    for (int x : c) v.push_back(Rational(x));
    v.resize(n);
    return v;
  };
  std::vector<PairingCycle> out;
  {
    PairingCycle c{"so(7), alpha = e3", Series::B, 3, {}};
    const Vector p1 = e(3, {1, -1, 0}), p2 = e(3, {0, 1, -1}),
                 p3 = e(3, {-1, 0, 1});
    const Vector u1 = e(3, {-1, 0, 0}), u2 = e(3, {0, -1, 0}),
                 u3 = e(3, {0, 0, -1});
    const Vector v1 = e(3, {-1, 0, -1}), v2 = e(3, {-1, -1, 0}),
                 v3 = e(3, {0, -1, -1});
    const Rational k(-2);
    c.relations = {{p1, u1, k, u2}, {p1, v1, k, v3}, {p2, u2, k, u3},
                   {p2, v2, k, v1}, {p3, u3, k, u1}, {p3, v3, k, v2}};
    out.push_back(std::move(c));
  }
  for (int s : {1, -1}) {
    PairingCycle c{s > 0 ? "so(8), alpha = e3 + e4" : "so(8), alpha = e3 - e4",
                   Series::D, 4, {}};
    const Vector p1 = e(4, {0, -1, 1, 0}), p2 = e(4, {-1, 1, 0, 0}),
                 p3 = e(4, {1, 0, -1, 0});
    const Vector u1 = e(4, {-1, 0, -1, 0}), u2 = e(4, {0, -1, -1, 0}),
                 u3 = e(4, {-1, -1, 0, 0});
    const Vector v1 = e(4, {0, 0, -1, -s}), v2 = e(4, {0, -1, 0, -s}),
                 v3 = e(4, {-1, 0, 0, -s});
    const Rational two(2), mtwo(-2);
    c.relations = {{p1, u1, two, u3},  {p1, v1, two, v2},
                   {p2, u2, two, u1},  {p2, v2, two, v3},
                   {p3, u3, mtwo, u2}, {p3, v3, mtwo, v1}};
    out.push_back(std::move(c));
  }
  return out;
}

CycleReport check_cycle(const StructureConstants& sc, const PairingCycle& c) {
  if (sc.system().series() != c.series || sc.system().rank() != c.rank)
    throw Error(Errc::SystemMismatch, c.name + " needs another root system");
  CycleReport rep;
  rep.name = c.name;
  rep.relations = check_relations(sc, c.name, c.relations);
  if (c.relations.size() % 2 != 0)
    throw Error(Errc::InvalidInput, "cycle relations must come in pairs");

  std::map<std::pair<std::string, std::string>, std::size_t> unknowns;
  auto unknown = [&](const Vector& u, const Vector& v) {
    auto key = std::make_pair(to_string(u), to_string(v));
    return unknowns.emplace(key, unknowns.size()).first->second;
  };
  struct Eq {
    std::size_t a, b;
    std::size_t ka, kb; // relation indices supplying the coefficients
  };
  std::vector<Eq> eqs;
  for (std::size_t i = 0; i < c.relations.size(); i += 2) {
    const auto& ru = c.relations[i];
    const auto& rv = c.relations[i + 1];
    if (ru.x != rv.x)
      throw Error(Errc::InvalidInput, "cycle relations must share p");
    // k_v <u, v'> + k_u <u', v> = 0
    eqs.push_back({unknown(ru.y, rv.z), unknown(ru.z, rv.y), i + 1, i});
  }
  auto dim_with = [&](const std::function<Rational(std::size_t)>& k) {
    Matrix m(eqs.size(), unknowns.size());
    for (std::size_t r = 0; r < eqs.size(); ++r) {
      m(r, eqs[r].a) += k(eqs[r].ka);
      m(r, eqs[r].b) += k(eqs[r].kb);
    }
    return nullspace(m).size();
  };
  rep.displayed_dimension = dim_with([&](std::size_t i) { return c.relations[i].k; });
  rep.computed_dimension =
      dim_with([&](std::size_t i) { return Rational(rep.relations.computed[i]); });
  return rep;
}

std::vector<std::pair<std::pair<Vector, Vector>, Rational>> g2_displayed_form() {
  return {
      {{-v3(1, -1, 0), -v3(-1, -1, 2)}, Rational(1)},
      {{-v3(-1, 0, 1), -v3(1, -2, 1)}, Rational(-1)},
      {{-v3(0, -1, 1), -v3(0, -1, 1)}, Rational(2)},
  };
}

namespace {

Matrix displayed_matrix(const FormSystem& fs) {
  const RootSystem& rs = fs.sc->system();
  const std::size_t d = fs.labels.size();
  Matrix p(d, d);
  auto label_of = [&](const Vector& r) -> std::size_t {
    for (std::size_t i = 0; i < d; ++i)
      if (!fs.labels[i].cartan && rs.root(fs.labels[i].root) == r) return i;
    throw Error(Errc::Unalignable,
                to_string(r) + " is not a label of the quotient");
  };
  for (const auto& [pair, val] : g2_displayed_form()) {
    const std::size_t i = label_of(pair.first), j = label_of(pair.second);
    p(i, j) = val;
    p(j, i) = val;
  }
  return p;
}

} // namespace

G2Alignment align_g2_form(const FormSystem& fs, const Vector& x) {
  const RootSystem& rs = fs.sc->system();
  if (rs.series() != Series::G2)
    throw Error(Errc::SystemMismatch, "G2 alignment needs the G2 system");
  const std::size_t d = fs.labels.size();
  const Matrix g = fs.gram(x);
  const Matrix p = displayed_matrix(fs);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (g(i, j).is_zero() != p(i, j).is_zero())
        throw Error(Errc::Unalignable,
                    "zero pattern differs at (" +
                        label_name(rs, fs.labels[i]) + ", " +
                        label_name(rs, fs.labels[j]) + ")");

  auto fits = [&](const Rational& s, const std::vector<Rational>& c) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (s * c[i] * c[j] * g(i, j) != p(i, j)) return false;
    return true;
  };
  auto first_nonzero = [&]() {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!p(i, j).is_zero()) return std::make_pair(i, j);
    throw Error(Errc::Unalignable, "empty form");
  };

  G2Alignment a;
  a.labels = fs.labels;
  const auto rel = check_relations(*fs.sc, "G2", g2_displayed_relations());
  for (const auto& w : rel.all_witnesses) {
    std::vector<Rational> c(d);
    bool complete = true;
    for (std::size_t i = 0; i < d && complete; ++i) {
      auto s = fs.labels[i].cartan ? std::nullopt
                                   : w.scale_of(rs.root(fs.labels[i].root));
      if (!s) complete = false;
      else c[i] = *s;
    }
    if (!complete) continue;
    const auto [i, j] = first_nonzero();
    const Rational s = p(i, j) / (c[i] * c[j] * g(i, j));
    if (fits(s, c)) {
      a.global_scale = s;
      a.label_scales = c;
      a.relation_basis = true;
      return a;
    }
  }

  // Free diagonal fit: self-pairings fix the global scale, every other
  // pair fixes the ratio of its two label scales.
  std::vector<std::optional<Rational>> c(d);
  std::optional<Rational> s;
  for (std::size_t i = 0; i < d && !s; ++i)
    if (!p(i, i).is_zero()) {
      s = p(i, i) / g(i, i);
      c[i] = Rational(1);
    }
  if (!s) {
    const auto [i, j] = first_nonzero();
    s = p(i, j) / g(i, j);
    c[i] = c[j] = Rational(1);
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j || p(i, j).is_zero()) continue;
      if (!c[i]) c[i] = Rational(1);
      if (!c[j]) c[j] = p(i, j) / (*s * *c[i] * g(i, j));
    }
  std::vector<Rational> cc;
  for (auto& v : c) cc.push_back(v.value_or(Rational(1)));
  if (!fits(*s, cc))
    throw Error(Errc::Unalignable, "no diagonal rescaling fits the G2 form");
  a.global_scale = *s;
  a.label_scales = cc;
  a.relation_basis = false;
  return a;
}

Vector displayed_g2_form(const FormSystem& fs, const G2Alignment& a) {
  const Matrix p = displayed_matrix(fs);
  Vector x(fs.unknowns.size());
  for (std::size_t u = 0; u < fs.unknowns.size(); ++u) {
    const auto [i, j] = fs.unknowns[u];
    x[u] = p(i, j) / (a.global_scale * a.label_scales[i] * a.label_scales[j]);
  }
  return x;
}

} // namespace lieconf
