#include "lieconf/chevalley.hpp"

#include <random>
#include <stdexcept>

namespace lieconf {

Vector AlgebraElement::cartan_ambient() const {
  Vector v = zero_vector(system_->ambient_dim());
  for (std::size_t i = 0; i < cartan_.size(); ++i) {
    if (cartan_[i].is_zero()) continue;
    v = v + cartan_[i] * system_->coroot(system_->simples()[i]);
  }
  return v;
}

Vector AlgebraElement::flat() const {
  Vector v = cartan_;
  v.insert(v.end(), roots_.begin(), roots_.end());
  return v;
}

void AlgebraElement::check_same(const AlgebraElement& o) const {
  if (system_ != o.system_)
    throw Error(Errc::SystemMismatch, "algebra elements of different systems");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < cartan_.size(); ++i) cartan_[i] += o.cartan_[i];
  for (std::size_t i = 0; i < roots_.size(); ++i) roots_[i] += o.roots_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < cartan_.size(); ++i) cartan_[i] -= o.cartan_[i];
  for (std::size_t i = 0; i < roots_.size(); ++i) roots_[i] -= o.roots_[i];
  return *this;
}

AlgebraElement operator*(const Rational& s, AlgebraElement a) {
  for (auto& c : a.cartan_) c *= s;
  for (auto& c : a.roots_) c *= s;
  return a;
}

AlgebraElement AlgebraElement::root_vector(const RootSystem& rs, RootId a,
                                           const Rational& c) {
  AlgebraElement x(rs);
  x.roots_.at(static_cast<std::size_t>(a)) = c;
  return x;
}

AlgebraElement AlgebraElement::cartan_element(const RootSystem& rs,
                                              const Vector& coeffs) {
  if (coeffs.size() != static_cast<std::size_t>(rs.rank()))
    throw Error(Errc::DimensionMismatch, "Cartan coefficient count");
  AlgebraElement x(rs);
  x.cartan_ = coeffs;
  return x;
}

AlgebraElement AlgebraElement::from_ambient(const RootSystem& rs,
                                            const Vector& h) {
  if (h.size() != rs.ambient_dim())
    throw Error(Errc::DimensionMismatch, "ambient Cartan vector length");
  std::vector<Vector> basis;
  for (RootId s : rs.simples()) basis.push_back(rs.coroot(s));
  auto c = solve_in_span(basis, h);
  if (!c)
    throw Error(Errc::DimensionMismatch,
                to_string(h) + " is outside the span of the roots");
  return cartan_element(rs, *c);
}

namespace {

// Reduces N(x, y) for arbitrary roots to the table of positive pairs
// through N(-x,-y) = -N(x,y) and the cyclic relation for x + y + z = 0:
// N(x,y)/(z,z) = N(y,z)/(x,x) = N(z,x)/(y,y).
class Reducer {
public:
  Reducer(const RootSystem& rs, const std::vector<Rational>& pos)
      : rs_(rs), pos_(pos) {}

  Rational operator()(RootId x, RootId y) const {
    const RootId c = rs_.sum(x, y);
    if (c < 0) return Rational(0);
    const bool px = rs_.is_positive(x);
    const bool py = rs_.is_positive(y);
    if (px && py) return at(x, y);
    if (!px && !py) return -at(rs_.negate(x), rs_.negate(y));
    if (!px) return -(*this)(y, x);
    // x positive, y negative.
    if (rs_.is_positive(c)) {
      return rs_.inner(c, c) / rs_.inner(x, x) * -at(rs_.negate(y), c);
    }
    return rs_.inner(c, c) / rs_.inner(y, y) * at(rs_.negate(c), x);
  }

private:
  [[nodiscard]] const Rational& at(RootId a, RootId b) const {
    return pos_[static_cast<std::size_t>(a) * rs_.size() + b];
  }
  const RootSystem& rs_;
  const std::vector<Rational>& pos_;
};

} // namespace

int StructureConstants::string_down(RootId a, RootId b) const {
  int p = 0;
  RootId v = b;
  for (;;) {
    const RootId w = rs_->difference(v, a);
    if (w < 0) return p;
    v = w;
    ++p;
  }
}

std::shared_ptr<const StructureConstants>
StructureConstants::build(RootSystemPtr rsp) {
  std::shared_ptr<StructureConstants> sc(new StructureConstants());
  sc->rs_ = std::move(rsp);
  const RootSystem& rs = *sc->rs_;
  const std::size_t n = rs.size();
  const std::size_t r = static_cast<std::size_t>(rs.rank());

  std::vector<Rational> pos(n * n);
  Reducer reduce(rs, pos);
  sc->extraspecial_.assign(n, {RootSystem::kNone, RootSystem::kNone});

  // Positive roots are stored in height-then-canonical order, so RootId
  // order on positives is the order used for extraspecial pairs, and the
  // constants needed on the right-hand side always have smaller height.
  const auto& positives = rs.positives();
  for (RootId xi : positives) {
    std::vector<std::pair<RootId, RootId>> special;
    for (RootId a : positives) {
      const RootId b = rs.difference(xi, a);
      if (b >= 0 && rs.is_positive(b) && a < b) special.emplace_back(a, b);
    }
    if (special.empty()) continue;
    const auto [g, d] = special.front();
    sc->extraspecial_[static_cast<std::size_t>(xi)] = {g, d};
    const Rational ngd(sc->string_down(g, d) + 1);
    pos[g * n + d] = ngd;
    pos[d * n + g] = -ngd;
    for (std::size_t k = 1; k < special.size(); ++k) {
      const auto [a, b] = special[k];
      Rational acc;
      const RootId bg = rs.difference(b, g);
      if (bg >= 0) {
        acc += reduce(b, rs.negate(g)) * reduce(a, rs.negate(d)) /
               rs.inner(bg, bg);
      }
      const RootId ag = rs.difference(a, g);
      if (ag >= 0) {
        acc += reduce(rs.negate(g), a) * reduce(b, rs.negate(d)) /
               rs.inner(ag, ag);
      }
      const Rational val = rs.inner(xi, xi) / ngd * acc;
      const Rational expected(sc->string_down(a, b) + 1);
      if (val.abs() != expected) {
        throw std::logic_error("structure constant magnitude mismatch for " +
                               to_string(rs.root(a)) + ", " +
                               to_string(rs.root(b)));
      }
      pos[a * n + b] = val;
      pos[b * n + a] = -val;
    }
  }

  sc->n_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Rational v =
          reduce(static_cast<RootId>(a), static_cast<RootId>(b));
      if (!v.is_integer()) throw std::logic_error("non-integral constant");
      sc->n_[a * n + b] = static_cast<int>(v.num());
      const bool defined = rs.sum(static_cast<RootId>(a),
                                  static_cast<RootId>(b)) >= 0;
      const int expected =
          defined ? sc->string_down(static_cast<RootId>(a),
                                    static_cast<RootId>(b)) + 1
                  : 0;
      if (std::abs(sc->n_[a * n + b]) != expected)
        throw std::logic_error("structure constant magnitude mismatch");
    }
  }

  sc->coroot_coeffs_.resize(n);
  sc->pairing_.resize(n * r);
  const auto& simples = rs.simples();
  for (std::size_t a = 0; a < n; ++a) {
    const auto id = static_cast<RootId>(a);
    const auto& k = rs.simple_coords(id);
    auto& cc = sc->coroot_coeffs_[a];
    cc.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
      const Rational c =
          Rational(k[i]) * rs.inner(simples[i], simples[i]) / rs.inner(id, id);
      if (!c.is_integer()) throw std::logic_error("non-integral coroot");
      cc[i] = static_cast<int>(c.num());
      const Rational p = Rational(2) * rs.inner(id, simples[i]) /
                         rs.inner(simples[i], simples[i]);
      sc->pairing_[a * r + i] = static_cast<int>(p.num());
    }
  }
  return sc;
}

AlgebraElement StructureConstants::basis(std::size_t k) const {
  const auto r = static_cast<std::size_t>(rs_->rank());
  if (k < r) return h(k);
  return e(static_cast<RootId>(k - r));
}

AlgebraElement bracket(const StructureConstants& sc, const AlgebraElement& x,
                       const AlgebraElement& y) {
  const RootSystem& rs = sc.system();
  if (x.system() != &rs || y.system() != &rs)
    throw Error(Errc::SystemMismatch, "bracket operands over another system");
  const std::size_t r = static_cast<std::size_t>(rs.rank());
  const std::size_t n = rs.size();
  AlgebraElement out(rs);
  auto& oc = out.cartan();
  auto& orr = out.roots();
  const auto& xc = x.cartan();
  const auto& yc = y.cartan();
  const auto& xr = x.roots();
  const auto& yr = y.roots();

  std::vector<std::size_t> xs, ys;
  for (std::size_t a = 0; a < n; ++a) {
    if (!xr[a].is_zero()) xs.push_back(a);
    if (!yr[a].is_zero()) ys.push_back(a);
  }
  const bool xh = !is_zero(xc);
  const bool yh = !is_zero(yc);

  auto eval = [&](const Vector& h, std::size_t b) {
    Rational s;
    for (std::size_t i = 0; i < r; ++i)
      if (!h[i].is_zero()) s += h[i] * Rational(sc.pairing(RootId(b), i));
    return s;
  };
  if (xh) {
    for (std::size_t b : ys) orr[b] += eval(xc, b) * yr[b];
  }
  if (yh) {
    for (std::size_t a : xs) orr[a] -= eval(yc, a) * xr[a];
  }
  for (std::size_t a : xs) {
    for (std::size_t b : ys) {
      const RootId s = rs.sum(RootId(a), RootId(b));
      if (s == RootSystem::kNone) continue;
      const Rational c = xr[a] * yr[b];
      if (s == RootSystem::kZero) {
        const auto& cc = sc.coroot_coeffs(RootId(a));
        for (std::size_t i = 0; i < r; ++i)
          if (cc[i] != 0) oc[i] += c * Rational(cc[i]);
      } else {
        orr[static_cast<std::size_t>(s)] +=
            c * Rational(sc.n(RootId(a), RootId(b)));
      }
    }
  }
  return out;
}

Matrix ad_matrix(const StructureConstants& sc, const AlgebraElement& p,
                 const std::vector<AlgebraElement>& domain,
                 const std::vector<AlgebraElement>& codomain,
                 const std::vector<AlgebraElement>& modulo) {
  std::vector<Vector> span;
  for (const auto& c : codomain) span.push_back(c.flat());
  for (const auto& m : modulo) span.push_back(m.flat());
  Matrix out(codomain.size(), domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j) {
    const AlgebraElement img = bracket(sc, p, domain[j]);
    if (img.is_zero()) continue;
    auto coords = solve_in_span(span, img.flat());
    if (!coords)
      throw Error(Errc::NotInvariant,
                  "image of domain vector " + std::to_string(j) +
                      " leaves the codomain span");
    for (std::size_t i = 0; i < codomain.size(); ++i)
      out(i, j) = (*coords)[i];
  }
  return out;
}

AlgebraElement jacobiator(const StructureConstants& sc, const AlgebraElement& x,
                          const AlgebraElement& y, const AlgebraElement& z) {
  return bracket(sc, x, bracket(sc, y, z)) +
         bracket(sc, y, bracket(sc, z, x)) + bracket(sc, z, bracket(sc, x, y));
}

JacobiReport check_jacobi_exhaustive(const StructureConstants& sc) {
  JacobiReport rep;
  const std::size_t d = sc.dim();
  std::vector<AlgebraElement> basis;
  basis.reserve(d);
  for (std::size_t k = 0; k < d; ++k) basis.push_back(sc.basis(k));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const AlgebraElement bij = bracket(sc, basis[i], basis[j]);
      for (std::size_t k = j + 1; k < d; ++k) {
        ++rep.triples_checked;
        const AlgebraElement v = bracket(sc, basis[i], bracket(sc, basis[j], basis[k])) +
                                 bracket(sc, basis[j], bracket(sc, basis[k], basis[i])) +
                                 bracket(sc, basis[k], bij);
        if (!v.is_zero()) {
          if (rep.failures++ == 0) rep.first_failure = {i, j, k};
        }
      }
    }
  }
  return rep;
}

JacobiReport check_jacobi_sampled(const StructureConstants& sc,
                                  std::uint64_t samples, std::uint64_t seed) {
  JacobiReport rep;
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::size_t> pick(0, sc.dim() - 1);
  for (std::uint64_t t = 0; t < samples; ++t) {
    const std::size_t i = pick(gen), j = pick(gen), k = pick(gen);
    ++rep.triples_checked;
    if (!jacobiator(sc, sc.basis(i), sc.basis(j), sc.basis(k)).is_zero()) {
      if (rep.failures++ == 0) rep.first_failure = {i, j, k};
    }
  }
  return rep;
}

} // namespace lieconf
