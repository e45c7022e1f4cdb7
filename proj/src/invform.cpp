#include "lieconf/invform.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>

namespace lieconf {

std::optional<std::size_t> FormSystem::column(std::size_t i,
                                              std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (auto it = index.find({i, j}); it != index.end()) return it->second;
  return std::nullopt;
}

Matrix FormSystem::gram(const Vector& x) const {
  const std::size_t d = labels.size();
  Matrix g(d, d);
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    const auto [i, j] = unknowns[k];
    g(i, j) = x.at(k);
    g(j, i) = x.at(k);
  }
  return g;
}

AlgebraElement label_element(const IsotropyConfig& config,
                             const WeightLabel& l) {
  const RootSystem& rs = *config.system;
  if (!l.cartan) return AlgebraElement::root_vector(rs, l.root);
  return AlgebraElement::from_ambient(rs, config.cartan.normal);
}

namespace {

void check_inputs(const StructureConstants& sc, const IsotropyConfig& config) {
  if (!config.validated)
    throw Error(Errc::NotValidated, "configuration has not been validated");
  if (&sc.system() != config.system.get())
    throw Error(Errc::SystemMismatch,
                "structure constants and configuration use different systems");
}

} // namespace

Matrix quotient_action(const StructureConstants& sc,
                       const IsotropyConfig& config,
                       const std::vector<WeightLabel>& labels,
                       const AlgebraElement& p) {
  const RootSystem& rs = sc.system();
  std::vector<std::size_t> root_label(rs.size(), labels.size());
  std::size_t cartan_label = labels.size();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].cartan) cartan_label = i;
    else root_label[static_cast<std::size_t>(labels[i].root)] = i;
  }
  const Vector& n = config.cartan.normal;
  const Rational nn = config.cartan.full ? Rational(1) : dot(n, n);

  Matrix out(labels.size(), labels.size());
  for (std::size_t j = 0; j < labels.size(); ++j) {
    const AlgebraElement img = bracket(sc, p, label_element(config, labels[j]));
    const auto& r = img.roots();
    for (std::size_t s = 0; s < r.size(); ++s) {
      if (r[s].is_zero() || config.in_h[s]) continue;
      out(root_label[s], j) += r[s];
    }
    if (!config.cartan.full && !is_zero(img.cartan())) {
      const Rational c = dot(img.cartan_ambient(), n) / nn;
      if (!c.is_zero()) out(cartan_label, j) += c;
    }
  }
  return out;
}

std::vector<Generator> p_generators(const StructureConstants& sc,
                                    const IsotropyConfig& config) {
  const RootSystem& rs = sc.system();
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < static_cast<std::size_t>(rs.rank()); ++i) {
    AlgebraElement h = sc.h(i);
    const Rational dv = dot(config.delta.functional, h.cartan_ambient());
    gens.push_back({std::move(h), dv, "h" + std::to_string(i + 1)});
  }
  for (RootId g : config.p_roots())
    gens.push_back({sc.e(g), Rational(0), "E" + to_string(rs.root(g))});
  return gens;
}

FormSystem assemble(StructureConstantsPtr scp, const IsotropyConfig& config) {
  const StructureConstants& sc = *scp;
  check_inputs(sc, config);
  const RootSystem& rs = sc.system();
  FormSystem fs;
  fs.sc = scp;
  fs.config = config;
  fs.labels = quotient_basis(config);
  const std::size_t d = fs.labels.size();

  std::vector<Vector> weights;
  for (const auto& l : fs.labels) weights.push_back(label_weight(rs, l));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      if (weights[i] + weights[j] == config.delta.functional) {
        fs.index[{i, j}] = fs.unknowns.size();
        fs.unknowns.emplace_back(i, j);
      }
    }
  }

  fs.generators = p_generators(sc, config);
  using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
  std::set<SparseRow> rows;
  for (const auto& gen : fs.generators) {
    const Matrix a = quotient_action(sc, config, fs.labels, gen.element);
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!a(k, j).is_zero()) cols[j].emplace_back(k, a(k, j));

    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i; j < d; ++j) {
        std::map<std::size_t, Rational> row;
        for (const auto& [k, c] : cols[i])
          if (auto col = fs.column(k, j)) row[*col] += c;
        for (const auto& [k, c] : cols[j])
          if (auto col = fs.column(i, k)) row[*col] += c;
        if (auto col = fs.column(i, j); col && !gen.delta_value.is_zero())
          row[*col] -= gen.delta_value;
        SparseRow sr;
        for (const auto& [col, c] : row)
          if (!c.is_zero()) sr.emplace_back(col, c);
        if (sr.empty()) continue;
        const Rational lead = sr.front().second;
        for (auto& [col, c] : sr) c /= lead;
        rows.insert(std::move(sr));
      }
    }
  }
  fs.constraints = Matrix(rows.size(), fs.unknowns.size());
  std::size_t r = 0;
  for (const auto& sr : rows) {
    for (const auto& [col, c] : sr) fs.constraints(r, col) = c;
    ++r;
  }
  return fs;
}

namespace {

Rational max_abs(const Vector& v) {
  Rational m;
  for (const auto& x : v) m = std::max(m, x.abs());
  return m;
}

Vector combine(const std::vector<Vector>& basis, const Vector& coeffs,
               std::size_t n) {
  Vector x = zero_vector(n);
  for (std::size_t k = 0; k < basis.size(); ++k) x = x + coeffs[k] * basis[k];
  return x;
}

// Next point of {1..m}^k in lexicographic order; false when exhausted.
bool next_point(std::vector<int>& p, int m) {
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] < m) {
      ++p[i];
      return true;
    }
    p[i] = 1;
  }
  return false;
}

} // namespace

FormSolution solve(const FormSystem& fs) {
  FormSolution sol;
  const std::size_t nu = fs.unknowns.size();
  sol.basis = nullspace(fs.constraints);
  sol.dimension = sol.basis.size();
  if (sol.dimension == 0) {
    sol.certified_degenerate = true;
    return sol;
  }

  // Distinct odd primes 3, 5, 7, 11, ... as combination weights.
  Vector weights(sol.dimension);
  {
    std::int64_t cand = 3;
    for (std::size_t k = 0; k < sol.dimension; ++k) {
      auto prime = [](std::int64_t v) {
        for (std::int64_t q = 2; q * q <= v; ++q)
          if (v % q == 0) return false;
        return true;
      };
      while (!prime(cand)) ++cand;
      weights[k] = Rational(cand);
      ++cand;
    }
  }
  Vector x = combine(sol.basis, weights, nu);
  Rational det = determinant(fs.gram(x));

  if (det.is_zero()) {
    const std::size_t d = fs.labels.size();
    if (d <= 64) {
      PolyMatrix pm(d, std::vector<Polynomial>(d, Polynomial(sol.dimension)));
      for (std::size_t u = 0; u < nu; ++u) {
        Vector coeffs(sol.dimension);
        for (std::size_t k = 0; k < sol.dimension; ++k)
          coeffs[k] = sol.basis[k][u];
        const auto [i, j] = fs.unknowns[u];
        pm[i][j] = Polynomial::linear(coeffs);
        pm[j][i] = pm[i][j];
      }
      const Polynomial dp = symbolic_determinant(pm);
      sol.determinant_terms = dp.term_count();
      if (dp.is_zero()) {
        sol.certified_degenerate = true;
      } else {
        // A nonzero polynomial of degree <= d has a nonzero value on the
        // grid {1..d+1}^k.
        std::vector<int> pt(sol.dimension, 1);
        const int m = static_cast<int>(d) + 1;
        do {
          Vector t(sol.dimension);
          for (std::size_t k = 0; k < pt.size(); ++k) t[k] = Rational(pt[k]);
          if (!dp.evaluate(t).is_zero()) {
            x = combine(sol.basis, t, nu);
            det = determinant(fs.gram(x));
            break;
          }
        } while (next_point(pt, m));
      }
    } else {
      std::mt19937_64 gen(7);
      std::uniform_int_distribution<int> pick(-50, 50);
      for (int attempt = 0; attempt < 64 && det.is_zero(); ++attempt) {
        Vector t(sol.dimension);
        for (auto& c : t) c = Rational(pick(gen));
        x = combine(sol.basis, t, nu);
        det = determinant(fs.gram(x));
      }
    }
  }
  if (!det.is_zero()) {
    sol.nondegenerate_witness = x;
    sol.witness_determinant = det;
    sol.residual = max_abs(fs.constraints * x);
  } else {
    for (const auto& b : sol.basis)
      sol.residual = std::max(sol.residual, max_abs(fs.constraints * b));
  }
  return sol;
}

InvarianceReport verify_invariance(const FormSystem& fs, const Vector& x,
                                   std::size_t random_elements,
                                   std::uint64_t seed, bool throw_on_failure) {
  const StructureConstants& sc = *fs.sc;
  const IsotropyConfig& cfg = fs.config;
  const RootSystem& rs = sc.system();
  const std::size_t d = fs.labels.size();
  const Matrix g = fs.gram(x);

  std::vector<AlgebraElement> elements;
  for (const auto& gen : fs.generators) elements.push_back(gen.element);
  const std::size_t ngen = elements.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(-3, 3);
  for (std::size_t t = 0; t < random_elements; ++t) {
    AlgebraElement e(rs);
    for (std::size_t k = 0; k < ngen; ++k) {
      const int c = pick(rng);
      if (c != 0) e += Rational(c) * elements[k];
    }
    elements.push_back(std::move(e));
  }
  for (std::size_t a = 0; a < ngen; ++a)
    for (std::size_t b = a + 1; b < ngen; ++b) {
      AlgebraElement e = bracket(sc, elements[a], elements[b]);
      if (!e.is_zero()) elements.push_back(std::move(e));
    }

  // Basis of h: root vectors of h and a ∩ h.
  std::vector<AlgebraElement> h_basis;
  for (RootId r : cfg.h_roots()) h_basis.push_back(sc.e(r));
  {
    const std::size_t r = static_cast<std::size_t>(rs.rank());
    for (std::size_t i = 0; i < r; ++i) {
      AlgebraElement hi = sc.h(i);
      if (!cfg.cartan.full) {
        const Vector amb = hi.cartan_ambient();
        const Rational c =
            dot(amb, cfg.cartan.normal) / dot(cfg.cartan.normal, cfg.cartan.normal);
        hi = AlgebraElement::from_ambient(rs, amb - c * cfg.cartan.normal);
      }
      if (!hi.is_zero()) h_basis.push_back(std::move(hi));
    }
  }
  auto in_h = [&](const AlgebraElement& e) {
    for (std::size_t s = 0; s < e.roots().size(); ++s)
      if (!e.roots()[s].is_zero() && !cfg.in_h[s]) return false;
    return cfg.cartan.contains(e.cartan_ambient());
  };

  InvarianceReport rep;
  auto violate = [&](std::string what, const Rational& res) {
    rep.max_residual = std::max(rep.max_residual, res.abs());
    if (!rep.violation) rep.violation = std::move(what);
  };
  for (std::size_t e = 0; e < elements.size(); ++e) {
    const AlgebraElement& p = elements[e];
    ++rep.elements_checked;
    for (const auto& hb : h_basis) {
      if (!in_h(bracket(sc, p, hb)))
        violate("element " + std::to_string(e) + " does not normalize h",
                Rational(1));
    }
    const Rational dp = dot(cfg.delta.functional, p.cartan_ambient());
    const Matrix a = quotient_action(sc, cfg, fs.labels, p);
    // M = A^T G + G A - delta(p) G must vanish.
    const Matrix m = a.transpose() * g + g * a - dp * g;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        ++rep.triples_checked;
        if (!m(i, j).is_zero())
          violate("element " + std::to_string(e) + ", u=" +
                      label_name(rs, fs.labels[i]) +
                      ", v=" + label_name(rs, fs.labels[j]),
                  m(i, j));
      }
    }
  }
  if (throw_on_failure && !rep.ok())
    throw Error(Errc::ResidualNonzero, *rep.violation);
  return rep;
}

} // namespace lieconf
