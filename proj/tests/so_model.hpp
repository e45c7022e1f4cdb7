#pragma once

// so(N) as N x N matrices skew for the antidiagonal form, with root vectors
// E_ij - E_j'i' (k' = N-1-k). Used to re-derive feasibility and bracket
// constants without the library's Chevalley tables.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "lieconf/linalg.hpp"

namespace testing {

using lieconf::Matrix;
using lieconf::Rational;
using lieconf::Vector;

class SoModel {
public:
  /// so(2n+1) when odd, so(2n) otherwise.
  SoModel(int n, bool odd) : n_(std::size_t(n)), N_(2 * std::size_t(n) + (odd ? 1 : 0)) {
    for (std::size_t i = 0; i < N_; ++i) {
      Vector w = lieconf::zero_vector(n_);
      if (i < n_) w[i] = 1;
      if (i >= N_ - n_) w[N_ - 1 - i] = -1;
      wt_.push_back(w);
    }
    for (std::size_t i = 0; i < N_; ++i)
      for (std::size_t j = 0; j < N_; ++j) {
        if (i == j || i + j == N_ - 1) continue;
        const Vector w = lieconf::operator-(wt_[i], wt_[j]);
        if (lieconf::is_zero(w) || slot_.count(w)) continue;
        slot_[w] = {i, j};
      }
  }

  [[nodiscard]] std::size_t size() const { return N_; }
  [[nodiscard]] std::vector<Vector> roots() const {
    std::vector<Vector> out;
    for (const auto& [w, s] : slot_) out.push_back(w);
    return out;
  }
  [[nodiscard]] bool is_root(const Vector& w) const { return slot_.count(w) > 0; }

  [[nodiscard]] Matrix root_vector(const Vector& w) const {
    const auto it = slot_.find(w);
    if (it == slot_.end()) throw std::invalid_argument("not a root of the model");
    const auto [i, j] = it->second;
    Matrix x(N_, N_);
    x(i, j) += 1;
    x(N_ - 1 - j, N_ - 1 - i) -= 1;
    return x;
  }
  /// diag with +1 at k and -1 at k'; its ambient vector is e_k.
  [[nodiscard]] Matrix cartan(std::size_t k) const {
    Matrix x(N_, N_);
    x(k, k) = 1;
    x(N_ - 1 - k, N_ - 1 - k) = -1;
    return x;
  }
  /// Coefficient of X_w in a weight-vector expansion of m.
  [[nodiscard]] Rational coordinate(const Matrix& m, const Vector& w) const {
    const auto [i, j] = slot_.at(w);
    return m(i, j);
  }

  static Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

  /// c with [X_x, X_y] = c X_z; throws if the bracket is not a multiple.
  [[nodiscard]] Rational constant(const Vector& x, const Vector& y, const Vector& z) const {
    const Matrix b = bracket(root_vector(x), root_vector(y));
    const Matrix zz = root_vector(z);
    const Rational c = coordinate(b, z);
    if (!(b == c * zz)) throw std::logic_error("bracket is not a multiple");
    return c;
  }

private:
  std::size_t n_;
  std::size_t N_;
  std::vector<Vector> wt_;
  std::map<Vector, std::pair<std::size_t, std::size_t>> slot_;
};

struct ModelFormResult {
  std::size_t dimension = 0;
  bool feasible = false;
  bool h_is_p_ideal = true;
};

/// Symmetric forms B on g/h (a in h) with
///   B([P,u],v) + B(u,[P,v]) = delta(P) B(u,v)
/// for P running over a and the root vectors of p = h + positives.
inline ModelFormResult model_form(const SoModel& m, const Vector& delta,
                                  const std::set<Vector>& h_roots,
                                  const std::set<Vector>& positives) {
  std::vector<Vector> quotient;
  for (const auto& w : m.roots())
    if (!h_roots.count(w)) quotient.push_back(w);
  const std::size_t d = quotient.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> col;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) col[{i, j}] = col.size();
  auto at = [&](std::size_t i, std::size_t j) { return col.at({std::min(i, j), std::max(i, j)}); };

  ModelFormResult out;
  std::vector<std::pair<Matrix, Rational>> gens;
  for (std::size_t k = 0; k < delta.size(); ++k) gens.emplace_back(m.cartan(k), delta[k]);
  for (const auto& w : m.roots())
    if (h_roots.count(w) || positives.count(w)) gens.emplace_back(m.root_vector(w), Rational(0));

  std::vector<Vector> rows;
  for (const auto& [P, dp] : gens) {
    Matrix act(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix b = SoModel::bracket(P, m.root_vector(quotient[j]));
      for (std::size_t k = 0; k < d; ++k) act(k, j) = m.coordinate(b, quotient[k]);
    }
    for (const auto& w : h_roots) {
      const Matrix b = SoModel::bracket(P, m.root_vector(w));
      for (const auto& q : quotient)
        if (!m.coordinate(b, q).is_zero()) out.h_is_p_ideal = false;
    }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) {
        Vector row = lieconf::zero_vector(col.size());
        for (std::size_t k = 0; k < d; ++k) {
          row[at(k, j)] += act(k, i);
          row[at(i, k)] += act(k, j);
        }
        row[at(i, j)] -= dp;
        rows.push_back(row);
      }
  }
  const auto basis = lieconf::nullspace(Matrix::from_rows(rows, col.size()));
  out.dimension = basis.size();
  for (int trial = 0; trial < 8 && !out.feasible && !basis.empty(); ++trial) {
    Vector x = lieconf::zero_vector(col.size());
    for (std::size_t b = 0; b < basis.size(); ++b)
      x = x + Rational(std::int64_t(1 + (trial + 1) * (b + 1) * (b + 2))) * basis[b];
    Matrix g(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) g(i, j) = x[at(i, j)];
    out.feasible = !lieconf::determinant(g).is_zero();
  }
  return out;
}

/// Parabolic closure (a in h) by fixpoint iteration in the model.
inline std::optional<std::set<Vector>> model_closure(const SoModel& m,
                                                     const std::set<Vector>& positives,
                                                     const Vector& delta) {
  std::set<Vector> h(positives);
  for (const auto& l : m.roots()) {
    const Vector rest = lieconf::operator-(delta, l);
    if (!lieconf::is_zero(rest) && !m.is_root(rest)) h.insert(l);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::set<Vector> snap = h;
    for (const auto& l : snap) {
      for (const auto& g : snap) {
        const Vector s = lieconf::operator+(g, l);
        if (m.is_root(s) && h.insert(s).second) grew = true;
      }
      const Vector partner = lieconf::operator-(delta, l);
      if (m.is_root(partner) && h.insert(partner).second) grew = true;
    }
  }
  if (h.count(delta) || h.size() == m.roots().size()) return std::nullopt;
  return h;
}

/// Positive roots of the standard B_n / D_n order in the model: e_i +- e_j
/// (i < j) and e_i.
inline std::set<Vector> model_positives(const SoModel& m) {
  std::set<Vector> out;
  for (const auto& w : m.roots()) {
    for (const auto& c : w) {
      if (c.is_zero()) continue;
      if (c > Rational(0)) out.insert(w);
      break;
    }
  }
  return out;
}

} // namespace testing
