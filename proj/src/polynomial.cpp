#include "lieconf/polynomial.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace lieconf {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::linear(const Vector& coeffs) {
  Polynomial p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial arity");
  Polynomial p(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

Rational Polynomial::evaluate(const Vector& point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluate arity");
  Rational s;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) m *= point[i];
    s += m;
  }
  return s;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      s += "*t" + std::to_string(i);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
  }
  return s;
}

namespace {

struct Expander {
  const PolyMatrix& m;
  std::size_t n;
  std::size_t nvars;
  std::unordered_map<std::uint64_t, Polynomial> memo;

  // Determinant of the minor formed by rows [row, n) and the columns not
  // in `used`.
  Polynomial minor(std::size_t row, std::uint64_t used) {
    if (row == n) return Polynomial::constant(nvars, 1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    Polynomial acc(nvars);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      const std::uint64_t bit = std::uint64_t{1} << c;
      if (used & bit) continue;
      // sign of a cofactor in the reduced minor: parity of the position of
      // column c among the free columns.
      const Polynomial& entry = m[row][c];
      if (!entry.is_zero()) {
        Polynomial sub = minor(row + 1, used | bit);
        if (!sub.is_zero()) {
          Polynomial term = entry * sub;
          if (sign > 0) acc += term;
          else acc -= term;
        }
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  }
};

} // namespace

Polynomial symbolic_determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n > 64) throw std::invalid_argument("symbolic_determinant: n > 64");
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("non-square matrix");
  }
  std::size_t nvars = n ? m[0][0].nvars() : 0;
  if (n == 0) return Polynomial::constant(0, 1);
  Expander ex{m, n, nvars, {}};
  return ex.minor(0, 0);
}

} // namespace lieconf
