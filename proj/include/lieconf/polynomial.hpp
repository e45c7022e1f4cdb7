#pragma once

#include <map>
#include <string>
#include <vector>

#include "lieconf/linalg.hpp"

namespace lieconf {

/// Sparse multivariate polynomial with rational coefficients in a fixed
/// number of variables t_0..t_{n-1}.
class Polynomial {
public:
  using Exponents = std::vector<int>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  /// sum_i coeffs[i] * t_i
  static Polynomial linear(const Vector& coeffs);

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
  [[nodiscard]] const std::map<Exponents, Rational>& terms() const {
    return terms_;
  }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  [[nodiscard]] Rational evaluate(const Vector& point) const;
  [[nodiscard]] std::string str() const;

private:
  void add_term(const Exponents& e, const Rational& c);

  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Fully expanded determinant of a square polynomial matrix, computed by
/// Laplace expansion along rows with memoization on the set of used
/// columns. Zero entries are skipped, so sparse matrices (one or two
/// nonzeros per row) expand in near-linear time. Supports up to 64 columns.
Polynomial symbolic_determinant(const PolyMatrix& m);

} // namespace lieconf
