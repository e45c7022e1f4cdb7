#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lieconf/rational.hpp"

namespace lieconf {

using Vector = std::vector<Rational>;

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
bool is_zero(std::span<const Rational> v);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

std::string to_string(const Vector& v);

/// Dense row-major matrix over the rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  [[nodiscard]] Vector row(std::size_t r) const;
  [[nodiscard]] Vector col(std::size_t c) const;
  void append_row(std::span<const Rational> r);

  [[nodiscard]] Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  [[nodiscard]] bool is_zero() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form. `pivots` receives the pivot column of each
/// nonzero row.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vector> nullspace(const Matrix& m);

/// Square-matrix determinant by fraction-exact Gaussian elimination.
Rational determinant(Matrix m);

/// Inverse of a square nonsingular matrix; throws std::domain_error if
/// singular.
Matrix inverse(const Matrix& m);

/// Coefficients c with sum_i c_i * basis[i] == target, or nullopt when the
/// target lies outside the span. Basis vectors need not be independent; a
/// particular solution is returned.
std::optional<Vector> solve_in_span(const std::vector<Vector>& basis,
                                    const Vector& target);

} // namespace lieconf
