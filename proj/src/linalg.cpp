#include "lieconf/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace lieconf {

Vector operator+(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator-(const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = -a[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = s * v[i];
  return r;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  assert(a.size() == b.size());
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::append_row(std::span<const Rational> r) {
  if (r.size() != cols_) throw std::invalid_argument("append_row: width");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
      }
    }
  return p;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matvec shape");
  Vector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix sum shape");
  Matrix s(a);
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  return a + Rational(-1) * b;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix r(m);
  for (auto& x : r.data_) x *= s;
  return r;
}

bool Matrix::is_zero() const { return lieconf::is_zero(data_); }

Matrix rref(Matrix m, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row) {
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(p, j), m(lead_row, j));
    }
    const Rational inv = m(lead_row, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      const Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(lead_row, j).is_zero()) m(r, j) -= f * m(lead_row, j);
      }
    }
    if (pivots) pivots->push_back(c);
    ++lead_row;
  }
  return m;
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::vector<Vector> nullspace(const Matrix& m) {
  std::vector<std::size_t> piv;
  const Matrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant shape");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const Rational f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse shape");
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  aug = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1)
    throw std::domain_error("inverse: singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<Vector> solve_in_span(const std::vector<Vector>& basis,
                                    const Vector& target) {
  const std::size_t k = basis.size();
  const std::size_t n = target.size();
  Matrix aug(n, k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    if (basis[j].size() != n) throw std::invalid_argument("span dimension");
    for (std::size_t i = 0; i < n; ++i) aug(i, j) = basis[j][i];
  }
  for (std::size_t i = 0; i < n; ++i) aug(i, k) = target[i];
  std::vector<std::size_t> piv;
  const Matrix r = rref(aug, &piv);
  Vector coeffs(k);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == k) return std::nullopt;
    coeffs[piv[i]] = r(i, k);
  }
  return coeffs;
}

} // namespace lieconf
