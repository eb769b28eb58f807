#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gvec/field.hpp"

namespace gvec {

/// Dense row-major matrix over a prime field. Carries its field by value.
class Matrix {
 public:
  Matrix() = default;
  Matrix(PrimeField f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(PrimeField f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  const PrimeField& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const std::vector<Scalar>& data() const { return a_; }

  bool isZero() const {
    return std::all_of(a_.begin(), a_.end(), [](Scalar x) { return x == 0; });
  }

  Matrix transpose() const {
    Matrix t(f_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix column(std::size_t c) const { return selectColumns({c}); }

  Matrix selectColumns(const std::vector<std::size_t>& cs) const {
    Matrix m(f_, rows_, cs.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < cs.size(); ++j) m(r, j) = (*this)(r, cs[j]);
    return m;
  }

  Matrix selectRows(const std::vector<std::size_t>& rs) const {
    Matrix m(f_, rs.size(), cols_);
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(rs[i], c);
    return m;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(f_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
    return m;
  }

  void setBlock(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix m(f_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        Scalar x = (*this)(r, k);
        if (x == 0) continue;
        for (std::size_t c = 0; c < o.cols_; ++c)
          m(r, c) = f_.add(m(r, c), f_.mul(x, o(k, c)));
      }
    return m;
  }

  Matrix operator+(const Matrix& o) const {
    checkSameShape(o);
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = f_.add(a_[i], o.a_[i]);
    return m;
  }

  Matrix operator-(const Matrix& o) const {
    checkSameShape(o);
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = f_.sub(a_[i], o.a_[i]);
    return m;
  }

  Matrix scaled(Scalar s) const {
    Matrix m = *this;
    for (auto& x : m.a_) x = f_.mul(x, s);
    return m;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  void checkSameShape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  PrimeField f_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

inline Matrix hstack(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows());
  Matrix m(a.field(), a.rows(), a.cols() + b.cols());
  m.setBlock(0, 0, a);
  m.setBlock(0, a.cols(), b);
  return m;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.cols());
  Matrix m(a.field(), a.rows() + b.rows(), a.cols());
  m.setBlock(0, 0, a);
  m.setBlock(a.rows(), 0, b);
  return m;
}

struct Echelon {
  Matrix reduced;                 ///< reduced row echelon form; zero rows at the bottom
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
inline Echelon rref(Matrix m) {
  const PrimeField& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t k = c; k < m.cols(); ++k) std::swap(m(sel, k), m(row, k));
    Scalar inv = f.inv(m(row, c));
    for (std::size_t k = c; k < m.cols(); ++k) m(row, k) = f.mul(m(row, k), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c) == 0) continue;
      Scalar factor = f.neg(m(r, c));
      for (std::size_t k = c; k < m.cols(); ++k)
        if (m(row, k) != 0) m(r, k) = f.add(m(r, k), f.mul(factor, m(row, k)));
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

/// Rank by forward elimination only.
inline std::size_t rank(Matrix m) {
  const PrimeField& f = m.field();
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t k = c; k < m.cols(); ++k) std::swap(m(sel, k), m(row, k));
    Scalar inv = f.inv(m(row, c));
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, c) == 0) continue;
      Scalar factor = f.neg(f.mul(m(r, c), inv));
      for (std::size_t k = c; k < m.cols(); ++k)
        if (m(row, k) != 0) m(r, k) = f.add(m(r, k), f.mul(factor, m(row, k)));
    }
    ++row;
  }
  return row;
}

/// Columns form a basis of the right kernel.
inline Matrix nullspaceBasis(const Matrix& m) {
  Echelon e = rref(m);
  const PrimeField& f = m.field();
  std::vector<bool> isPivot(m.cols(), false);
  for (auto p : e.pivots) isPivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!isPivot[c]) free.push_back(c);
  Matrix basis(f, m.cols(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    basis(free[j], j) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], j) = f.neg(e.reduced(r, free[j]));
  }
  return basis;
}

/// Columns of `m` at its pivot positions: a basis of the column space.
inline Matrix columnSpaceBasis(const Matrix& m) { return m.selectColumns(rref(m).pivots); }

/// Rows span the annihilator of the column space: q * m = 0, q of full row rank.
inline Matrix leftNullspace(const Matrix& m) { return nullspaceBasis(m.transpose()).transpose(); }

/// Some X with a * X = b, or nullopt when the system is inconsistent.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  assert(a.rows() == b.rows());
  Echelon e = rref(hstack(a, b));
  const PrimeField& f = a.field();
  Matrix x(f, a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    std::size_t pc = e.pivots[r];
    if (pc >= a.cols()) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(pc, c) = e.reduced(r, a.cols() + c);
  }
  return x;
}

inline bool isInvertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

/// Entries i.i.d. uniform on F_p, drawn row-major from `rng`.
inline Matrix randomMatrix(PrimeField f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(f, rng);
  return m;
}

}  // namespace gvec
