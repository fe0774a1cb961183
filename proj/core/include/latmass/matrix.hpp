#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "latmass/numeric.hpp"

namespace latmass {

template <typename T>
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c) {}
  Mat(std::size_t r, std::size_t c, std::initializer_list<T> init)
      : rows_(r), cols_(c), data_(init) {
    if (data_.size() != r * c) throw domain_error("Mat: initializer size mismatch");
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  // Row-major flattened lexicographic comparison; shapes compared first.
  bool lex_less(const Mat& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return std::lexicographical_compare(data_.begin(), data_.end(), o.data_.begin(),
                                        o.data_.end());
  }

  Mat transposed() const {
    Mat m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw domain_error("Mat: dimension mismatch in product");
    Mat m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
      }
    return m;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  void set_row(std::size_t i, const std::vector<T>& v) {
    std::copy(v.begin(), v.end(), data_.begin() + i * cols_);
  }

  template <typename U>
  Mat<U> cast() const {
    Mat<U> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = U((*this)(i, j));
    return m;
  }

private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

// x^T A y for column-vector semantics on flat vectors.
template <typename T>
T bilinear(const Mat<T>& a, const std::vector<T>& x, const std::vector<T>& y) {
  T s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i] == 0) continue;
    T t = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) t += a(i, j) * y[j];
    s += x[i] * t;
  }
  return s;
}

// Fraction-free determinant (Bareiss).
Int det(const IMat& m);
Rat det(const QMat& m);

// Row Hermite-style reduction: returns a matrix whose rows are a basis of the
// row span of m over Z (zero rows dropped); echelon with positive pivots.
IMat row_basis_hnf(IMat m);

// Elementary divisors d1 | d2 | ... of an integer matrix (Smith normal form
// diagonal, 1-entries included, zeros excluded).
std::vector<Int> smith_divisors(IMat m);

QMat inverse(const QMat& m);

// Basis of the right kernel {x : m x = 0} over Q, as rows.
QMat kernel(const QMat& m);

std::size_t rank(QMat m);

}  // namespace latmass
