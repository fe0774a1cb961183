#include "latmass/matrix.hpp"

namespace latmass {

Int det(const IMat& m) {
  if (m.rows() != m.cols()) throw domain_error("det: non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IMat a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

Rat det(const QMat& m) {
  if (m.rows() != m.cols()) throw domain_error("det: non-square matrix");
  std::size_t n = m.rows();
  QMat a = m;
  Rat d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(piv, j));
      d = -d;
    }
    d *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return d;
}

IMat row_basis_hnf(IMat m) {
  std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;  // current pivot row
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid all entries of column c below row r into row r.
    for (std::size_t i = r + 1; i < rows; ++i) {
      while (m(i, c) != 0) {
        if (m(r, c) == 0) {
          for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(i, j));
          continue;
        }
        Int q = floor_div(m(i, c), m(r, c));
        if (q != 0)
          for (std::size_t j = 0; j < cols; ++j) m(i, j) -= q * m(r, j);
        if (m(i, c) != 0)
          for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(i, j));
      }
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0)
      for (std::size_t j = 0; j < cols; ++j) m(r, j) = -m(r, j);
    // Reduce entries above the pivot.
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(m(i, c), m(r, c));
      if (q != 0)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) -= q * m(r, j);
    }
    ++r;
  }
  IMat out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(i, j);
  return out;
}

std::vector<Int> smith_divisors(IMat m) {
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Int> divisors;
  std::size_t k = 0;
  while (k < rows && k < cols) {
    // Find a nonzero pivot in the trailing block.
    std::size_t pi = k, pj = k;
    bool found = false;
    for (std::size_t i = k; i < rows && !found; ++i)
      for (std::size_t j = k; j < cols && !found; ++j)
        if (m(i, j) != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(k, j), m(pi, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, k), m(i, pj));
    for (;;) {
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        while (m(i, k) != 0) {
          Int q = floor_div(m(i, k), m(k, k));
          for (std::size_t j = 0; j < cols; ++j) m(i, j) -= q * m(k, j);
          if (m(i, k) != 0) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(k, j), m(i, j));
            clean = false;
          }
        }
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        while (m(k, j) != 0) {
          Int q = floor_div(m(k, j), m(k, k));
          for (std::size_t i = 0; i < rows; ++i) m(i, j) -= q * m(i, k);
          if (m(k, j) != 0) {
            for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, k), m(i, j));
            clean = false;
          }
        }
      }
      if (!clean) continue;
      // Pivot must divide every remaining entry; if not, fold the offender in.
      bool divides_all = true;
      for (std::size_t i = k + 1; i < rows && divides_all; ++i)
        for (std::size_t j = k + 1; j < cols && divides_all; ++j)
          if (m(i, j) % m(k, k) != 0) {
            for (std::size_t jj = 0; jj < cols; ++jj) m(k, jj) += m(i, jj);
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (m(k, k) < 0)
      for (std::size_t j = 0; j < cols; ++j) m(k, j) = -m(k, j);
    divisors.push_back(m(k, k));
    ++k;
  }
  return divisors;
}

QMat inverse(const QMat& m) {
  if (m.rows() != m.cols()) throw domain_error("inverse: non-square matrix");
  std::size_t n = m.rows();
  QMat a = m;
  QMat inv = QMat::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) throw domain_error("inverse: singular matrix");
    if (piv != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    Rat d = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= d;
      inv(k, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rat f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

QMat kernel(const QMat& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  QMat a = m;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(piv, j));
    Rat d = a(r, c);
    for (std::size_t j = 0; j < cols; ++j) a(r, j) /= d;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  QMat ker(cols - pivot_col.size(), cols);
  std::size_t kr = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    ker(kr, c) = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) ker(kr, pivot_col[i]) = -a(i, c);
    ++kr;
  }
  return ker;
}

std::size_t rank(QMat a) {
  std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(piv, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace latmass
