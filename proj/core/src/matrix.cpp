#include "schubres/matrix.hpp"

#include <utility>

namespace schubres {

Integer determinant(ZMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Gauss-Jordan in place; det is meaningful only for square input.
struct Elimination {
  int rank = 0;
  Rational det = 1;
};

Elimination eliminate(QMatrix& m, QMatrix* companion) {
  Elimination e;
  int rows = m.rows(), cols = m.cols();
  for (int c = 0; c < cols && e.rank < rows; ++c) {
    int p = e.rank;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) {
      e.det = 0;
      continue;
    }
    if (p != e.rank) {
      for (int j = 0; j < cols; ++j) std::swap(m(p, j), m(e.rank, j));
      if (companion)
        for (int j = 0; j < companion->cols(); ++j) std::swap((*companion)(p, j), (*companion)(e.rank, j));
      e.det = -e.det;
    }
    Rational piv = m(e.rank, c);
    e.det *= piv;
    for (int j = 0; j < cols; ++j) m(e.rank, j) /= piv;
    if (companion)
      for (int j = 0; j < companion->cols(); ++j) (*companion)(e.rank, j) /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == e.rank || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (int j = 0; j < cols; ++j) m(i, j) -= f * m(e.rank, j);
      if (companion)
        for (int j = 0; j < companion->cols(); ++j) (*companion)(i, j) -= f * (*companion)(e.rank, j);
    }
    ++e.rank;
  }
  if (e.rank < rows) e.det = 0;
  return e;
}

}  // namespace

Rational determinant(QMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  return eliminate(m, nullptr).det;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  QMatrix a(m);
  QMatrix inv = QMatrix::identity(m.rows());
  if (eliminate(a, &inv).rank < m.rows()) return std::nullopt;
  return inv;
}

int rank(QMatrix m) { return eliminate(m, nullptr).rank; }

QMatrix antidiagonal_j(int n) {
  QMatrix j(n, n);
  for (int i = 0; i < n; ++i) j(i, n - 1 - i) = 1;
  return j;
}

bool is_symmetric(const QMatrix& m) { return m.rows() == m.cols() && m == m.transpose(); }

}  // namespace schubres
