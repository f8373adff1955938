#include "schubres/geometry.hpp"

#include <algorithm>
#include <map>

namespace schubres {

namespace {

void check_nkr(int n, int k, int r) {
  if (!(1 <= k && k < r && r <= n)) throw std::invalid_argument("need 1 <= k < r <= n");
}

QMatrix zero(int r, int c) { return QMatrix(r, c); }

}  // namespace

SymplecticForm symplectic_form(int n) {
  QMatrix F(2 * n, 2 * n);
  QMatrix J = antidiagonal_j(n);
  F.set_block(0, n, J);
  F.set_block(n, 0, -J);
  return {n, F};
}

BlockMatrix2n BlockMatrix2n::identity(int n) {
  return {QMatrix::identity(n), zero(n, n), zero(n, n), QMatrix::identity(n)};
}

BlockMatrix2n BlockMatrix2n::from_full(const QMatrix& z) {
  if (z.rows() != z.cols() || z.rows() % 2 != 0) throw std::invalid_argument("need an even square matrix");
  int n = z.rows() / 2;
  return {z.block(0, 0, n, n), z.block(0, n, n, n), z.block(n, 0, n, n), z.block(n, n, n, n)};
}

QMatrix BlockMatrix2n::full() const {
  int m = n();
  QMatrix z(2 * m, 2 * m);
  z.set_block(0, 0, A);
  z.set_block(0, m, C);
  z.set_block(m, 0, D);
  z.set_block(m, m, E);
  return z;
}

bool is_symplectic(const BlockMatrix2n& z) {
  QMatrix J = antidiagonal_j(z.n());
  QMatrix At = z.A.transpose(), Ct = z.C.transpose(), Dt = z.D.transpose(), Et = z.E.transpose();
  if (!(At * J * z.D == Dt * J * z.A)) return false;
  if (!(Ct * J * z.E == Et * J * z.C)) return false;
  if (!(At * J * z.E - Dt * J * z.C == J)) return false;
  return Et * J * z.A - Ct * J * z.D == J;
}

OppositeCellFactorization opposite_cell_factor(const BlockMatrix2n& z) {
  if (!is_symplectic(z)) throw std::invalid_argument("matrix is not symplectic");
  auto inv = inverse(z.A);
  if (!inv) throw NotInOppositeCell("upper-left block is singular");
  int n = z.n();
  QMatrix Y = z.D * *inv;
  QMatrix S = z.E - Y * z.C;
  OppositeCellFactorization f{{QMatrix::identity(n), zero(n, n), Y, QMatrix::identity(n)},
                              {z.A, z.C, zero(n, n), S}};
  QMatrix J = antidiagonal_j(n);
  if (!(J * Y == Y.transpose() * J)) throw std::logic_error("D A^-1 is not persymmetric");
  if (!(z.A.transpose() * J * S == J)) throw std::logic_error("A^T J (E - D A^-1 C) != J");
  if (!(f.z1.full() * f.z2.full() == z.full())) throw std::logic_error("factors do not recompose");
  return f;
}

QMatrix sym_coordinates(const QMatrix& y) {
  if (y.rows() != y.cols()) throw std::invalid_argument("need a square matrix");
  QMatrix s = antidiagonal_j(y.rows()) * y;
  if (!is_symmetric(s)) throw std::invalid_argument("matrix is not persymmetric");
  return s;
}

bool is_free_coordinate_HQ(int n, int k, int r, int i, int j) {
  int l1 = r - k, l3 = 2 * n - (r - k);
  for (int l : {l1, n, l3})
    if (j <= l && l < i) return true;
  return false;
}

bool in_opposite_cell_HQ(int n, int k, int r, const ZMatrix& x) {
  check_nkr(n, k, r);
  if (x.rows() != 2 * n || x.cols() != 2 * n) return false;
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = 1; j <= 2 * n; ++j) {
      const Integer& v = x(i - 1, j - 1);
      if (i == j) {
        if (v != 1) return false;
      } else if (!is_free_coordinate_HQ(n, k, r, i, j) && v != 0) {
        return false;
      }
    }
  return true;
}

std::optional<PluckerRange> plucker_range(int n, int k, int r, int i, int j) {
  check_nkr(n, k, r);
  int l1 = r - k, l3 = 2 * n - (r - k);
  if (i < 1 || i > 2 * n || j < 1) return std::nullopt;
  if (i > r && j <= l1) return PluckerRange::lower_left;
  if (i > l3 && n < j && j <= l3) return PluckerRange::right_block;
  if (i > l3 && l1 < j && j <= n) return PluckerRange::middle_block;
  return std::nullopt;
}

namespace {

PluckerRange require_range(int n, int k, int r, int i, int j) {
  auto rg = plucker_range(n, k, r, i, j);
  if (!rg) throw std::invalid_argument("(i, j) is outside the treated index ranges");
  return *rg;
}

int size_for(int n, int k, int r, PluckerRange rg) {
  return rg == PluckerRange::lower_left ? r - k : 2 * n - (r - k);
}

int sign(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

Integer plucker_minor(int n, int k, int r, int i, int j, const ZMatrix& x) {
  PluckerRange rg = require_range(n, k, r, i, j);
  int l = size_for(n, k, r, rg);
  std::vector<int> rows;
  for (int a = 1; a <= l; ++a)
    if (a != j) rows.push_back(a);
  rows.push_back(i);
  ZMatrix m(l, l);
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b) m(a, b) = x(rows[a] - 1, b);
  return determinant(std::move(m));
}

Integer plucker_closed_form(int n, int k, int r, int i, int j, const ZMatrix& x) {
  PluckerRange rg = require_range(n, k, r, i, j);
  int l = size_for(n, k, r, rg);
  auto at = [&](int a, int b) -> const Integer& { return x(a - 1, b - 1); };
  Integer v = at(i, j);
  if (rg == PluckerRange::middle_block) {
    // row i of E' against column j of D2
    for (int q = n + 1; q <= l; ++q) v -= at(i, q) * at(q, j);
  }
  return sign(l - j) * v;
}

PluckerCheck plucker_restriction(int n, int k, int r, int i, int j, const ZMatrix& x) {
  PluckerRange rg = require_range(n, k, r, i, j);
  return {rg, plucker_minor(n, k, r, i, j, x), plucker_closed_form(n, k, r, i, j, x)};
}

CellPattern::CellPattern(int n, int k, int r, Group group, Matrix<Polynomial> entries, std::vector<int> free_vars)
    : n_(n), k_(k), r_(r), group_(group), entries_(std::move(entries)), free_vars_(std::move(free_vars)) {}

bool CellPattern::contains(const QMatrix& m) const {
  if (m.rows() != 2 * n_ || m.cols() != 2 * n_) return false;
  auto value = [&](int id) {
    auto [i, j] = var_indices(id);
    return m(i - 1, j - 1);
  };
  for (int i = 0; i < 2 * n_; ++i)
    for (int j = 0; j < 2 * n_; ++j)
      if (entries_(i, j).evaluate(value) != m(i, j)) return false;
  return true;
}

CellPattern opposite_cell_pattern(int n, int k, int r, Group group) {
  check_nkr(n, k, r);
  int b1 = r - k, b3 = 2 * n - (r - k), m = n - b1;
  Matrix<Polynomial> P(2 * n, 2 * n);
  std::vector<int> free;
  for (int i = 0; i < 2 * n; ++i) P(i, i) = 1;

  auto var = [&](int i, int j) {
    free.push_back(var_id(i, j));
    return Polynomial::variable(var_id(i, j));
  };

  // A' occupies rows b1+1..n, columns 1..b1; its rows below r vanish
  Matrix<Polynomial> Ap(m, b1);
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= b1; ++b)
      if (b1 + a <= r) Ap(a - 1, b - 1) = var(b1 + a, b);

  // D2 occupies rows n+1..b3, columns b1+1..n
  Matrix<Polynomial> D2(m, m);
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b) {
      if (group == Group::H) {
        D2(a - 1, b - 1) = var(n + a, b1 + b);
      } else {
        // J D2 symmetric: (a, b) and (m+1-b, m+1-a) carry the same coordinate
        int a2 = m + 1 - b, bb2 = m + 1 - a;
        if (std::make_pair(a, b) <= std::make_pair(a2, bb2))
          D2(a - 1, b - 1) = var(n + a, b1 + b);
        else
          D2(a - 1, b - 1) = Polynomial::variable(var_id(n + a2, b1 + bb2));
      }
    }

  // E' occupies rows b3+1..2n, columns n+1..b3
  Matrix<Polynomial> Ep(b1, m);
  for (int p = 1; p <= b1; ++p)
    for (int q = 1; q <= m; ++q) {
      if (group == Group::H) {
        if (q > n - r) Ep(p - 1, q - 1) = var(b3 + p, n + q);
      } else {
        // E' = -J A'^T J
        Ep(p - 1, q - 1) = -Ap(m - q, b1 - p);
      }
    }

  Matrix<Polynomial> D4 = Ep * D2;
  P.set_block(b1, 0, Ap);
  P.set_block(n, b1, D2);
  P.set_block(b3, n, Ep);
  P.set_block(b3, b1, D4);
  std::sort(free.begin(), free.end());
  return CellPattern(n, k, r, group, std::move(P), std::move(free));
}

QMatrix OppositeCellPoint::e_prime() const {
  int b1 = r - k, m = n - b1;
  return -(antidiagonal_j(b1) * a_prime.transpose() * antidiagonal_j(m));
}

QMatrix OppositeCellPoint::assemble() const {
  int b1 = r - k, b3 = 2 * n - b1;
  QMatrix z = QMatrix::identity(2 * n);
  QMatrix ep = e_prime();
  z.set_block(b1, 0, a_prime);
  z.set_block(n, b1, d2);
  z.set_block(b3, n, ep);
  z.set_block(b3, b1, ep * d2);
  return z;
}

bool OppositeCellPoint::valid() const {
  if (!(1 <= k && k < r && r <= n)) return false;
  int b1 = r - k, m = n - b1;
  if (a_prime.rows() != m || a_prime.cols() != b1 || d2.rows() != m || d2.cols() != m) return false;
  for (int a = r - b1; a < m; ++a)
    for (int b = 0; b < b1; ++b)
      if (a_prime(a, b) != 0) return false;
  return is_symmetric(antidiagonal_j(m) * d2);
}

ProductPoint product_identification(const OppositeCellPoint& p) {
  if (!p.valid()) throw std::invalid_argument("point violates the opposite-cell pattern");
  int n = p.n, b1 = p.r - p.k, m = n - b1;
  QMatrix Jn = antidiagonal_j(n);
  QMatrix ep = p.e_prime();  // J A'^T J = -E'

  // delta: the lower-left block L of the first factor, and N = A'
  QMatrix L(n, n);
  L.set_block(0, 0, -(p.d2 * p.a_prime));
  L.set_block(0, b1, p.d2);
  L.set_block(m, 0, -(ep * p.d2 * p.a_prime));
  L.set_block(m, b1, ep * p.d2);

  QMatrix Nt = QMatrix::identity(n);
  Nt.set_block(b1, 0, p.a_prime);

  // gamma: (L N)^T J N
  QMatrix v = (L * Nt).transpose() * Jn * Nt;
  ProductPoint q{v, Nt};
  if (!v_w_slice(p.n, p.k, p.r).contains(q.v_w)) throw std::logic_error("V_w component leaves its slice");
  if (!v_prime_w_slice(p.n, p.k, p.r).contains(q.v_prime))
    throw std::logic_error("V'_w component leaves its slice");
  return q;
}

OppositeCellPoint product_inverse(int n, int k, int r, const ProductPoint& q) {
  check_nkr(n, k, r);
  int b1 = r - k, m = n - b1;
  return {n, k, r, q.v_prime.block(b1, 0, m, b1), antidiagonal_j(m) * q.v_w.block(b1, b1, m, m)};
}

bool LinearSlice::free_coordinate(int i, int j) const {
  switch (kind) {
    case SliceKind::Vw:
      return i > r - k && j > r - k;
    case SliceKind::VPrimeW:
      return i > r - k && j <= r - k && i <= r;
    case SliceKind::Tw:
      return !(i <= n - u && j <= n - u);
  }
  return false;
}

int LinearSlice::dimension() const {
  int d = 0;
  if (kind == SliceKind::VPrimeW) {
    for (int i = r - k + 1; i <= n; ++i)
      for (int j = 1; j <= r - k; ++j) d += free_coordinate(i, j);
  } else {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= i; ++j) d += free_coordinate(i, j);
  }
  return d;
}

bool LinearSlice::contains(const QMatrix& m) const {
  if (m.rows() != n || m.cols() != n) return false;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Rational& v = m(i - 1, j - 1);
      if (kind == SliceKind::VPrimeW) {
        bool in_block = i > r - k && j <= r - k;
        if (i == j ? v != 1 : ((!in_block || !free_coordinate(i, j)) && v != 0)) return false;
      } else {
        if (v != m(j - 1, i - 1)) return false;
        if (!free_coordinate(i, j) && v != 0) return false;
      }
    }
  return true;
}

LinearSlice v_w_slice(int n, int k, int r) {
  check_nkr(n, k, r);
  return {SliceKind::Vw, n, k, r, 0};
}

LinearSlice v_prime_w_slice(int n, int k, int r) {
  check_nkr(n, k, r);
  return {SliceKind::VPrimeW, n, k, r, 0};
}

LinearSlice t_slice(int n, int u) {
  if (u < 0 || 2 * u > n) throw std::invalid_argument("need 0 <= 2u <= n");
  return {SliceKind::Tw, n, 0, 0, u};
}

int literal_v_w_dimension(int n, int k, int r) {
  check_nkr(n, k, r);
  auto vanishes = [&](int i, int j) { return j <= r - k || i < n - (r - k); };
  int d = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      if (!vanishes(i, j) && !vanishes(j, i)) ++d;
  return d;
}

DesingData desing_data(int n, int k, int r) {
  check_nkr(n, k, r);
  DesingData d{};
  d.n = n;
  d.k = k;
  d.r = r;
  d.base_r = r;
  d.base_cut = r - k;
  d.base_dim = k * (r - k);
  d.fibre_dim = v_w_slice(n, k, r).dimension();
  d.dim_z = d.base_dim + d.fibre_dim;
  d.dim_y = d.dim_z;
  int sym = n * (n + 1) / 2;
  d.codim = sym - d.dim_y;
  d.bundle_rank = sym - d.fibre_dim;
  return d;
}

}  // namespace schubres
