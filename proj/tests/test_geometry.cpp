#include "schubres/geometry.hpp"
#include "schubres/weyl.hpp"

#include <doctest.h>

#include <random>

using namespace schubres;

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

QMatrix random_q(int r, int c, std::mt19937_64& rng, int bound = 4) {
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

QMatrix random_sym(int n, std::mt19937_64& rng) {
  QMatrix s(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b <= a; ++b) s(a, b) = s(b, a) = uniform(rng, -4, 4);
  return s;
}

// Z^T F Z = F, checked on the assembled 2n x 2n matrix.
bool preserves_form(const QMatrix& z) {
  QMatrix F = symplectic_form(z.rows() / 2).F;
  return z.transpose() * F * z == F;
}

// Block matrix with the given blocks, built to be symplectic: [[A, 0], [0, J A^{-T} J]] times unipotents.
BlockMatrix2n symplectic_sample(int n, std::mt19937_64& rng, bool singular_a) {
  QMatrix J = antidiagonal_j(n), I = QMatrix::identity(n), O(n, n);
  for (;;) {
    QMatrix A = random_q(n, n, rng);
    auto Ainv = inverse(A);
    if (!Ainv) continue;
    BlockMatrix2n lower{I, O, J * random_sym(n, rng), I};
    BlockMatrix2n levi{A, O, O, J * Ainv->transpose() * J};
    BlockMatrix2n upper{I, J * random_sym(n, rng), O, I};
    QMatrix z = lower.full() * levi.full() * upper.full();
    if (singular_a) z = z * symplectic_form(n).F;  // the new A block is -C J of the old, often singular
    BlockMatrix2n b = BlockMatrix2n::from_full(z);
    if (singular_a == !inverse(b.A).has_value()) return b;
  }
}

}  // namespace

TEST_CASE("symplectic form") {
  for (int n = 1; n <= 4; ++n) {
    QMatrix F = symplectic_form(n).F;
    CHECK(F.transpose() == -F);
    CHECK(inverse(F).has_value());
  }
}

TEST_CASE("is_symplectic examples") {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 4; ++n) {
    CHECK(is_symplectic(BlockMatrix2n::identity(n)));
    QMatrix J = antidiagonal_j(n), O(n, n);
    for (int t = 0; t < 20; ++t) {
      QMatrix A = random_q(n, n, rng);
      auto Ainv = inverse(A);
      if (!Ainv) continue;
      BlockMatrix2n d{A, O, O, J * Ainv->transpose() * J};
      CHECK(is_symplectic(d));
      CHECK(preserves_form(d.full()));
    }
    int rejected = 0;
    for (int t = 0; t < 20; ++t) {
      BlockMatrix2n g{random_q(n, n, rng), random_q(n, n, rng), random_q(n, n, rng), random_q(n, n, rng)};
      rejected += !is_symplectic(g);
      CHECK(is_symplectic(g) == preserves_form(g.full()));
    }
    if (n >= 2) CHECK(rejected == 20);
  }
}

TEST_CASE("opposite_cell_factor") {
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 3; ++n) {
    auto f = opposite_cell_factor(BlockMatrix2n::identity(n));
    CHECK(f.z1 == BlockMatrix2n::identity(n));
    CHECK(f.z2 == BlockMatrix2n::identity(n));
  }
  for (int t = 0; t < 100; ++t) {
    int n = 1 + t % 4;
    BlockMatrix2n z = symplectic_sample(n, rng, false);
    REQUIRE(is_symplectic(z));
    auto f = opposite_cell_factor(z);
    CHECK(f.z1.full() * f.z2.full() == z.full());
    CHECK(f.z1.A == QMatrix::identity(n));
    CHECK(f.z1.C.is_zero());
    CHECK(f.z2.D.is_zero());
    CHECK(preserves_form(f.z1.full()));
    CHECK(preserves_form(f.z2.full()));
  }
  for (int t = 0; t < 20; ++t) {
    int n = 2 + t % 3;
    BlockMatrix2n z = symplectic_sample(n, rng, true);
    REQUIRE(is_symplectic(z));
    CHECK_THROWS_AS(opposite_cell_factor(z), NotInOppositeCell);
  }
  BlockMatrix2n bad{random_q(2, 2, rng), random_q(2, 2, rng), random_q(2, 2, rng), random_q(2, 2, rng)};
  CHECK_THROWS_AS(opposite_cell_factor(bad), std::invalid_argument);
}

TEST_CASE("sym_coordinates") {
  CHECK(sym_coordinates(QMatrix(3, 3)).is_zero());
  QMatrix y(2, 2);
  y(0, 0) = 5;  // a
  y(0, 1) = 7;  // b
  y(1, 0) = 3;  // c
  y(1, 1) = 5;  // a
  QMatrix s = sym_coordinates(y);
  CHECK(s(0, 0) == 3);
  CHECK(s(0, 1) == 5);
  CHECK(s(1, 0) == 5);
  CHECK(s(1, 1) == 7);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    int n = 1 + t % 5;
    QMatrix p = antidiagonal_j(n) * random_sym(n, rng);
    CHECK(is_symmetric(sym_coordinates(p)));
  }
  QMatrix notp(2, 2);
  notp(0, 0) = 1;
  CHECK_THROWS_AS(sym_coordinates(notp), std::invalid_argument);
}

TEST_CASE("Pluecker restriction with zero coordinates and with random points") {
  std::mt19937_64 rng(4);
  for (int n = 2; n <= 5; ++n)
    for (int r = 2; r <= n; ++r)
      for (int k = 1; k < r; ++k) {
        ZMatrix id = ZMatrix::identity(2 * n);
        for (int i = r + 1; i <= 2 * n; ++i)
          for (int j = 1; j <= r - k; ++j) CHECK(plucker_restriction(n, k, r, i, j, id).minor == 0);
        for (int t = 0; t < 20; ++t) {
          ZMatrix x = ZMatrix::identity(2 * n);
          for (int i = 1; i <= 2 * n; ++i)
            for (int j = 1; j < i; ++j)
              if (is_free_coordinate_HQ(n, k, r, i, j)) x(i - 1, j - 1) = uniform(rng, -5, 5);
          REQUIRE(in_opposite_cell_HQ(n, k, r, x));
          for (int i = 1; i <= 2 * n; ++i)
            for (int j = 1; j <= 2 * n; ++j)
              if (auto range = plucker_range(n, k, r, i, j)) {
                auto c = plucker_restriction(n, k, r, i, j, x);
                CHECK(c.range == *range);
                CHECK(c.agrees());
              }
        }
      }
  CHECK_THROWS_AS(plucker_restriction(5, 2, 4, 1, 1, ZMatrix::identity(10)), std::invalid_argument);
}

TEST_CASE("Pluecker ranges") {
  CHECK(plucker_range(5, 2, 4, 5, 1) == PluckerRange::lower_left);
  CHECK(plucker_range(5, 2, 4, 9, 6) == PluckerRange::right_block);
  CHECK(plucker_range(5, 2, 4, 9, 3) == PluckerRange::middle_block);
  CHECK_FALSE(plucker_range(5, 2, 4, 4, 1).has_value());
  CHECK_FALSE(plucker_range(5, 2, 4, 9, 9).has_value());
}

TEST_CASE("opposite cell pattern for (5,2,4) in GL_10") {
  CellPattern p = opposite_cell_pattern(5, 2, 4, Group::H);
  auto x = [](int i, int j) { return Polynomial::variable(var_id(i, j)); };
  Matrix<Polynomial> e = Matrix<Polynomial>::identity(10);
  for (int i : {3, 4})
    for (int j : {1, 2}) e(i - 1, j - 1) = x(i, j);
  for (int i : {6, 7, 8})
    for (int j : {3, 4, 5}) e(i - 1, j - 1) = x(i, j);
  for (int i : {9, 10}) {
    for (int j : {7, 8}) e(i - 1, j - 1) = x(i, j);
    // rows 9 and 10 of columns 3..5 are the product E'D2
    for (int j : {3, 4, 5}) e(i - 1, j - 1) = x(i, 7) * x(7, j) + x(i, 8) * x(8, j);
  }
  CHECK(p.entries() == e);
  CHECK(p.entry(9, 3).to_string() == "x73x97 + x83x98");
}

TEST_CASE("opposite cell patterns: membership, symplecticity, product identification") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 5; ++n)
    for (int r = 2; r <= n; ++r)
      for (int k = 1; k < r; ++k) {
        CellPattern g = opposite_cell_pattern(n, k, r, Group::G);
        CellPattern h = opposite_cell_pattern(n, k, r, Group::H);
        CHECK(g.contains(QMatrix::identity(2 * n)));
        int b1 = r - k, m = n - b1;
        for (int t = 0; t < 10; ++t) {
          OppositeCellPoint pt{n, k, r, QMatrix(m, b1), antidiagonal_j(m) * random_sym(m, rng)};
          for (int a = 0; a < r - b1; ++a)
            for (int b = 0; b < b1; ++b) pt.a_prime(a, b) = uniform(rng, -4, 4);
          REQUIRE(pt.valid());
          QMatrix z = pt.assemble();
          CHECK(g.contains(z));
          CHECK(h.contains(z));
          CHECK(is_symplectic(BlockMatrix2n::from_full(z)));
          CHECK(preserves_form(z));
          ProductPoint q = product_identification(pt);
          CHECK(v_w_slice(n, k, r).contains(q.v_w));
          CHECK(v_prime_w_slice(n, k, r).contains(q.v_prime));
          OppositeCellPoint back = product_inverse(n, k, r, q);
          CHECK(back.a_prime == pt.a_prime);
          CHECK(back.d2 == pt.d2);
        }
        if (r < n) {
          OppositeCellPoint bad{n, k, r, QMatrix(m, b1), QMatrix(m, m)};
          bad.a_prime(m - 1, 0) = 1;  // bottom rows of A' must vanish
          CHECK_FALSE(bad.valid());
          CHECK_FALSE(g.contains(bad.assemble()));
          CHECK_THROWS_AS(product_identification(bad), std::invalid_argument);
        }
      }
}

TEST_CASE("product identification of the zero point") {
  OppositeCellPoint zero{5, 2, 4, QMatrix(3, 2), QMatrix(3, 3)};
  ProductPoint q = product_identification(zero);
  CHECK(q.v_w.is_zero());
  CHECK(q.v_prime == QMatrix::identity(5));
}

TEST_CASE("slices") {
  CHECK(v_w_slice(2, 1, 2).dimension() == 1);
  CHECK(t_slice(4, 0).dimension() == 0);
  CHECK(t_slice(3, 1).dimension() == 3);
  CHECK_THROWS(t_slice(3, 2));
  for (int n = 1; n <= 7; ++n)
    for (int u = 0; 2 * u <= n; ++u) {
      CHECK(t_slice(n, u).dimension() == u * (n - u) + u * (u + 1) / 2);
      CHECK(n * (n + 1) / 2 - t_slice(n, u).dimension() == (n - u + 1) * (n - u) / 2);
    }
}

TEST_CASE("desing_data") {
  DesingData d = desing_data(2, 1, 2);
  CHECK(d.base_dim == 1);
  CHECK(d.fibre_dim == 1);
  CHECK(d.dim_y == 2);
  CHECK(d.codim == 1);
  CHECK(desing_data(3, 1, 3).codim == 3);
  for (int n = 2; n <= 6; ++n)
    for (int r = 2; r <= n; ++r)
      for (int k = 1; k < r; ++k) {
        DesingData e = desing_data(n, k, r);
        CHECK(e.dim_y + e.codim == n * (n + 1) / 2);
        CHECK(e.dim_y == e.dim_z);
        CHECK(e.bundle_rank == n * (n + 1) / 2 - e.fibre_dim);
        // the Schubert cell dimension is the length of w
        CHECK(e.dim_y == length_C(family_element(n, k, r)));
        if (r == n) {
          CHECK(e.codim == (n - k + 1) * (n - k) / 2);
          CHECK(e.dim_y == n * k - k * (k - 1) / 2);
        }
        if (k == r - 1 && r == n) CHECK(e.base_dim == r - 1);
      }
  CHECK_THROWS(desing_data(3, 3, 3));
}

TEST_CASE("literal V_w reading disagrees with the cell dimension for some parameters") {
  int mismatches = 0;
  for (int n = 2; n <= 5; ++n)
    for (int r = 2; r <= n; ++r)
      for (int k = 1; k < r; ++k) mismatches += literal_v_w_dimension(n, k, r) != desing_data(n, k, r).fibre_dim;
  CHECK(mismatches > 0);
}
