#include "schubres/matrix.hpp"
#include "schubres/polynomial.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace schubres;

namespace {

// Leibniz expansion over all permutations.
Rational leibniz(const QMatrix& m) {
  int n = m.rows();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    int inv = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) inv += p[a] > p[b];
    Rational term = inv % 2 ? -1 : 1;
    for (int a = 0; a < n; ++a) term *= m(a, p[a]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

QMatrix random_q(int r, int c, std::mt19937_64& rng, int bound = 5) {
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = static_cast<int>(rng() % (2 * bound + 1)) - bound;
  return m;
}

}  // namespace

TEST_CASE("determinants agree with the Leibniz expansion") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 6;
    QMatrix q = random_q(n, n, rng);
    if (trial % 7 == 0 && n > 1)
      for (int j = 0; j < n; ++j) q(n - 1, j) = q(0, j) * 2;  // force a singular matrix
    Rational expected = leibniz(q);
    CHECK(determinant(q) == expected);
    ZMatrix z(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) z(i, j) = numerator(q(i, j));
    CHECK(Rational(determinant(z)) == expected);
  }
}

TEST_CASE("inverse and rank") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + trial % 5;
    QMatrix q = random_q(n, n, rng);
    auto inv = inverse(q);
    CHECK(inv.has_value() == (determinant(q) != 0));
    if (inv) {
      CHECK(q * *inv == QMatrix::identity(n));
      CHECK(rank(q) == n);
    } else {
      CHECK(rank(q) < n);
    }
  }
  QMatrix r(3, 4);
  r(0, 0) = 1;
  r(1, 1) = 2;
  r(2, 0) = 3;
  CHECK(rank(r) == 2);
  CHECK(rank(QMatrix(2, 5)) == 0);
}

TEST_CASE("antidiagonal J and symmetry") {
  QMatrix J = antidiagonal_j(3);
  CHECK(J * J == QMatrix::identity(3));
  CHECK(J(0, 2) == 1);
  CHECK(J(1, 1) == 1);
  CHECK(is_symmetric(J));
  QMatrix a(2, 2);
  a(0, 1) = 1;
  CHECK_FALSE(is_symmetric(a));
  CHECK_FALSE(is_symmetric(QMatrix(2, 3)));
}

TEST_CASE("matrix shape errors") {
  CHECK_THROWS(QMatrix(2, 3) * QMatrix(2, 3));
  CHECK_THROWS(QMatrix(2, 3) + QMatrix(3, 2));
}

TEST_CASE("polynomial arithmetic") {
  Polynomial x = Polynomial::variable(var_id(1, 1)), y = Polynomial::variable(var_id(2, 1));
  Polynomial p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK_FALSE((p + 1).is_homogeneous());
  CHECK((x - x).is_zero());
  CHECK(Polynomial().degree() == -1);
  auto val = p.evaluate([](int id) { return Rational(id == var_id(1, 1) ? 3 : 2); });
  CHECK(val == 5);
  CHECK(var_name(var_id(9, 7)) == "x97");
  CHECK(var_name(var_id(10, 3)) == "x_{10,3}");
}

TEST_CASE("polynomial determinant of a generic 3x3 matches its evaluations") {
  Matrix<Polynomial> m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = Polynomial::variable(var_id(i + 1, j + 1));
  Polynomial d = determinant(m);
  CHECK(d.terms().size() == 6);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix q = random_q(3, 3, rng);
    auto v = d.evaluate([&](int id) {
      auto [i, j] = var_indices(id);
      return q(i - 1, j - 1);
    });
    CHECK(v == leibniz(q));
  }
}
