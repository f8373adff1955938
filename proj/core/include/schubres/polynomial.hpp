#pragma once

// Sparse multivariate polynomials with integer coefficients.

#include "schubres/arith.hpp"
#include "schubres/matrix.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace schubres {

// Variables are plain ints; x_{ij} uses var_id(i, j).
inline int var_id(int i, int j) { return i * 64 + j; }
inline std::pair<int, int> var_indices(int id) { return {id / 64, id % 64}; }
// "x97" when both indices are single digits, otherwise "x_{10,3}".
std::string var_name(int id);

using Monomial = std::vector<std::pair<int, int>>;  // (variable, exponent), sorted by variable

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int c) : Polynomial(Integer(c)) {}  // NOLINT: constants convert implicitly
  Polynomial(const Integer& c);                  // NOLINT

  static Polynomial variable(int id);

  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Rational evaluate(const std::function<Rational(int)>& value) const;
  std::string to_string(const std::function<std::string(int)>& name = var_name) const;

 private:
  std::map<Monomial, Integer> terms_;
};

// Laplace expansion; fine for the small sizes used here.
Polynomial determinant(const Matrix<Polynomial>& m);

}  // namespace schubres
