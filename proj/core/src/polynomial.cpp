#include "schubres/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace schubres {

std::string var_name(int id) {
  auto [i, j] = var_indices(id);
  if (i < 10 && j < 10) return "x" + std::to_string(i) + std::to_string(j);
  return "x_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

Polynomial::Polynomial(const Integer& c) {
  if (c != 0) terms_[{}] = c;
}

Polynomial Polynomial::variable(int id) {
  Polynomial p;
  p.terms_[{{id, 1}}] = 1;
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int e = 0;
    for (const auto& ve : m) e += ve.second;
    d = std::max(d, e);
  }
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = degree();
  for (const auto& [m, c] : terms_) {
    int e = 0;
    for (const auto& ve : m) e += ve.second;
    if (e != d) return false;
  }
  return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) {
    auto& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) {
    auto& slot = terms_[m];
    slot -= c;
    if (slot == 0) terms_.erase(m);
  }
  return *this;
}

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial p;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      auto& slot = p.terms_[multiply(ma, mb)];
      slot += ca * cb;
    }
  std::erase_if(p.terms_, [](const auto& kv) { return kv.second == 0; });
  return p;
}

Rational Polynomial::evaluate(const std::function<Rational(int)>& value) const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m)
      for (int k = 0; k < e; ++k) t *= value(v);
    s += t;
  }
  return s;
}

std::string Polynomial::to_string(const std::function<std::string(int)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest-degree terms first, then by monomial order
  std::vector<std::pair<Monomial, Integer>> ts(terms_.begin(), terms_.end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
    int dx = 0, dy = 0;
    for (const auto& ve : x.first) dx += ve.second;
    for (const auto& ve : y.first) dy += ve.second;
    return dx > dy;
  });
  for (const auto& [m, c] : ts) {
    Integer a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (a != 1 || m.empty()) os << a;
    for (const auto& [v, e] : m) {
      os << name(v);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

Polynomial det_rec(const Matrix<Polynomial>& m, std::vector<int>& cols, int row) {
  int n = m.rows();
  if (row == n) return Polynomial(1);
  Polynomial total;
  int sign = 1;
  for (size_t c = 0; c < cols.size(); ++c) {
    int col = cols[c];
    if (!m(row, col).is_zero()) {
      cols.erase(cols.begin() + c);
      Polynomial sub = det_rec(m, cols, row + 1);
      cols.insert(cols.begin() + c, col);
      Polynomial term = m(row, col) * sub;
      if (sign > 0)
        total += term;
      else
        total -= term;
    }
    sign = -sign;
  }
  return total;
}

}  // namespace

Polynomial determinant(const Matrix<Polynomial>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  std::vector<int> cols(m.cols());
  for (int i = 0; i < m.cols(); ++i) cols[i] = i;
  return det_rec(m, cols, 0);
}

}  // namespace schubres
