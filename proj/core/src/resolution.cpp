#include "schubres/resolution.hpp"

#include "schubres/partition.hpp"

#include <algorithm>
#include <set>

namespace schubres {

void BettiTable::add(int i, int d, const std::vector<int>& label, const Integer& dim) {
  if (dim <= 0) return;
  auto& e = entries_[{i, d}];
  e.multiplicity += dim;
  e.provenance.emplace_back(label, dim);
}

Integer BettiTable::at(int i, int d) const {
  auto it = entries_.find({i, d});
  return it == entries_.end() ? Integer(0) : it->second.multiplicity;
}

int BettiTable::length() const {
  int m = -1;
  for (const auto& [key, e] : entries_) m = std::max(m, key.first);
  return m;
}

Integer BettiTable::rank_at(int i) const {
  Integer s = 0;
  for (const auto& [key, e] : entries_)
    if (key.first == i) s += e.multiplicity;
  return s;
}

std::map<BettiTable::Key, Integer> BettiTable::multiplicities() const {
  std::map<Key, Integer> m;
  for (const auto& [key, e] : entries_) m[key] = e.multiplicity;
  return m;
}

bool BettiTable::contains(const BettiTable& other) const {
  for (const auto& [key, e] : other.entries_)
    if (at(key.first, key.second) < e.multiplicity) return false;
  return true;
}

bool BettiTable::starts_with_ring() const {
  if (at(0, 0) != 1) return false;
  for (const auto& [key, e] : entries_)
    if (key.first == 0 && key.second != 0) return false;
  return true;
}

BettiTable assemble(const CohomologyOracle& oracle, int max_t) {
  BettiTable b;
  for (int t = 0; t <= max_t; ++t) {
    for (const auto& [j, labels] : oracle(t)) {
      int i = t - j;
      if (i < 0)
        throw RationalSingularityViolation("class in H^" + std::to_string(j) + " of exterior power " +
                                           std::to_string(t) + " gives homological index " + std::to_string(i));
      for (const auto& [beta, mult] : labels) {
        Integer dim = weyl_dim(beta);
        for (Integer c = 0; c < mult; ++c) b.add(i, t, beta, dim);
      }
    }
  }
  return b;
}

int jpw_t_bound(int n, int k) {
  if (!(1 <= k && k < n)) throw std::invalid_argument("need 1 <= k < n");
  // a contributing lambda has legs b_j <= n-k, all distinct, so 2t <= sum over b = 0..n-k of (2b + k)
  return n * (n - k + 1) / 2;
}

BettiTable jpw_closed_form(int n, int k, std::optional<int> max_t) {
  int bound = jpw_t_bound(n, k);
  int cap = 3 * n * (n + 1) / 2;
  int last = max_t ? *max_t : bound;
  if (last > cap) throw std::invalid_argument("max_t exceeds the hard enumeration cap");
  BettiTable b;
  for (int t = 0; t <= last; ++t)
    for (const auto& lam : enumerate_Q(k - 1, 2 * t)) {
      int s = durfee_rank(lam);
      if (s % 2 != 0) continue;
      Partition dual = conjugate(lam);
      if (dual.length() > n) continue;
      int i = t - k * s / 2;
      b.add(i, t, dual.padded(n), schur_dim(dual, n));
    }
  return b;
}

std::vector<Integer> k_polynomial(const BettiTable& b) {
  std::vector<Integer> c;
  for (const auto& [key, e] : b.entries()) {
    auto [i, d] = key;
    if (d < 0) throw std::invalid_argument("negative internal degree");
    if (static_cast<int>(c.size()) <= d) c.resize(d + 1, 0);
    c[d] += (i % 2 == 0 ? 1 : -1) * e.multiplicity;
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

ConsistencyReport consistency_check(const BettiTable& b, int codim) {
  if (codim < 0) throw std::invalid_argument("negative codimension");
  std::vector<Integer> p = k_polynomial(b);
  ConsistencyReport rep;
  for (int step = 0; step < codim; ++step) {
    Integer at_one = 0;
    for (const auto& c : p) at_one += c;
    if (at_one != 0 || p.empty()) return rep;
    // p = (1 - z) q with q_d = p_0 + ... + p_d
    std::vector<Integer> q(p.size() - 1);
    Integer run = 0;
    for (size_t d = 0; d + 1 < p.size(); ++d) q[d] = (run += p[d]);
    p = std::move(q);
  }
  rep.divisible = true;
  rep.quotient = p;
  for (const auto& c : p) rep.degree += c;
  return rep;
}

int XiDescription::max_t() const { return static_cast<int>(rank()); }

BundleDescription XiDescription::exterior_power(int t) const {
  int e = n - u;
  BundleDescription d{n, e, {}};
  for (const auto& s : exterior_of_sym2(t, e, LabelSide::schur))
    d.summands.push_back({std::vector<int>(u, 0), s.label.padded(e), s.multiplicity});
  return d;
}

std::variant<XiDescription, Unsupported> build_xi_description(int n, int k, int r) {
  if (!(1 <= k && k < r && r <= n)) throw std::invalid_argument("need 1 <= k < r <= n");
  if (r < n)
    return Unsupported{"r < n: the dual quotient module over GL_r/P''_{r-k} is not completely reducible"};
  if (k % 2 != 0) return Unsupported{"odd k: the enlarged-space construction needs k = 2u"};
  int u = k / 2, e = n - u;
  std::vector<int> sym2(e, 0);
  sym2[0] = 2;
  return XiDescription{n, u, BundleDescription{n, e, {{std::vector<int>(u, 0), sym2, 1}}}};
}

CohomologyOracle xi_oracle(const XiDescription& d) {
  return [d](int t) { return bundle_cohomology(d.exterior_power(t)); };
}

Polynomial symmetric_entry(int i, int j) { return Polynomial::variable(var_id(std::max(i, j), std::min(i, j))); }

namespace {

void subsets_rec(int n, int size, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == size) {
    out.push_back(cur);
    return;
  }
  for (int v = from; v <= n; ++v) {
    cur.push_back(v);
    subsets_rec(n, size, v + 1, cur, out);
    cur.pop_back();
  }
}

struct TermsLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const { return a.terms() < b.terms(); }
};

}  // namespace

std::vector<Polynomial> distinct_symmetric_minors(int n, int k) {
  if (!(1 <= k && k < n)) throw std::invalid_argument("need 1 <= k < n");
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  subsets_rec(n, k + 1, 1, cur, subsets);
  std::set<Polynomial, TermsLess> seen;
  std::vector<Polynomial> out;
  for (size_t a = 0; a < subsets.size(); ++a)
    for (size_t b = a; b < subsets.size(); ++b) {
      Matrix<Polynomial> m(k + 1, k + 1);
      for (int p = 0; p <= k; ++p)
        for (int q = 0; q <= k; ++q) m(p, q) = symmetric_entry(subsets[a][p], subsets[b][q]);
      Polynomial d = determinant(m);
      if (d.is_zero()) continue;
      if (d.terms().begin()->second < 0) d = -d;
      if (seen.insert(d).second) out.push_back(d);
    }
  return out;
}

std::vector<Polynomial> minor_generators(int n, int k) {
  std::vector<Polynomial> all = distinct_symmetric_minors(n, k);
  // incremental row reduction over Q on coefficient vectors
  std::vector<std::pair<Monomial, std::map<Monomial, Rational>>> basis;  // (pivot, reduced row)
  std::vector<Polynomial> out;
  for (const auto& p : all) {
    std::map<Monomial, Rational> v;
    for (const auto& [m, c] : p.terms()) v[m] = Rational(c);
    for (const auto& [piv, row] : basis) {
      auto it = v.find(piv);
      if (it == v.end()) continue;
      Rational f = it->second;
      for (const auto& [m, c] : row) {
        auto& slot = v[m];
        slot -= f * c;
        if (slot == 0) v.erase(m);
      }
    }
    if (v.empty()) continue;
    Monomial piv = v.begin()->first;
    Rational lead = v.begin()->second;
    for (auto& [m, c] : v) c /= lead;
    // keep earlier rows reduced against the new pivot
    for (auto& [opiv, row] : basis) {
      auto it = row.find(piv);
      if (it == row.end()) continue;
      Rational f = it->second;
      for (const auto& [m, c] : v) {
        auto& slot = row[m];
        slot -= f * c;
        if (slot == 0) row.erase(m);
      }
    }
    basis.emplace_back(piv, std::move(v));
    out.push_back(p);
  }
  return out;
}

}  // namespace schubres
