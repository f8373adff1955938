#include "schubres/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace schubres {

namespace {

bool is_bijection(const std::vector<int>& w) {
  std::vector<char> seen(w.size() + 1, 0);
  for (int v : w) {
    if (v < 1 || v > static_cast<int>(w.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

void append_run(std::vector<int>& out, int a, int b) {
  if (a >= b)
    for (int v = a; v >= b; --v) out.push_back(v);
  else
    for (int v = a; v <= b; ++v) out.push_back(v);
}

}  // namespace

PermutationA::PermutationA(std::vector<int> word) : word_(std::move(word)) {
  if (!is_bijection(word_)) throw std::invalid_argument("not a permutation of 1..N");
}

PermutationA PermutationA::identity(int N) {
  std::vector<int> w(N);
  std::iota(w.begin(), w.end(), 1);
  return PermutationA(std::move(w));
}

WeylElementC::WeylElementC(int n, std::vector<int> half_word) : n_(n), half_(std::move(half_word)) {
  if (n < 1 || static_cast<int>(half_.size()) != n)
    throw std::invalid_argument("half word must have length n >= 1");
  std::vector<char> seen(2 * n + 1, 0);
  for (int v : half_) {
    if (v < 1 || v > 2 * n) throw std::invalid_argument("half word entry out of range");
    if (seen[v] || seen[primed(n, v)])
      throw std::invalid_argument("half word repeats a value or its primed partner");
    seen[v] = 1;
  }
}

WeylElementC WeylElementC::identity(int n) {
  std::vector<int> h(n);
  std::iota(h.begin(), h.end(), 1);
  return WeylElementC(n, std::move(h));
}

WeylElementC WeylElementC::from_full_word(const std::vector<int>& full) {
  if (full.empty() || full.size() % 2 != 0 || !is_bijection(full))
    throw std::invalid_argument("full word must be a permutation of even length");
  int n = static_cast<int>(full.size()) / 2;
  for (int i = 1; i <= 2 * n; ++i)
    if (full[i - 1] != 2 * n + 1 - full[2 * n - i])
      throw std::invalid_argument("full word is not fixed by the involution");
  return WeylElementC(n, std::vector<int>(full.begin(), full.begin() + n));
}

std::vector<int> WeylElementC::full_word() const {
  std::vector<int> full(half_);
  full.resize(2 * n_);
  for (int i = n_ + 1; i <= 2 * n_; ++i) full[i - 1] = 2 * n_ + 1 - full[2 * n_ - i];
  return full;
}

ParabolicMarker::ParabolicMarker(RootSystem type, int rank, std::vector<int> omitted)
    : type_(type), rank_(rank), omitted_(std::move(omitted)) {
  std::sort(omitted_.begin(), omitted_.end());
  omitted_.erase(std::unique(omitted_.begin(), omitted_.end()), omitted_.end());
  for (int l : omitted_)
    if (l < 1 || l > rank_) throw std::invalid_argument("omitted index outside simple-root range");
}

ParabolicMarker ParabolicMarker::borel(RootSystem type, int rank) {
  std::vector<int> all(rank);
  std::iota(all.begin(), all.end(), 1);
  return ParabolicMarker(type, rank, std::move(all));
}

ParabolicMarker ParabolicMarker::to_type_a() const {
  if (type_ == RootSystem::A) return *this;
  int n = rank_;
  std::vector<int> idx;
  for (int l : omitted_) {
    idx.push_back(l);
    if (l != n) idx.push_back(2 * n - l);
  }
  return ParabolicMarker(RootSystem::A, 2 * n - 1, std::move(idx));
}

int length_A(const PermutationA& p) {
  const auto& w = p.word();
  int inv = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

int m_value(const WeylElementC& w) {
  return static_cast<int>(
      std::count_if(w.half_word().begin(), w.half_word().end(), [&](int a) { return a > w.n(); }));
}

int length_C(const WeylElementC& w) {
  int s = length_A(w.as_permutation()) + m_value(w);
  if (s % 2 != 0) throw std::logic_error("type-A length plus m_w is odd");
  return s / 2;
}

WeylElementC family_element(int n, int k, int r) {
  if (!(1 <= k && k < r && r <= n)) throw std::invalid_argument("need 1 <= k < r <= n");
  std::vector<int> h;
  for (int v = k + 1; v <= r; ++v) h.push_back(v);
  for (int v = n; v >= r + 1; --v) h.push_back(primed(n, v));
  for (int v = k; v >= 1; --v) h.push_back(primed(n, v));
  return WeylElementC(n, std::move(h));
}

CosetRep w_tilde_min_rep(const WeylElementC& w, const ParabolicMarker& P) {
  if (P.type() != RootSystem::C || P.rank() != w.n())
    throw std::invalid_argument("marker must be type C of the same rank");
  ParabolicMarker A = P.to_type_a();
  std::vector<int> full = w.full_word();
  int start = 0;
  std::vector<int> cuts = A.omitted();
  cuts.push_back(static_cast<int>(full.size()));
  for (int c : cuts) {
    std::sort(full.begin() + start, full.begin() + c);
    start = c;
  }
  int last = A.omitted().empty() ? 0 : A.omitted().back();
  CosetRep rep{WeylElementC::from_full_word(full), full, std::vector<int>(full.begin(), full.begin() + last)};
  return rep;
}

PermutationA w_max_rep(int n, int k, int r) {
  if (!(1 <= k && k < r && r <= n)) throw std::invalid_argument("need 1 <= k < r <= n");
  auto p = [n](int i) { return primed(n, i); };
  std::vector<int> w;
  append_run(w, r, k + 1);
  append_run(w, p(1), p(k));
  if (r < n) {
    append_run(w, p(r + 1), p(n));
    append_run(w, n, r + 1);
  }
  append_run(w, k, 1);
  append_run(w, p(k + 1), p(r));
  return PermutationA(std::move(w));
}

namespace {

bool order_isomorphic(const std::vector<int>& a, const std::vector<int>& pattern) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if ((a[i] < a[j]) != (pattern[i] < pattern[j])) return false;
  return true;
}

bool contains_pattern(const std::vector<int>& w, const std::vector<int>& pattern, std::vector<int>& chosen,
                      size_t from) {
  if (chosen.size() == pattern.size()) return order_isomorphic(chosen, pattern);
  size_t need = pattern.size() - chosen.size();
  for (size_t i = from; i + need <= w.size(); ++i) {
    chosen.push_back(w[i]);
    // prune as soon as the partial choice stops matching the pattern prefix
    bool ok = true;
    size_t m = chosen.size() - 1;
    for (size_t q = 0; q < m && ok; ++q)
      if ((chosen[q] < chosen[m]) != (pattern[q] < pattern[m])) ok = false;
    if (ok && contains_pattern(w, pattern, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool avoids_patterns(const PermutationA& p, const std::vector<PermutationA>& patterns) {
  for (const auto& pat : patterns) {
    std::vector<int> chosen;
    if (contains_pattern(p.word(), pat.word(), chosen, 0)) return false;
  }
  return true;
}

bool bruhat_leq_grassmannian(std::vector<int> u, std::vector<int> v) {
  if (u.size() != v.size()) throw std::invalid_argument("Grassmannian comparison needs equal lengths");
  std::sort(u.begin(), u.end());
  std::sort(v.begin(), v.end());
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

bool bruhat_leq(const PermutationA& u, const PermutationA& v, const ParabolicMarker& P) {
  if (P.type() != RootSystem::A || u.size() != v.size() || P.rank() != u.size() - 1)
    throw std::invalid_argument("type-A marker must match the permutation size");
  for (int l : P.omitted()) {
    std::vector<int> a(u.word().begin(), u.word().begin() + l);
    std::vector<int> b(v.word().begin(), v.word().begin() + l);
    if (!bruhat_leq_grassmannian(std::move(a), std::move(b))) return false;
  }
  return true;
}

namespace {

PermutationA transposition(int N, int a, int b) {
  std::vector<int> w(N);
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[a - 1], w[b - 1]);
  return PermutationA(std::move(w));
}

// the negative root e_i - e_j (i > j) lies outside the Levi of P
bool outside_levi(const ParabolicMarker& P, int j, int i) {
  for (int l : P.omitted())
    if (j <= l && l < i) return true;
  return false;
}

}  // namespace

int tangent_dim_at_id(const PermutationA& w, const ParabolicMarker& P) {
  if (P.type() != RootSystem::A) throw std::invalid_argument("type-A marker expected");
  int N = w.size();
  int count = 0;
  for (int j = 1; j <= N; ++j)
    for (int i = j + 1; i <= N; ++i)
      if (outside_levi(P, j, i) && bruhat_leq(transposition(N, j, i), w, P)) ++count;
  return count;
}

int tangent_dim_at_id(const WeylElementC& w, const ParabolicMarker& P) {
  if (P.type() != RootSystem::C || P.rank() != w.n())
    throw std::invalid_argument("type-C marker of matching rank expected");
  ParabolicMarker A = P.to_type_a();
  PermutationA full = w.as_permutation();
  int n = w.n();
  int type_a = tangent_dim_at_id(full, A);
  int c = 0;
  for (int i = 1; i <= n; ++i)
    if (outside_levi(A, i, primed(n, i)) && bruhat_leq(transposition(2 * n, i, primed(n, i)), full, A)) ++c;
  if ((type_a + c) % 2 != 0) throw std::logic_error("tangent count is not sigma-balanced");
  return (type_a + c) / 2;
}

}  // namespace schubres
