#include "schubres/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace schubres {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::vector<int> Partition::padded(int len) const {
  if (len < length()) throw std::invalid_argument("partition longer than requested padding");
  std::vector<int> v(parts_);
  v.resize(len, 0);
  return v;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> c(lambda.length() ? lambda[0] : 0, 0);
  for (int p : lambda.parts())
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

int durfee_rank(const Partition& lambda) {
  int s = 0;
  while (s < lambda.length() && lambda[s] >= s + 1) ++s;
  return s;
}

FrobeniusHooks to_hooks(const Partition& lambda) {
  Partition c = conjugate(lambda);
  int s = durfee_rank(lambda);
  FrobeniusHooks h;
  for (int i = 0; i < s; ++i) {
    h.arms.push_back(lambda[i] - (i + 1));
    h.legs.push_back(c[i] - (i + 1));
  }
  return h;
}

Partition from_hooks(const FrobeniusHooks& h) {
  size_t s = h.arms.size();
  if (h.legs.size() != s) throw std::invalid_argument("arms and legs differ in count");
  for (size_t i = 0; i < s; ++i) {
    if (h.arms[i] < 0 || h.legs[i] < 0) throw std::invalid_argument("negative hook coordinate");
    if (i > 0 && (h.arms[i] >= h.arms[i - 1] || h.legs[i] >= h.legs[i - 1]))
      throw std::invalid_argument("hook coordinates must strictly decrease");
  }
  if (s == 0) return Partition();
  std::vector<int> rows;
  for (size_t i = 0; i < s; ++i) rows.push_back(h.arms[i] + static_cast<int>(i) + 1);
  // rows below the Durfee square are read off the column lengths b_j + j
  int depth = h.legs[0] + 1;
  for (int i = static_cast<int>(s) + 1; i <= depth; ++i) {
    int len = 0;
    for (size_t j = 0; j < s; ++j)
      if (h.legs[j] + static_cast<int>(j) + 1 >= i) ++len;
    rows.push_back(len);
  }
  return Partition(std::move(rows));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

// strictly decreasing nonnegative sequences of length s summing to total
void strict_rec(int s, int total, int bound, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (s == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  // the smallest possible sum of s distinct values below `bound` is s(s-1)/2
  for (int b = std::min(bound - 1, total); b >= s - 1; --b) {
    if (total - b < (s - 1) * (s - 2) / 2) continue;
    cur.push_back(b);
    strict_rec(s - 1, total - b, b, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int m) {
  if (m < 0) throw std::invalid_argument("negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(m, m, cur, out);
  return out;
}

std::vector<Partition> enumerate_Q(int k_minus_1, int weight) {
  if (k_minus_1 < 0) throw std::invalid_argument("k-1 must be nonnegative");
  if (weight < 0 || weight % 2 != 0) throw std::invalid_argument("weight must be even and nonnegative");

  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Partition>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({k_minus_1, weight});
    if (it != cache.end()) return it->second;
  }

  // hook j has size a_j + b_j + 1 = 2 b_j + k_minus_1 + 1
  std::vector<Partition> out;
  for (int s = 0; s * (k_minus_1 + 1) <= weight; ++s) {
    int rest = weight - s * (k_minus_1 + 1);
    if (rest % 2 != 0) continue;
    std::vector<std::vector<int>> legs;
    std::vector<int> cur;
    strict_rec(s, rest / 2, rest / 2 + 1, cur, legs);
    for (auto& b : legs) {
      FrobeniusHooks h;
      h.legs = b;
      for (int x : b) h.arms.push_back(x + k_minus_1);
      out.push_back(from_hooks(h));
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());

  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(k_minus_1, weight), out);
  return out;
}

Integer schur_dim(const Partition& lambda, int e) {
  if (e < 0) throw std::invalid_argument("negative dimension");
  if (lambda.length() > e) return 0;
  Partition c = conjugate(lambda);
  Integer num = 1, den = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      num *= e + j - i;
      den *= (lambda[i] - j - 1) + (c[j] - i - 1) + 1;
    }
  if (num % den != 0) throw std::logic_error("hook-content quotient is not integral");
  return num / den;
}

Integer weyl_dim(const std::vector<int>& beta) {
  for (size_t i = 1; i < beta.size(); ++i)
    if (beta[i] > beta[i - 1]) throw std::invalid_argument("weight must be weakly decreasing");
  Integer num = 1, den = 1;
  for (size_t i = 0; i < beta.size(); ++i)
    for (size_t j = i + 1; j < beta.size(); ++j) {
      num *= beta[i] - beta[j] + static_cast<int>(j - i);
      den *= static_cast<int>(j - i);
    }
  return num / den;
}

std::vector<LabeledPartition> exterior_of_sym2(int t, int e, LabelSide side) {
  if (t < 0 || e < 0) throw std::invalid_argument("t and e must be nonnegative");
  std::vector<LabeledPartition> out;
  for (const auto& lam : enumerate_Q(1, 2 * t)) {
    if (lam.length() > e) continue;
    out.push_back({side == LabelSide::schur ? lam : conjugate(lam), 1});
  }
  return out;
}

std::vector<CauchyPair> cauchy_exterior(int t, int e, int f) {
  if (t < 0 || e < 0 || f < 0) throw std::invalid_argument("negative argument");
  std::vector<CauchyPair> out;
  for (const auto& lam : partitions_of(t)) {
    if (lam.length() > e || (lam.length() > 0 && lam[0] > f)) continue;
    out.push_back({lam, conjugate(lam), 1});
  }
  return out;
}

}  // namespace schubres
