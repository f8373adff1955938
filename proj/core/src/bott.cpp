#include "schubres/bott.hpp"

#include "schubres/partition.hpp"

#include <stdexcept>

namespace schubres {

namespace {

bool weakly_decreasing(const std::vector<int>& v, size_t from, size_t to) {
  for (size_t i = from + 1; i < to; ++i)
    if (v[i] > v[i - 1]) return false;
  return true;
}

}  // namespace

QDominantWeight::QDominantWeight(int n, int m, std::vector<int> entries)
    : n_(n), m_(m), entries_(std::move(entries)) {
  if (n < 2 || m < 1 || m > n - 1) throw std::invalid_argument("cut must satisfy 1 <= m <= n-1");
  if (static_cast<int>(entries_.size()) != n) throw std::invalid_argument("weight must have n entries");
  if (!weakly_decreasing(entries_, 0, m) || !weakly_decreasing(entries_, m, n))
    throw std::invalid_argument("weight is not Q-dominant");
}

std::vector<int> exchange(std::vector<int> alpha, int i) {
  if (i < 1 || i >= static_cast<int>(alpha.size())) throw std::invalid_argument("exchange position out of range");
  int a = alpha[i - 1], b = alpha[i];
  alpha[i - 1] = b - 1;
  alpha[i] = a + 1;
  return alpha;
}

CohomologyAnswer bott(const QDominantWeight& w) {
  const auto& lam = w.entries();
  int n = w.n(), m = w.m();
  std::vector<int> alpha(lam.begin() + m, lam.end());
  alpha.insert(alpha.end(), lam.begin(), lam.begin() + m);

  int steps = 0;
  const int bound = n * (n - 1) / 2;
  for (;;) {
    int i = 0;
    while (i + 1 < n && alpha[i] >= alpha[i + 1]) ++i;
    if (i + 1 >= n) break;
    if (alpha[i + 1] == alpha[i] + 1) return CohomologyAnswer::vanishing();
    alpha = exchange(std::move(alpha), i + 1);
    if (++steps > bound) throw std::logic_error("exchange count exceeded n(n-1)/2");
  }
  return {false, steps, alpha};
}

Integer BundleDescription::rank() const {
  Integer r = 0;
  for (const auto& s : summands) r += s.multiplicity * weyl_dim(s.quotient_part) * weyl_dim(s.sub_part);
  return r;
}

CohomologyByDegree bundle_cohomology(const std::vector<BundleSummand>& summands, int n, int m) {
  CohomologyByDegree out;
  for (const auto& s : summands) {
    if (static_cast<int>(s.sub_part.size()) != m || static_cast<int>(s.quotient_part.size()) != n - m)
      throw std::invalid_argument("summand block sizes do not match the cut");
    std::vector<int> weight(s.sub_part);
    weight.insert(weight.end(), s.quotient_part.begin(), s.quotient_part.end());
    CohomologyAnswer a = bott(QDominantWeight(n, m, std::move(weight)));
    if (!a.zero) out[a.degree][a.beta] += s.multiplicity;
  }
  return out;
}

}  // namespace schubres
