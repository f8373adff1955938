#pragma once

// Cohomology of irreducible homogeneous bundles on GL_n/P_m by the exchange algorithm.

#include "schubres/arith.hpp"

#include <map>
#include <vector>

namespace schubres {

// Integer n-tuple, weakly decreasing on positions 1..m and on m+1..n.
class QDominantWeight {
 public:
  // Throws std::invalid_argument when the tuple is not Q-dominant or m is out of range.
  QDominantWeight(int n, int m, std::vector<int> entries);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<int>& entries() const { return entries_; }

 private:
  int n_;
  int m_;
  std::vector<int> entries_;
};

struct CohomologyAnswer {
  bool zero = true;
  int degree = 0;
  std::vector<int> beta;  // weakly decreasing when !zero

  static CohomologyAnswer vanishing() { return {}; }
  friend bool operator==(const CohomologyAnswer&, const CohomologyAnswer&) = default;
};

// (.., a_{i+1} - 1, a_i + 1, ..) at 1-based position i.
std::vector<int> exchange(std::vector<int> alpha, int i);

CohomologyAnswer bott(const QDominantWeight& w);

// One irreducible summand S_mu Q* (x) S_nu R* with a multiplicity.
struct BundleSummand {
  std::vector<int> quotient_part;  // mu, length n - m
  std::vector<int> sub_part;       // nu, length m
  Integer multiplicity = 1;
};

// A completely reducible bundle on GL_n/P_cut written as a sum of irreducibles.
// cut is the length of every sub_part.
struct BundleDescription {
  int n = 0;
  int cut = 0;
  std::vector<BundleSummand> summands;

  Integer rank() const;
};

// degree j -> (Schur label beta -> multiplicity)
using CohomologyByDegree = std::map<int, std::map<std::vector<int>, Integer>>;

// Feeds each summand to bott as the weight (nu, mu) with cut m = len(nu); aggregates by degree.
CohomologyByDegree bundle_cohomology(const std::vector<BundleSummand>& summands, int n, int m);
inline CohomologyByDegree bundle_cohomology(const BundleDescription& d) {
  return bundle_cohomology(d.summands, d.n, d.cut);
}

}  // namespace schubres
