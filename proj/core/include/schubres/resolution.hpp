#pragma once

// Betti tables from a cohomology oracle and from the closed hook formula for symmetric determinantal rings.

#include "schubres/arith.hpp"
#include "schubres/bott.hpp"
#include "schubres/polynomial.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace schubres {

struct BettiEntry {
  Integer multiplicity = 0;
  // (Schur label, dimension) of each contributing summand, in insertion order.
  std::vector<std::pair<std::vector<int>, Integer>> provenance;
};

class BettiTable {
 public:
  using Key = std::pair<int, int>;  // (homological index i, internal degree d)

  void add(int i, int d, const std::vector<int>& label, const Integer& dim);
  const std::map<Key, BettiEntry>& entries() const { return entries_; }
  Integer at(int i, int d) const;
  bool empty() const { return entries_.empty(); }
  // Largest homological index, -1 if empty.
  int length() const;
  // Sum of multiplicities in homological position i.
  Integer rank_at(int i) const;
  // The plain (i, d) -> multiplicity map.
  std::map<Key, Integer> multiplicities() const;
  // every entry of `other` appears here with at least its multiplicity
  bool contains(const BettiTable& other) const;
  // F_0 = R: entry (0,0) equals 1 and no other i = 0 entries.
  bool starts_with_ring() const;

 private:
  std::map<Key, BettiEntry> entries_;
};

// A rational-singularity violation: some class would land in negative homological position.
class RationalSingularityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// t -> cohomology of Lambda^t xi, grouped by degree.
using CohomologyOracle = std::function<CohomologyByDegree(int t)>;

// F_i collects H^j(Lambda^{i+j} xi) (x) R(-i-j) for t = 0..max_t.
BettiTable assemble(const CohomologyOracle& oracle, int max_t);

// Largest t at which some lambda in Q_{k-1}(2t) still has a conjugate with at most n rows.
int jpw_t_bound(int n, int k);
BettiTable jpw_closed_form(int n, int k, std::optional<int> max_t = std::nullopt);

// Coefficients of sum (-1)^i beta_{i,d} z^d, ascending; trailing zeros trimmed.
std::vector<Integer> k_polynomial(const BettiTable& b);

struct ConsistencyReport {
  bool divisible = false;
  Integer degree = 0;               // quotient at z = 1, meaningful when divisible
  std::vector<Integer> quotient;    // K(z) / (1-z)^codim when divisible
};

ConsistencyReport consistency_check(const BettiTable& b, int codim);

// codimension of the rank <= k locus in Sym_n
inline int symmetric_codim(int n, int k) { return (n - k + 1) * (n - k) / 2; }

struct Unsupported {
  std::string reason;
};

// xi = S^2 R* on GL_n/P_{n-u} with R the tautological subbundle of rank n-u.
struct XiDescription {
  int n = 0;
  int u = 0;
  BundleDescription xi;

  Integer rank() const { return xi.rank(); }
  int max_t() const;
  // Lambda^t xi, one summand per label of exterior_of_sym2(t, n-u).
  BundleDescription exterior_power(int t) const;
};

std::variant<XiDescription, Unsupported> build_xi_description(int n, int k, int r);

CohomologyOracle xi_oracle(const XiDescription& d);

// Size-(k+1) minors of the generic symmetric matrix, deduplicated up to sign and then thinned to a
// linearly independent subset spanning the same space.
std::vector<Polynomial> minor_generators(int n, int k);

// Every (k+1)-minor with rows <= columns lexicographically, deduplicated up to sign, before thinning.
std::vector<Polynomial> distinct_symmetric_minors(int n, int k);

// x_ij of the generic symmetric matrix, i >= j.
Polynomial symmetric_entry(int i, int j);

// ---- output ----

struct TableParams {
  int n, k, r;
};

// Stable JSON text: params, betti (sorted by (i, degree)), codim, k_polynomial.
std::string betti_json(const BettiTable& b, const TableParams& p, int codim);
// Aligned grid, rows i, columns degree, '.' for zero.
std::string betti_grid(const BettiTable& b);

}  // namespace schubres
