#pragma once

// Partitions, Frobenius hooks, Schur module dimensions, and the two exterior-power decompositions.

#include "schubres/arith.hpp"

#include <compare>
#include <vector>

namespace schubres {

class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; throws unless the parts are weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }  // 0-based, zero past the end
  // Parts padded with zeros to length len.
  std::vector<int> padded(int len) const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct FrobeniusHooks {
  std::vector<int> arms;
  std::vector<int> legs;
  friend bool operator==(const FrobeniusHooks&, const FrobeniusHooks&) = default;
};

Partition conjugate(const Partition& lambda);
int durfee_rank(const Partition& lambda);
FrobeniusHooks to_hooks(const Partition& lambda);
// Throws unless arms and legs are strictly decreasing, nonnegative, of equal count.
Partition from_hooks(const FrobeniusHooks& h);

// All partitions of m in reverse lexicographic order.
std::vector<Partition> partitions_of(int m);

// Partitions of `weight` whose hooks satisfy a_j = b_j + k_minus_1. Memoized; thread safe.
std::vector<Partition> enumerate_Q(int k_minus_1, int weight);

// dim S_lambda(C^e) by the hook-content formula; zero when lambda has more than e parts.
Integer schur_dim(const Partition& lambda, int e);

// Weyl dimension formula for a weakly decreasing integer weight of GL_len.
Integer weyl_dim(const std::vector<int>& beta);

// Which side of the conjugation the labels of exterior_of_sym2 sit on.
// schur: S_label E is the summand. conjugate: S_{conjugate(label)} E is the summand.
enum class LabelSide { schur, conjugate };

struct LabeledPartition {
  Partition label;
  int multiplicity = 1;
};

// Summands of Lambda^t(Sym^2 E), dim E = e. The Schur-side labels are the members of Q_1(2t) with at most e rows.
std::vector<LabeledPartition> exterior_of_sym2(int t, int e, LabelSide side = LabelSide::schur);

struct CauchyPair {
  Partition lambda;
  Partition lambda_conjugate;
  int multiplicity = 1;
};

// Lambda^t(E (x) F) = sum over lambda |- t of S_lambda E (x) S_lambda' F, dim E = e, dim F = f.
std::vector<CauchyPair> cauchy_exterior(int t, int e, int f);

}  // namespace schubres
