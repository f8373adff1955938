#pragma once

// Symmetric groups S_N and the type-C Weyl group W_G inside S_2n.

#include <vector>

namespace schubres {

class PermutationA {
 public:
  PermutationA() = default;
  // One-line notation; throws std::invalid_argument unless word is a bijection on 1..N.
  explicit PermutationA(std::vector<int> word);

  static PermutationA identity(int N);

  const std::vector<int>& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }  // 1-based

  friend bool operator==(const PermutationA&, const PermutationA&) = default;

 private:
  std::vector<int> word_;
};

// i' = 2n+1-i.
inline int primed(int n, int i) { return 2 * n + 1 - i; }

// Element of W_G stored by its half word a_1..a_n; a_i = 2n+1-a_{2n+1-i} fills the rest.
class WeylElementC {
 public:
  WeylElementC() = default;
  WeylElementC(int n, std::vector<int> half_word);

  static WeylElementC identity(int n);
  // Throws unless the word has even length and satisfies the symmetry condition.
  static WeylElementC from_full_word(const std::vector<int>& full);

  int n() const { return n_; }
  const std::vector<int>& half_word() const { return half_; }
  std::vector<int> full_word() const;
  PermutationA as_permutation() const { return PermutationA(full_word()); }

  friend bool operator==(const WeylElementC&, const WeylElementC&) = default;

 private:
  int n_ = 0;
  std::vector<int> half_;
};

enum class RootSystem { A, C };

// Simple roots left out of a parabolic. Type A on S_N uses indices 1..N-1, type C of rank n uses 1..n.
class ParabolicMarker {
 public:
  ParabolicMarker(RootSystem type, int rank, std::vector<int> omitted);

  static ParabolicMarker borel(RootSystem type, int rank);

  RootSystem type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<int>& omitted() const { return omitted_; }

  // Type C of rank n -> type A on S_2n: index l becomes {l, 2n-l}.
  ParabolicMarker to_type_a() const;

 private:
  RootSystem type_;
  int rank_;
  std::vector<int> omitted_;
};

int length_A(const PermutationA& p);
int m_value(const WeylElementC& w);
int length_C(const WeylElementC& w);

// The element (k+1..r, n'..(r+1)', k'..1') for 1 <= k < r <= n.
WeylElementC family_element(int n, int k, int r);

struct CosetRep {
  WeylElementC element;
  std::vector<int> full_word;
  // Prefix up to the last omitted type-A index; identifies the coset.
  std::vector<int> coset_word;
};

// Sort each block of the full word between consecutive omitted indices.
CosetRep w_tilde_min_rep(const WeylElementC& w, const ParabolicMarker& P);

// The descending-block word [r,k+1][1',k'][(r+1)',n'][n,r+1][k,1][(k+1)',r'].
PermutationA w_max_rep(int n, int k, int r);

bool avoids_patterns(const PermutationA& p, const std::vector<PermutationA>& patterns);

// Grassmannian Bruhat order on i-subsets; throws on length mismatch.
bool bruhat_leq_grassmannian(std::vector<int> u, std::vector<int> v);

// u <= v in W/W_P for a type-A marker: Grassmannian comparison at every omitted index.
bool bruhat_leq(const PermutationA& u, const PermutationA& v, const ParabolicMarker& P);

int tangent_dim_at_id(const PermutationA& w, const ParabolicMarker& P);
int tangent_dim_at_id(const WeylElementC& w, const ParabolicMarker& P);

}  // namespace schubres
