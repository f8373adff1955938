#pragma once

// Brute-force oracles for the test suites. None of these call into the library under test.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace schubres::oracle {

// Number of semistandard tableaux of shape lambda with entries in 1..e, by backtracking.
std::uint64_t count_ssyt(const std::vector<int>& lambda, int e);

// Coxeter length by breadth-first search from the identity over adjacent transpositions of S_N.
std::map<std::vector<int>, int> bfs_lengths_A(int N);

// Same for the type-C Weyl group of rank n inside S_2n: generators s_i (i < n) act as (i,i+1)(i',(i+1)'),
// s_n as (n, n+1). Keys are full one-line words.
std::map<std::vector<int>, int> bfs_lengths_C(int n);

// u <= v in S_N by the rank-matrix criterion.
bool bruhat_leq_rank_matrix(const std::vector<int>& u, const std::vector<int>& v);

// Minimal coset representative for the parabolic of S_N omitting the given simple indices.
std::vector<int> min_coset_rep(std::vector<int> w, const std::vector<int>& omitted);

// Bott answer by sorting alpha + rho, where alpha = (lambda_{m+1..n}, lambda_{1..m}).
// Returns nullopt-like {-1, {}} on a repeated entry.
std::pair<int, std::vector<int>> rho_sort_bott(const std::vector<int>& lambda, int m);

// Graded Betti numbers of S/I over F_p, S = F_p[x_ij, i <= j <= n], I generated by the (k+1)-minors
// of the generic symmetric n x n matrix, computed as Koszul homology of S/I. Degrees d <= max_degree.
std::map<std::pair<int, int>, int> symmetric_minor_betti_mod_p(int n, int k, int max_degree,
                                                                std::uint64_t p = 32003);

}  // namespace schubres::oracle
