#include "suites.hpp"

#include "schubres/bott.hpp"
#include "schubres/partition.hpp"
#include "schubres/resolution.hpp"
#include "schubres/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace schubres::cli {

namespace {

template <class F>
void for_each_nkr(int n_max, F f) {
  for (int n = 2; n <= n_max; ++n)
    for (int r = 2; r <= n; ++r)
      for (int k = 1; k < r; ++k) f(n, k, r);
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// records the first failure only; later ones just count
struct Failures {
  int count = 0;
  std::string first;
  void add(const std::string& what) {
    if (count++ == 0) first = what;
  }
  SuiteResult finish(const std::string& name, const std::string& summary) const {
    if (count == 0) return {name, true, summary};
    return {name, false, std::to_string(count) + " failure(s); first: " + first};
  }
};

std::string tag(int n, int k, int r) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(r) + ")";
}

QMatrix random_persymmetric(int n, std::mt19937_64& rng, int bound) {
  QMatrix s(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b <= a; ++b) {
      s(a, b) = uniform(rng, -bound, bound);
      s(b, a) = s(a, b);
    }
  return antidiagonal_j(n) * s;  // J S is persymmetric when S is symmetric
}

// Cohomology by sorting alpha + rho; used as a second route next to the exchange algorithm.
CohomologyAnswer rho_sort(const QDominantWeight& w) {
  int n = w.n(), m = w.m();
  const auto& lam = w.entries();
  std::vector<int> a(lam.begin() + m, lam.end());
  a.insert(a.end(), lam.begin(), lam.begin() + m);
  for (int i = 0; i < n; ++i) a[i] += n - 1 - i;
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (a[i] == a[j]) return CohomologyAnswer::vanishing();
      if (a[i] < a[j]) ++inv;
    }
  std::sort(a.begin(), a.end(), std::greater<>());
  for (int i = 0; i < n; ++i) a[i] -= n - 1 - i;
  return {false, inv, a};
}

}  // namespace

std::mt19937_64 case_rng(std::uint64_t seed, std::initializer_list<int> tags) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  for (int t : tags) words.push_back(static_cast<std::uint32_t>(t));
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

ZMatrix random_cell_point(int n, int k, int r, std::mt19937_64& rng, int bound) {
  ZMatrix x = ZMatrix::identity(2 * n);
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = 1; j < i; ++j)
      if (is_free_coordinate_HQ(n, k, r, i, j)) x(i - 1, j - 1) = uniform(rng, -bound, bound);
  return x;
}

BlockMatrix2n random_symplectic(int n, std::mt19937_64& rng, int bound) {
  QMatrix J = antidiagonal_j(n);
  for (;;) {
    QMatrix A(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A(i, j) = uniform(rng, -bound, bound);
    auto Ainv = inverse(A);
    if (!Ainv) continue;
    QMatrix I = QMatrix::identity(n), O(n, n);
    BlockMatrix2n lower{I, O, random_persymmetric(n, rng, bound), I};
    BlockMatrix2n levi{A, O, O, J * Ainv->transpose() * J};
    BlockMatrix2n upper{I, random_persymmetric(n, rng, bound), O, I};
    BlockMatrix2n lower2{I, O, random_persymmetric(n, rng, bound), I};
    QMatrix z = lower.full() * levi.full() * upper.full() * lower2.full();
    BlockMatrix2n b = BlockMatrix2n::from_full(z);
    if (inverse(b.A)) return b;
  }
}

OppositeCellPoint random_cell_point_c(int n, int k, int r, std::mt19937_64& rng, int bound) {
  int b1 = r - k, m = n - b1;
  OppositeCellPoint p{n, k, r, QMatrix(m, b1), random_persymmetric(m, rng, bound)};
  for (int a = 0; a < r - b1; ++a)
    for (int b = 0; b < b1; ++b) p.a_prime(a, b) = uniform(rng, -bound, bound);
  return p;
}

SuiteResult plucker_suite(const SuiteOptions& o) {
  Failures f;
  long checked = 0;
  int configs = 0;
  for_each_nkr(5, [&](int n, int k, int r) {
    ++configs;
    auto rng = case_rng(o.seed, {1, n, k, r});
    for (int p = 0; p < o.points; ++p) {
      ZMatrix x = random_cell_point(n, k, r, rng);
      for (int i = 1; i <= 2 * n; ++i)
        for (int j = 1; j <= 2 * n; ++j) {
          if (!plucker_range(n, k, r, i, j)) continue;
          ++checked;
          Integer minor = plucker_minor(n, k, r, i, j, x);
          Integer closed = o.plucker_closed_form(n, k, r, i, j, x);
          if (minor != closed)
            f.add(tag(n, k, r) + " (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ") minor " +
                  minor.str() + " vs closed form " + closed.str());
        }
    }
  });
  return f.finish("plucker", std::to_string(checked) + " identities over " + std::to_string(configs) +
                                 " (n,k,r), " + std::to_string(o.points) + " points each");
}

SuiteResult factorization_suite(const SuiteOptions& o) {
  Failures f;
  for (int t = 0; t < o.points; ++t) {
    int n = 1 + t % 4;
    auto rng = case_rng(o.seed, {2, t});
    BlockMatrix2n z = random_symplectic(n, rng);
    try {
      if (!is_symplectic(z)) {
        f.add("generator produced a non-symplectic matrix");
        continue;
      }
      auto fac = opposite_cell_factor(z);
      QMatrix F = symplectic_form(n).F;
      QMatrix J = antidiagonal_j(n);
      QMatrix Y = fac.z1.D;
      if (!(fac.z1.full() * fac.z2.full() == z.full())) f.add("recomposition failed");
      if (!(J * Y == Y.transpose() * J)) f.add("J D A^-1 != (D A^-1)^T J");
      if (!(z.A.transpose() * J * fac.z2.E == J)) f.add("A^T J (E - D A^-1 C) != J");
      if (!(fac.z2.full().transpose() * F * fac.z2.full() == F)) f.add("z2 does not preserve F");
      if (!fac.z2.D.is_zero()) f.add("z2 is not block upper triangular");
    } catch (const std::exception& e) {
      f.add(std::string("unexpected exception: ") + e.what());
    }
  }
  // the form itself has A = 0
  try {
    opposite_cell_factor(BlockMatrix2n::from_full(symplectic_form(2).F));
    f.add("singular A was not rejected");
  } catch (const NotInOppositeCell&) {
  }
  return f.finish("factorization", std::to_string(o.points) + " random symplectic matrices, n = 1..4");
}

SuiteResult geometry_suite(const SuiteOptions& o) {
  Failures f;
  int literal_mismatch = 0;
  int configs = 0;
  for_each_nkr(5, [&](int n, int k, int r) {
    ++configs;
    DesingData d = desing_data(n, k, r);
    int sym = n * (n + 1) / 2;
    if (d.dim_y + d.codim != sym) f.add(tag(n, k, r) + " dim Y + codim != dim Sym_n");
    if (r == n && d.codim != symmetric_codim(n, k)) f.add(tag(n, k, r) + " codim differs from C(n-k+1,2)");
    if (d.dim_y != length_C(family_element(n, k, r))) f.add(tag(n, k, r) + " dim Y differs from the length of w");
    if (literal_v_w_dimension(n, k, r) != d.fibre_dim) ++literal_mismatch;

    CellPattern pattern = opposite_cell_pattern(n, k, r, Group::G);
    auto rng = case_rng(o.seed, {3, n, k, r});
    for (int p = 0; p < 100; ++p) {
      OppositeCellPoint pt = random_cell_point_c(n, k, r, rng);
      QMatrix z = pt.assemble();
      if (!pattern.contains(z)) f.add(tag(n, k, r) + " assembled point outside the type-C pattern");
      if (!is_symplectic(BlockMatrix2n::from_full(z))) f.add(tag(n, k, r) + " pattern member is not symplectic");
      try {
        ProductPoint q = product_identification(pt);
        OppositeCellPoint back = product_inverse(n, k, r, q);
        if (!(back.a_prime == pt.a_prime && back.d2 == pt.d2)) f.add(tag(n, k, r) + " product round trip failed");
      } catch (const std::exception& e) {
        f.add(tag(n, k, r) + " " + e.what());
      }
    }
  });
  return f.finish("geometry", std::to_string(configs) + " (n,k,r); literal V_w reading disagrees with dim Y in " +
                                  std::to_string(literal_mismatch) + " of them");
}

SuiteResult plethysm_suite(const SuiteOptions&) {
  Failures f;
  for (int e = 1; e <= 5; ++e)
    for (int t = 0; t <= 6; ++t) {
      Integer s = 0;
      for (const auto& x : exterior_of_sym2(t, e)) s += x.multiplicity * schur_dim(x.label, e);
      if (s != binomial(e * (e + 1) / 2, t))
        f.add("Lambda^" + std::to_string(t) + " Sym^2 C^" + std::to_string(e) + " has summed dimension " + s.str());
    }
  for (int e = 1; e <= 4; ++e)
    for (int g = 1; g <= 4; ++g)
      for (int t = 0; t <= 6; ++t) {
        Integer s = 0;
        for (const auto& x : cauchy_exterior(t, e, g)) s += schur_dim(x.lambda, e) * schur_dim(x.lambda_conjugate, g);
        if (s != binomial(e * g, t)) f.add("Cauchy dimension count failed");
      }
  for (int m = 0; m <= 10; ++m)
    for (const auto& lam : partitions_of(m))
      for (int e = 1; e <= 6; ++e) {
        Integer weyl = lam.length() > e ? Integer(0) : weyl_dim(lam.padded(e));
        if (schur_dim(lam, e) != weyl) f.add("hook-content and Weyl dimension formulas disagree");
      }
  return f.finish("plethysm", "e <= 5, t <= 6; Cauchy e,f <= 4; |lambda| <= 10, e <= 6");
}

SuiteResult bott_suite(const SuiteOptions& o) {
  Failures f;
  for (int d = -6; d <= 6; ++d) {
    // the bundle S_(d) Q* on the projective line
    auto coh = bundle_cohomology({{{d}, {0}, 1}}, 2, 1);
    std::map<int, Integer> dims;
    for (const auto& [j, labels] : coh)
      for (const auto& [beta, mult] : labels) dims[j] += mult * weyl_dim(beta);
    std::map<int, Integer> expect;
    if (d >= 0) expect[0] = d + 1;
    if (d <= -2) expect[1] = -d - 1;
    if (dims != expect) f.add("line bundle of degree " + std::to_string(d) + " on P^1");

    // the raw weight (d, 0) is the dual line bundle
    CohomologyAnswer a = bott(QDominantWeight(2, 1, {d, 0}));
    Integer euler = a.zero ? Integer(0) : (a.degree % 2 == 0 ? 1 : -1) * weyl_dim(a.beta);
    if (euler != 1 - d) f.add("Euler characteristic of weight (" + std::to_string(d) + ",0)");
  }
  for (int n = 2; n <= 5; ++n) {
    auto rng = case_rng(o.seed, {5, n});
    for (int t = 0; t < 200; ++t) {
      int m = uniform(rng, 1, n - 1);
      std::vector<int> w(n);
      for (auto& x : w) x = uniform(rng, -4, 4);
      std::sort(w.begin(), w.begin() + m, std::greater<>());
      std::sort(w.begin() + m, w.end(), std::greater<>());
      CohomologyAnswer a = bott(QDominantWeight(n, m, w));
      if (!(a == rho_sort(QDominantWeight(n, m, w)))) f.add("exchange algorithm disagrees with rho-sorting");
      std::vector<int> shifted(w);
      for (auto& x : shifted) x += 3;
      CohomologyAnswer b = bott(QDominantWeight(n, m, shifted));
      if (a.zero != b.zero) {
        f.add("shift changed vanishing");
      } else if (!a.zero) {
        for (auto& x : a.beta) x += 3;
        if (!(a == b)) f.add("shift did not twist the label");
      }
    }
  }
  return f.finish("bott", "P^1 line bundles |d| <= 6; 800 random weights against rho-sorting");
}

SuiteResult betti_suite(const SuiteOptions&) {
  Failures f;
  int pairs = 0;
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k) {
      ++pairs;
      std::string at = "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
      BettiTable b = jpw_closed_form(n, k);
      int codim = symmetric_codim(n, k);
      if (desing_data(n, k, n).codim != codim) f.add(at + " codim from the desingularization differs");
      if (b.length() != codim) f.add(at + " resolution length != codim");
      if (!b.starts_with_ring()) f.add(at + " F_0 is not R");
      if (b.rank_at(1) != static_cast<long>(minor_generators(n, k).size())) f.add(at + " F_1 rank != minor count");
      for (const auto& [key, e] : b.entries())
        if (key.first == 1 && key.second != k + 1) f.add(at + " F_1 generator outside degree k+1");
      ConsistencyReport c = consistency_check(b, codim);
      if (!c.divisible || c.degree <= 0) f.add(at + " K-polynomial check failed");
      if (k % 2 == 0) {
        try {
          auto xi = std::get<XiDescription>(build_xi_description(n, k, n));
          BettiTable big = assemble(xi_oracle(xi), xi.max_t());
          if (!big.contains(b)) f.add(at + " enlarged-space table misses a closed-form entry");
        } catch (const RationalSingularityViolation& e) {
          f.add(at + " " + e.what());
        }
      }
    }
  return f.finish("betti", std::to_string(pairs) + " (n,k) with n <= 5");
}

SuiteResult weyl_suite(const SuiteOptions&) {
  Failures f;
  int configs = 0;
  std::vector<PermutationA> patterns{PermutationA({4, 2, 3, 1}), PermutationA({3, 1, 4, 2})};
  for_each_nkr(6, [&](int n, int k, int r) {
    ++configs;
    PermutationA wmax = w_max_rep(n, k, r);
    if (!avoids_patterns(wmax, patterns)) f.add(tag(n, k, r) + " w_max contains 4231 or 3142");
    WeylElementC c = WeylElementC::from_full_word(wmax.word());
    if (length_C(c) != tangent_dim_at_id(c, ParabolicMarker::borel(RootSystem::C, n)))
      f.add(tag(n, k, r) + " tangent dimension at id differs from the length of w_max");
    ParabolicMarker P(RootSystem::C, n, {r - k, n});
    CosetRep rep = w_tilde_min_rep(family_element(n, k, r), P);
    CosetRep from_max = w_tilde_min_rep(c, P);
    if (rep.full_word != from_max.full_word) f.add(tag(n, k, r) + " sorted blocks of w_max differ from w~");
  });
  CosetRep ex = w_tilde_min_rep(family_element(5, 2, 4), ParabolicMarker(RootSystem::C, 5, {2, 5}));
  if (ex.coset_word != std::vector<int>{3, 4, 6, 9, 10, 1, 2, 5}) f.add("w~ for (5,2,4)");
  return f.finish("weyl", std::to_string(configs) + " (n,k,r) with n <= 6");
}

std::vector<std::string> suite_names() {
  return {"plucker", "factorization", "geometry", "plethysm", "bott", "betti", "weyl"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "plucker") return plucker_suite(o);
  if (name == "factorization") return factorization_suite(o);
  if (name == "geometry") return geometry_suite(o);
  if (name == "plethysm") return plethysm_suite(o);
  if (name == "bott") return bott_suite(o);
  if (name == "betti") return betti_suite(o);
  if (name == "weyl") return weyl_suite(o);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace schubres::cli
