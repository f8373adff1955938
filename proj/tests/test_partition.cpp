#include "oracles.hpp"

#include "schubres/partition.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace schubres;

namespace {

// Hooks read straight off the diagram: arm = cells right of (j,j), leg = cells below it.
FrobeniusHooks hooks_by_diagram(const Partition& p) {
  FrobeniusHooks h;
  for (int j = 0; j < p.length() && p[j] > j; ++j) {
    h.arms.push_back(p[j] - j - 1);
    int leg = 0;
    while (j + leg + 1 < p.length() && p[j + leg + 1] > j) ++leg;
    h.legs.push_back(leg);
  }
  return h;
}

}  // namespace

TEST_CASE("Partition validation") {
  CHECK(Partition({3, 1, 0, 0}).parts() == std::vector<int>{3, 1});
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({2, -1}));
  CHECK(Partition({2, 1}).padded(4) == std::vector<int>{2, 1, 0, 0});
  CHECK(Partition({3, 2, 2}).size() == 7);
}

TEST_CASE("conjugate examples") {
  CHECK(conjugate(Partition({2, 2})) == Partition({2, 2}));
  CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
  CHECK(conjugate(Partition({3, 2, 1})) == Partition({3, 2, 1}));
}

TEST_CASE("conjugate is an involution") {
  for (int m = 0; m <= 12; ++m)
    for (const auto& p : partitions_of(m)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("durfee_rank examples") {
  CHECK(durfee_rank(Partition()) == 0);
  CHECK(durfee_rank(Partition({2, 2})) == 2);
  CHECK(durfee_rank(Partition({3, 2, 2})) == 2);
}

TEST_CASE("Frobenius hooks round trip") {
  for (int m = 0; m <= 14; ++m)
    for (const auto& p : partitions_of(m)) {
      FrobeniusHooks h = to_hooks(p);
      CHECK(h == hooks_by_diagram(p));
      CHECK(static_cast<int>(h.arms.size()) == durfee_rank(p));
      CHECK(from_hooks(h) == p);
      FrobeniusHooks c = to_hooks(conjugate(p));
      CHECK(c.arms == h.legs);
      CHECK(c.legs == h.arms);
    }
  CHECK_THROWS(from_hooks({{1, 1}, {1, 0}}));
  CHECK_THROWS(from_hooks({{1}, {1, 0}}));
}

TEST_CASE("partitions_of counts") {
  std::vector<size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int m = 0; m <= 10; ++m) CHECK(partitions_of(m).size() == p[m]);
}

TEST_CASE("enumerate_Q matches a filter over all partitions") {
  for (int km1 = 0; km1 <= 4; ++km1)
    for (int w = 0; w <= 20; w += 2) {
      std::vector<Partition> expected;
      for (const auto& p : partitions_of(w)) {
        auto h = hooks_by_diagram(p);
        bool ok = true;
        for (size_t j = 0; j < h.arms.size(); ++j) ok = ok && h.arms[j] == h.legs[j] + km1;
        if (ok) expected.push_back(p);
      }
      auto got = enumerate_Q(km1, w);
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      CHECK(got == expected);
    }
  CHECK_THROWS(enumerate_Q(1, 3));
}

TEST_CASE("schur_dim examples") {
  CHECK(schur_dim(Partition({2}), 2) == 3);
  CHECK(schur_dim(Partition({1, 1}), 3) == 3);
  CHECK(schur_dim(Partition({2, 2}), 3) == 6);
  CHECK(schur_dim(Partition({1, 1, 1}), 2) == 0);
  CHECK(schur_dim(Partition(), 4) == 1);
}

TEST_CASE("schur_dim matches semistandard tableau counts, |lambda| <= 10, e <= 6") {
  for (int m = 0; m <= 10; ++m)
    for (const auto& p : partitions_of(m))
      for (int e = 1; e <= 6; ++e) CHECK(schur_dim(p, e) == Integer(oracle::count_ssyt(p.parts(), e)));
}

TEST_CASE("weyl_dim agrees with schur_dim and is twist invariant") {
  for (int m = 0; m <= 8; ++m)
    for (const auto& p : partitions_of(m))
      for (int e = std::max(1, p.length()); e <= 5; ++e) {
        auto beta = p.padded(e);
        CHECK(weyl_dim(beta) == schur_dim(p, e));
        for (auto& b : beta) b -= 3;
        CHECK(weyl_dim(beta) == schur_dim(p, e));
      }
}

TEST_CASE("exterior_of_sym2 examples") {
  auto t0 = exterior_of_sym2(0, 3);
  REQUIRE(t0.size() == 1);
  CHECK(t0[0].label == Partition());
  for (int e = 1; e <= 4; ++e) {
    auto t1 = exterior_of_sym2(1, e);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].label == Partition({2}));
    auto c1 = exterior_of_sym2(1, e, LabelSide::conjugate);
    CHECK(c1[0].label == Partition({1, 1}));
  }
}

TEST_CASE("exterior_of_sym2 dimensions sum to binomial(e(e+1)/2, t)") {
  for (int e = 1; e <= 5; ++e)
    for (int t = 0; t <= 6; ++t) {
      Integer total = 0;
      for (const auto& lp : exterior_of_sym2(t, e)) total += lp.multiplicity * schur_dim(lp.label, e);
      CHECK(total == binomial(e * (e + 1) / 2, t));
      Integer via_conj = 0;
      for (const auto& lp : exterior_of_sym2(t, e, LabelSide::conjugate))
        via_conj += lp.multiplicity * schur_dim(conjugate(lp.label), e);
      CHECK(via_conj == total);
    }
}

TEST_CASE("cauchy_exterior examples and dimensions") {
  auto c0 = cauchy_exterior(0, 2, 3);
  REQUIRE(c0.size() == 1);
  CHECK(c0[0].lambda == Partition());
  auto c1 = cauchy_exterior(1, 2, 3);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].lambda == Partition({1}));
  CHECK(c1[0].lambda_conjugate == Partition({1}));
  for (int e = 1; e <= 4; ++e)
    for (int f = 1; f <= 4; ++f)
      for (int t = 0; t <= e * f; ++t) {
        Integer total = 0;
        for (const auto& c : cauchy_exterior(t, e, f)) {
          CHECK(c.lambda_conjugate == conjugate(c.lambda));
          total += c.multiplicity * schur_dim(c.lambda, e) * schur_dim(c.lambda_conjugate, f);
        }
        CHECK(total == binomial(e * f, t));
      }
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(60, 30) == Integer("118264581564861424"));
}
