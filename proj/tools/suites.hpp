#pragma once

// Property suites shared by `schubres verify` and the acceptance binary.

#include "schubres/geometry.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace schubres::cli {

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

using PluckerClosedForm = Integer (*)(int n, int k, int r, int i, int j, const ZMatrix& x);

struct SuiteOptions {
  std::uint64_t seed = 42;
  int points = 200;
  // Swappable so tests can check that a corrupted closed form is caught.
  PluckerClosedForm plucker_closed_form = &schubres::plucker_closed_form;
};

// Independent generator per case, derived from the run seed and the case parameters.
std::mt19937_64 case_rng(std::uint64_t seed, std::initializer_list<int> tags);

// Random point of the three-step opposite cell with coordinates in [-bound, bound].
ZMatrix random_cell_point(int n, int k, int r, std::mt19937_64& rng, int bound = 4);
// Product of lower unipotent, Levi and upper unipotent symplectic factors; A is invertible.
BlockMatrix2n random_symplectic(int n, std::mt19937_64& rng, int bound = 3);
// Random valid type-C opposite-cell point.
OppositeCellPoint random_cell_point_c(int n, int k, int r, std::mt19937_64& rng, int bound = 4);

SuiteResult plucker_suite(const SuiteOptions& o);
SuiteResult factorization_suite(const SuiteOptions& o);
SuiteResult geometry_suite(const SuiteOptions& o);
SuiteResult plethysm_suite(const SuiteOptions& o);
SuiteResult bott_suite(const SuiteOptions& o);
SuiteResult betti_suite(const SuiteOptions& o);
SuiteResult weyl_suite(const SuiteOptions& o);

std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& o);

}  // namespace schubres::cli
