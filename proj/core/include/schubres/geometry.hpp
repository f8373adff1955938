#pragma once

// Matrix models for the symplectic group, opposite cells, Pluecker restrictions and desingularization data.
// Matrix entries are addressed 1-based in the public functions unless stated otherwise.

#include "schubres/arith.hpp"
#include "schubres/matrix.hpp"
#include "schubres/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace schubres {

struct SymplecticForm {
  int n;
  QMatrix F;  // [[0, J], [-J, 0]]
};
SymplecticForm symplectic_form(int n);

// Z = [[A, C], [D, E]] with n x n blocks.
struct BlockMatrix2n {
  QMatrix A, C, D, E;

  int n() const { return A.rows(); }
  static BlockMatrix2n identity(int n);
  static BlockMatrix2n from_full(const QMatrix& z);
  QMatrix full() const;
  friend bool operator==(const BlockMatrix2n&, const BlockMatrix2n&) = default;
};

// A^T J D = D^T J A, C^T J E = E^T J C, J = A^T J E - D^T J C = E^T J A - C^T J D.
bool is_symplectic(const BlockMatrix2n& z);

class NotInOppositeCell : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct OppositeCellFactorization {
  BlockMatrix2n z1;  // [[I, 0], [D A^-1, I]]
  BlockMatrix2n z2;  // [[A, C], [0, E - D A^-1 C]]
};

// Throws std::invalid_argument for non-symplectic input and NotInOppositeCell when A is singular.
// Throws std::logic_error if a factor fails its defining identities.
OppositeCellFactorization opposite_cell_factor(const BlockMatrix2n& z);

// J Y for persymmetric Y; throws std::invalid_argument otherwise.
QMatrix sym_coordinates(const QMatrix& y);

// ---- the three-step flag variety H/Q~ with cuts r-k, n, 2n-(r-k) ----

// Is (i, j) a coordinate of the lower-unipotent opposite cell for the cuts above?
bool is_free_coordinate_HQ(int n, int k, int r, int i, int j);
bool in_opposite_cell_HQ(int n, int k, int r, const ZMatrix& x);

enum class PluckerRange {
  lower_left,    // i > r, j <= r-k
  right_block,   // i > 2n-(r-k), n < j <= 2n-(r-k)
  middle_block,  // i > 2n-(r-k), r-k < j <= n
};

std::optional<PluckerRange> plucker_range(int n, int k, int r, int i, int j);

// Minor on rows {1..l} minus j plus i (i last), columns {1..l}; l = r-k for lower_left, 2n-(r-k) otherwise.
Integer plucker_minor(int n, int k, int r, int i, int j, const ZMatrix& x);
Integer plucker_closed_form(int n, int k, int r, int i, int j, const ZMatrix& x);

struct PluckerCheck {
  PluckerRange range;
  Integer minor;
  Integer closed_form;
  bool agrees() const { return minor == closed_form; }
};

// Throws std::invalid_argument when (i, j) lies outside the three ranges.
PluckerCheck plucker_restriction(int n, int k, int r, int i, int j, const ZMatrix& x);

// ---- matrix forms of the opposite cells of the Schubert varieties ----

enum class Group { H, G };

class CellPattern {
 public:
  CellPattern(int n, int k, int r, Group group, Matrix<Polynomial> entries, std::vector<int> free_vars);

  int n() const { return n_; }
  Group group() const { return group_; }
  // 1-based entry.
  const Polynomial& entry(int i, int j) const { return entries_(i - 1, j - 1); }
  const Matrix<Polynomial>& entries() const { return entries_; }
  const std::vector<int>& free_variables() const { return free_vars_; }
  // Reads the free coordinates off m and checks every entry against the pattern.
  bool contains(const QMatrix& m) const;

 private:
  int n_, k_, r_;
  Group group_;
  Matrix<Polynomial> entries_;
  std::vector<int> free_vars_;
};

CellPattern opposite_cell_pattern(int n, int k, int r, Group group);

// A point of the type-C opposite cell: A' is (n-(r-k)) x (r-k), D2 is (n-(r-k)) x (n-(r-k)).
struct OppositeCellPoint {
  int n, k, r;
  QMatrix a_prime;
  QMatrix d2;

  // E' = -J A'^T J
  QMatrix e_prime() const;
  // The 2n x 2n lower-unipotent matrix with blocks A', D2, E', E' D2.
  QMatrix assemble() const;
  // Bottom n-r rows of A' vanish and J D2 is symmetric.
  bool valid() const;
};

struct ProductPoint {
  QMatrix v_w;      // symmetric n x n
  QMatrix v_prime;  // n x n unipotent [[I, 0], [N, I]]
};

// gamma o delta; throws std::invalid_argument for an invalid point and std::logic_error if a
// component leaves its slice.
ProductPoint product_identification(const OppositeCellPoint& p);
// The inverse construction: A' = N, D2 = J times the lower-right block of v_w.
OppositeCellPoint product_inverse(int n, int k, int r, const ProductPoint& q);

enum class SliceKind { Vw, VPrimeW, Tw };

struct LinearSlice {
  SliceKind kind;
  int n = 0, k = 0, r = 0, u = 0;

  // Vw and Tw: coordinate x_ij of Sym_n (either index order). VPrimeW: entry (i, j) with i > r-k >= j.
  bool free_coordinate(int i, int j) const;
  int dimension() const;
  bool contains(const QMatrix& m) const;
};

// x_ij = 0 when i <= r-k or j <= r-k: the image of gamma o delta.
LinearSlice v_w_slice(int n, int k, int r);
LinearSlice v_prime_w_slice(int n, int k, int r);
// zero upper-left (n-u) x (n-u) block; needs 2u <= n
LinearSlice t_slice(int n, int u);

// Dimension of V_w under the literal reading "x_ij = 0 if j <= r-k or i < n-(r-k)", either index order.
int literal_v_w_dimension(int n, int k, int r);

struct DesingData {
  int n, k, r;
  int base_r, base_cut, base_dim;  // GL_r / P''_{r-k}
  int fibre_dim;                   // dim V_w
  int dim_z, dim_y, codim;
  int bundle_rank;                 // rank of xi
};

DesingData desing_data(int n, int k, int r);

}  // namespace schubres
