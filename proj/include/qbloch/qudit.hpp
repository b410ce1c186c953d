#pragma once

#include <vector>

#include "qbloch/bloch.hpp"
#include "qbloch/operator_basis.hpp"

namespace qbloch {

// Level pairs (i, j), i < j, 1-based, in lexicographic order; the coefficient
// layout for every dimension.
std::vector<std::pair<int, int>> qudit_pairs(int d);
int qudit_pair_slot(int i, int j, int d);

// Expansion of a d x d Hermitian matrix in the {O_k, A_ij, B_ij} basis:
// d diagonal weights plus C(d,2) (alpha, beta) pairs. d is capped at kMaxDim.
struct QuditCoefficients {
  int d = 0;
  std::vector<double> omega;
  std::vector<double> alpha;
  std::vector<double> beta;

  bool operator==(const QuditCoefficients&) const = default;
};

QuditCoefficients decompose_qudit(const ComplexMatrix& rho, double herm_tol = tol::kHermiticity,
                                  double trace_tol = tol::kTrace);
ComplexMatrix reconstruct_qudit(const QuditCoefficients& c);

// Conversions for the d = 3 case, where the two coefficient layouts coincide.
QuditCoefficients to_qudit(const QutritCoefficients& c);
QutritCoefficients to_qutrit(const QuditCoefficients& c);

// One principal minor per non-empty subset of {1..d}, ordered by subset size
// then lexicographically, preceded by the normalization entry (empty subset,
// value = trace, pass iff within tol of 1). 2^d entries in total.
struct MinorEntry {
  std::vector<int> subset;  // 1-based levels; empty for the normalization row
  double value;
  bool pass;
};

struct MinorReport {
  int d = 0;
  std::vector<MinorEntry> entries;
  bool overall = false;
};

// Necessary conditions for positive semidefiniteness: every principal minor
// of the reconstructed matrix must be nonnegative. For d = 3 (together with
// the trace row) this is also sufficient.
MinorReport necessary_conditions(const QuditCoefficients& c, double tol = tol::kValidity);

// One Bloch vector (alpha_ij, beta_ij, omega_i - omega_j) per qubit subspace.
// radius_bound is omega_i + omega_j, the norm cap implied by the 2x2
// principal submatrix; for d = 3 the sphere radius 1 - omega_k coincides
// with it only in the gamma direction, so the bound is reported instead.
struct SubspaceVector {
  int i = 0;
  int j = 0;
  std::array<double, 3> v{};
  double radius_bound = 0.0;
};

std::vector<SubspaceVector> subspace_bloch_vectors(const QuditCoefficients& c,
                                                   double tol = tol::kValidity);

}  // namespace qbloch
