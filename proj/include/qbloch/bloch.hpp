#pragma once

#include <array>
#include <optional>

#include "qbloch/linalg.hpp"

namespace qbloch {

// Level pairs in the fixed slot order used throughout: 12, 13, 23.
inline constexpr std::array<std::array<int, 2>, 3> kQutritPairs = {{{1, 2}, {1, 3}, {2, 3}}};

// Slot of the (i, j) pair (order-insensitive). (1,2)->0, (1,3)->1, (2,3)->2.
int pair_slot(int i, int j);

// The nine expansion coefficients of a 3x3 Hermitian matrix in the
// {O_k, A_ij, B_ij} basis. alpha/beta are indexed by pair slot.
struct QutritCoefficients {
  std::array<double, 3> omega{};
  std::array<double, 3> alpha{};
  std::array<double, 3> beta{};

  bool operator==(const QutritCoefficients&) const = default;
};

// The three qubit-subspace Bloch vectors u_ij = (alpha_ij, beta_ij, gamma_ij)
// with gamma_ij = omega_i - omega_j, and the sphere radii R_ij = 1 - omega_k.
struct BlochTriple {
  std::array<std::array<double, 3>, 3> u{};
  std::array<double, 3> radii{};

  double norm(int slot) const;
};

// Relative lengths, phases, and the cyclic phase sum.
//   d_ij  = sqrt(alpha^2 + beta^2) / (2 sqrt(omega_i omega_j)), only defined
//           when omega_i * omega_j > 0
//   phi_ij = atan2(beta, alpha), 0 when alpha = beta = 0, in (-pi, pi]
//   Phi    = phi_12 - phi_13 + phi_23 reduced to (-pi, pi]
struct DerivedGeometry {
  std::array<std::optional<double>, 3> d{};
  std::array<double, 3> phi{};
  double Phi = 0.0;
};

// Reduce an angle to (-pi, pi].
double reduce_angle(double a);

// Entrywise read-off: omega_k = rho[k][k], alpha_ij = 2 Re rho[i][j],
// beta_ij = -2 Im rho[i][j] for i < j. Requires a 3x3 Hermitian matrix of
// trace 1 within the given tolerances.
QutritCoefficients decompose(const ComplexMatrix& rho, double herm_tol = tol::kHermiticity,
                             double trace_tol = tol::kTrace);

// Inverse of decompose. Accepts any coefficient record; validity is a
// separate concern.
ComplexMatrix reconstruct(const QutritCoefficients& c);

BlochTriple bloch_triple(const QutritCoefficients& c, double trace_tol = tol::kTrace);

DerivedGeometry derived_geometry(const QutritCoefficients& c);

// Tr(rho^2) written in coefficients: sum omega^2 + 1/2 sum (alpha^2 + beta^2).
double purity(const QutritCoefficients& c);

// omega1*omega2*omega3 * (1 - sum d_ij^2 + 2 d12 d13 d23 cos Phi).
// Empty when any omega_k <= 0 (the factorization's domain); callers fall
// back to the direct determinant there.
std::optional<double> det_formula(const QutritCoefficients& c);

// Constraint (iv): radius recomputed from the gamma components alone,
// R_ij = (2 + (-1)^(i+1) gamma_ik + (-1)^j gamma_jk) / 3.
double radius_from_gammas(const QutritCoefficients& c, int slot);

}  // namespace qbloch
