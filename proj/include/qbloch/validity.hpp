#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qbloch/bloch.hpp"
#include "qbloch/rng.hpp"

namespace qbloch {

// One constraint evaluation in canonical ">= 0" form: residual >= -tol means
// the constraint is satisfied. Equality constraints carry -|lhs - rhs|.
struct ConstraintEntry {
  std::string id;
  double residual;
  bool pass;
};

struct ValidityReport {
  std::vector<ConstraintEntry> entries;
  bool overall = false;
};

// Evaluates the six compact constraints
//   (i)   R12+R13+R23 = 2 and 0 <= R_ij <= 1
//   (ii)  |u_ij| <= R_ij
//   (iii) gamma_ij = R_ik - R_jk
//   (iv)  R_ij = (2 + (-1)^(i+1) gamma_ik + (-1)^j gamma_jk)/3
//   (v)   gamma_12 - gamma_13 + gamma_23 = 0
//   (vi)  1 - sum d_ij^2 + 2 d12 d13 d23 cos(Phi) >= 0
// plus all seven principal minors of the reconstructed matrix. When some
// omega vanishes, (vi) falls back to the direct determinant. Never throws.
ValidityReport check_constraints(const QutritCoefficients& c, double tol = tol::kValidity);

// True iff every entry of check_constraints passes. For trace-1 records this
// is equivalent to positive semidefiniteness of the reconstructed matrix.
bool is_valid_state(const QutritCoefficients& c, double tol = tol::kValidity);

// True iff the state stays valid for every phase configuration, i.e.
// 1 - sum d_ij^2 - 2 d12 d13 d23 >= 0 (the cos(Phi) = -1 worst case).
// Throws when some d_ij is undefined.
bool all_phi_valid(const QutritCoefficients& c, double tol = tol::kValidity);

// For a state with some relative length d_ij = 1 (within tol): the remaining
// two relative lengths must be equal, and when they are nonzero the total
// phase must vanish mod 2*pi. Returns whether that boundary condition holds.
// Throws when no d_ij equals 1 within tol.
bool boundary_phase_constraint(const QutritCoefficients& c, double tol = 1e-9);

// Draws a valid state:
//   1. R_12 uniform on [0,1), u_12 uniform in the ball of radius R_12; this
//      fixes omega and all radii.
//   2. lengths of v_13, v_23 uniform in [0, 2 sqrt(omega_i omega_j)].
//   3. phases phi_13, phi_23 uniform, rejected until the state passes both
//      the constraint check and the eigenvalue oracle at kSampler.
// The phase loop is capped at 10^4 draws; it then tries the always-feasible
// Phi = 0 orientation and, failing that, redraws step 2. Deterministic for a
// fixed (seed, index).
QutritCoefficients sample_valid(std::uint64_t seed, std::uint64_t index = 0);
QutritCoefficients sample_valid(Rng& rng);

// Both trace-orthogonality criteria evaluated side by side:
//   coeff_form = 2 sum omega_i omega'_i + sum v_ij . v'_ij
//   bloch_form = 2 - sum R_ij R'_ij + sum u_ij . u'_ij
//   pure_form  = 2 - sum |u||u'| (1 - cos theta_ij)   (both states pure;
//                a term with a null vector contributes 0)
// All three equal 2 Tr(rho rho') on their domains.
struct OrthogonalityCheck {
  double coeff_form = 0.0;
  double bloch_form = 0.0;
  std::optional<double> pure_form;
  double trace_overlap = 0.0;  // Tr(rho rho') computed from the matrices
  bool orthogonal = false;
};

OrthogonalityCheck evaluate_orthogonality(const QutritCoefficients& p,
                                          const QutritCoefficients& q,
                                          double tol = tol::kOrthogonal);

// Requires purity(p) = 1 within purity_tol.
bool orthogonal_pure_mixed(const QutritCoefficients& p, const QutritCoefficients& q,
                           double tol = tol::kOrthogonal, double purity_tol = tol::kPurity);

// Requires both states pure within purity_tol.
bool orthogonal_pure_pure(const QutritCoefficients& p, const QutritCoefficients& q,
                          double tol = tol::kOrthogonal, double purity_tol = tol::kPurity);

}  // namespace qbloch
