#pragma once

#include <utility>
#include <vector>

#include "qbloch/bloch.hpp"
#include "qbloch/operator_basis.hpp"
#include "qbloch/validity.hpp"

namespace qbloch {

struct TrajectoryPoint {
  double theta = 0.0;
  QutritCoefficients coefficients;
  std::array<double, 3> radii{};
  BlochTriple bloch;
};

// decompose(U rho U^dag) with U = exp(i G theta). Accepts any of the nine
// A/B/C generators; the input must be a valid state.
QutritCoefficients evolve(const QutritCoefficients& c, const GeneratorId& g, double theta,
                          double validity_tol = tol::kValidity);

// Evolution sampled at theta = k * theta_max / (steps - 1), k = 0..steps-1.
// Each point is evolved directly from the initial state, so there is no
// accumulation of stepping error.
std::vector<TrajectoryPoint> trajectory(const QutritCoefficients& c, const GeneratorId& g,
                                        double theta_max, int steps,
                                        double validity_tol = tol::kValidity);

// Sinusoid R(theta) = offset + amplitude * trig(2 theta + phase), where trig
// is sin for A generators and cos for B generators.
struct OscillationFit {
  double amplitude = 0.0;
  double phase = 0.0;
  double offset = 0.0;
  double max_residual = 0.0;
};

// Least-squares fit (frequency fixed at 2) of the two oscillating radii
// R_ik, R_jk under an A_ij or B_ij generator, over one full period. Throws
// for C or O generators.
std::pair<OscillationFit, OscillationFit> radius_oscillation_fit(const QutritCoefficients& c,
                                                                 const GeneratorId& g,
                                                                 int samples = 128);

// Slots of the two oscillating radii (pair {i,k} first, then {j,k}).
std::pair<int, int> oscillating_radius_slots(const GeneratorId& g);

// Closed-form radii (R_ik, R_jk) at angle theta from initial-state data:
//   R_ik = (1 + omega_k + gamma_ij(theta)) / 2,  R_jk with the opposite sign,
// where gamma_ij(theta) = gamma cos 2theta - beta sin 2theta under A_ij and
// gamma cos 2theta + alpha sin 2theta under B_ij.
std::pair<double, double> radius_closed_form(const QutritCoefficients& c, const GeneratorId& g,
                                             double theta);

// sqrt(beta^2 + gamma^2) for A_ij, sqrt(alpha^2 + gamma^2) for B_ij: the
// amplitude of the radius oscillation.
double oscillation_amplitude(const QutritCoefficients& c, const GeneratorId& g);

// Under exp(i C_pq theta) the projection (alpha, beta) of each u_ij turns in
// its plane by multiplier * theta, where a positive angle chi acts as
//   (x, y) -> (x cos chi + y sin chi, y cos chi - x sin chi).
// Returned per pair slot {12, 13, 23}. The driven pair gets +-2; one
// spectator counter-rotates for C_12 and C_23.
std::array<double, 3> c_rotation_multipliers(const GeneratorId& g);

// The plane rotation used in the convention above.
std::array<double, 2> rotate_plane(const std::array<double, 2>& v, double chi);

}  // namespace qbloch
