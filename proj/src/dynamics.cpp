#include "qbloch/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qbloch {

namespace {

constexpr double kPi = std::numbers::pi;

void require_dynamics_generator(const GeneratorId& g, const char* where) {
  if (g.kind == GeneratorKind::O) {
    throw std::invalid_argument(std::string(where) + ": generator must be A, B or C");
  }
}

QutritCoefficients evolve_unchecked(const QutritCoefficients& c, const ComplexMatrix& u) {
  const ComplexMatrix rho = reconstruct(c);
  const ComplexMatrix evolved = hermitize(u * rho * u.adjoint());
  // Conjugation preserves the trace to roundoff; reuse the input's own trace
  // slack so slightly off-normalized (but valid) records evolve cleanly.
  return decompose(evolved, tol::kHermiticity, 1e-9);
}

}  // namespace

QutritCoefficients evolve(const QutritCoefficients& c, const GeneratorId& g, double theta,
                          double validity_tol) {
  require_dynamics_generator(g, "evolve");
  if (!is_valid_state(c, validity_tol)) {
    throw std::invalid_argument("evolve: input coefficients do not describe a physical state");
  }
  return evolve_unchecked(c, matrix_exp_unitary(basis_operator(g, 3), theta));
}

std::vector<TrajectoryPoint> trajectory(const QutritCoefficients& c, const GeneratorId& g,
                                        double theta_max, int steps, double validity_tol) {
  require_dynamics_generator(g, "trajectory");
  if (steps < 2) throw std::invalid_argument("trajectory: steps must be >= 2");
  if (!is_valid_state(c, validity_tol)) {
    throw std::invalid_argument("trajectory: input coefficients do not describe a physical state");
  }

  const ComplexMatrix gen = basis_operator(g, 3);
  std::vector<TrajectoryPoint> points;
  points.reserve(steps);
  for (int k = 0; k < steps; ++k) {
    const double theta = theta_max * static_cast<double>(k) / (steps - 1);
    TrajectoryPoint pt;
    pt.theta = theta;
    pt.coefficients = evolve_unchecked(c, matrix_exp_unitary(gen, theta));
    pt.bloch = bloch_triple(pt.coefficients, 1e-9);
    pt.radii = pt.bloch.radii;
    points.push_back(std::move(pt));
  }
  return points;
}

std::pair<int, int> oscillating_radius_slots(const GeneratorId& g) {
  require_dynamics_generator(g, "oscillating_radius_slots");
  const int i = g.pair.i, j = g.pair.j, k = g.pair.complement3();
  return {pair_slot(i, k), pair_slot(j, k)};
}

std::pair<double, double> radius_closed_form(const QutritCoefficients& c, const GeneratorId& g,
                                             double theta) {
  const int slot = pair_slot(g.pair.i, g.pair.j);
  const int k = g.pair.complement3();
  const double gamma0 = c.omega[g.pair.i - 1] - c.omega[g.pair.j - 1];
  double gamma_theta = 0.0;
  switch (g.kind) {
    case GeneratorKind::A:
      gamma_theta = gamma0 * std::cos(2.0 * theta) - c.beta[slot] * std::sin(2.0 * theta);
      break;
    case GeneratorKind::B:
      gamma_theta = gamma0 * std::cos(2.0 * theta) + c.alpha[slot] * std::sin(2.0 * theta);
      break;
    default:
      throw std::invalid_argument("radius_closed_form: generator must be A or B");
  }
  const double base = 0.5 * (1.0 + c.omega[k - 1]);
  return {base + 0.5 * gamma_theta, base - 0.5 * gamma_theta};
}

double oscillation_amplitude(const QutritCoefficients& c, const GeneratorId& g) {
  const int slot = pair_slot(g.pair.i, g.pair.j);
  const double gamma0 = c.omega[g.pair.i - 1] - c.omega[g.pair.j - 1];
  switch (g.kind) {
    case GeneratorKind::A:
      return std::hypot(c.beta[slot], gamma0);
    case GeneratorKind::B:
      return std::hypot(c.alpha[slot], gamma0);
    default:
      throw std::invalid_argument("oscillation_amplitude: generator must be A or B");
  }
}

std::pair<OscillationFit, OscillationFit> radius_oscillation_fit(const QutritCoefficients& c,
                                                                 const GeneratorId& g,
                                                                 int samples) {
  if (g.kind != GeneratorKind::A && g.kind != GeneratorKind::B) {
    throw std::invalid_argument("radius_oscillation_fit: generator must be A or B");
  }
  if (samples < 64) throw std::invalid_argument("radius_oscillation_fit: need >= 64 samples");
  if (!is_valid_state(c)) {
    throw std::invalid_argument("radius_oscillation_fit: input is not a physical state");
  }

  const auto [slot_ik, slot_jk] = oscillating_radius_slots(g);
  const ComplexMatrix gen = basis_operator(g, 3);

  // Uniform grid over one full period (the radius oscillates at frequency 2,
  // so the period in theta is pi). On this grid the Fourier modes are exactly
  // orthogonal and the normal equations are diagonal.
  std::vector<double> theta(samples), y_ik(samples), y_jk(samples);
  for (int n = 0; n < samples; ++n) {
    theta[n] = kPi * static_cast<double>(n) / samples;
    const QutritCoefficients ct = evolve_unchecked(c, matrix_exp_unitary(gen, theta[n]));
    const BlochTriple bt = bloch_triple(ct, 1e-9);
    y_ik[n] = bt.radii[slot_ik];
    y_jk[n] = bt.radii[slot_jk];
  }

  auto fit_one = [&](const std::vector<double>& y) {
    double mean = 0.0, a = 0.0, b = 0.0;
    for (int n = 0; n < samples; ++n) {
      mean += y[n];
      a += y[n] * std::sin(2.0 * theta[n]);
      b += y[n] * std::cos(2.0 * theta[n]);
    }
    mean /= samples;
    a *= 2.0 / samples;
    b *= 2.0 / samples;

    OscillationFit fit;
    fit.offset = mean;
    fit.amplitude = std::hypot(a, b);
    // y = offset + A sin(2t + phase) has sin/cos weights (A cos phase, A sin
    // phase); the cos form used for B generators shifts the read-off.
    fit.phase = (g.kind == GeneratorKind::A) ? std::atan2(b, a) : std::atan2(-a, b);
    for (int n = 0; n < samples; ++n) {
      const double model = mean + a * std::sin(2.0 * theta[n]) + b * std::cos(2.0 * theta[n]);
      fit.max_residual = std::max(fit.max_residual, std::abs(y[n] - model));
    }
    return fit;
  };

  return {fit_one(y_ik), fit_one(y_jk)};
}

std::array<double, 3> c_rotation_multipliers(const GeneratorId& g) {
  if (g.kind != GeneratorKind::C) {
    throw std::invalid_argument("c_rotation_multipliers: generator must be C");
  }
  const int driven = pair_slot(g.pair.i, g.pair.j);
  std::array<double, 3> mult{};
  mult[driven] = 2.0;
  // Spectator pairs rotate by theta; the u_23 spectator of C_12 and the u_12
  // spectator of C_23 counter-rotate.
  if (driven == 0) {
    mult[1] = 1.0;
    mult[2] = -1.0;
  } else if (driven == 1) {
    mult[0] = 1.0;
    mult[2] = 1.0;
  } else {
    mult[0] = -1.0;
    mult[1] = 1.0;
  }
  return mult;
}

std::array<double, 2> rotate_plane(const std::array<double, 2>& v, double chi) {
  const double c = std::cos(chi), s = std::sin(chi);
  return {v[0] * c + v[1] * s, v[1] * c - v[0] * s};
}

}  // namespace qbloch
