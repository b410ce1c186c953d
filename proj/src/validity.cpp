#include "qbloch/validity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qbloch/linalg.hpp"

namespace qbloch {

namespace {

constexpr double kPi = std::numbers::pi;

std::string slot_suffix(int slot) {
  const auto [i, j] = kQutritPairs[slot];
  return std::to_string(i) + std::to_string(j);
}

double min_eigenvalue(const ComplexMatrix& m) {
  // The reconstructed matrix is Hermitian by construction; a loose tolerance
  // keeps this usable on arbitrary coefficient records.
  return eigenvalues_hermitian(m, 1e-6).front();
}

}  // namespace

ValidityReport check_constraints(const QutritCoefficients& c, double tol) {
  ValidityReport report;
  auto add = [&](std::string id, double residual) {
    report.entries.push_back({std::move(id), residual, residual >= -tol});
  };

  std::array<double, 3> gamma{};
  std::array<double, 3> radius{};
  std::array<double, 3> unorm{};
  for (int slot = 0; slot < 3; ++slot) {
    const auto [i, j] = kQutritPairs[slot];
    const int k = 6 - i - j;
    gamma[slot] = c.omega[i - 1] - c.omega[j - 1];
    radius[slot] = 1.0 - c.omega[k - 1];
    unorm[slot] = std::sqrt(c.alpha[slot] * c.alpha[slot] + c.beta[slot] * c.beta[slot] +
                            gamma[slot] * gamma[slot]);
  }

  add("i.sum", -std::abs(radius[0] + radius[1] + radius[2] - 2.0));
  for (int slot = 0; slot < 3; ++slot) {
    add("i.range." + slot_suffix(slot), std::min(radius[slot], 1.0 - radius[slot]));
  }
  for (int slot = 0; slot < 3; ++slot) {
    add("ii." + slot_suffix(slot), radius[slot] - unorm[slot]);
  }
  // (iii): gamma_ij = R_ik - R_jk, with R indices read canonically. In slot
  // terms this is gamma[0] = R[1]-R[2], gamma[1] = R[0]-R[2], gamma[2] = R[0]-R[1].
  add("iii.12", -std::abs(gamma[0] - (radius[1] - radius[2])));
  add("iii.13", -std::abs(gamma[1] - (radius[0] - radius[2])));
  add("iii.23", -std::abs(gamma[2] - (radius[0] - radius[1])));
  for (int slot = 0; slot < 3; ++slot) {
    add("iv." + slot_suffix(slot), -std::abs(radius[slot] - radius_from_gammas(c, slot)));
  }
  add("v", -std::abs(gamma[0] - gamma[1] + gamma[2]));

  const ComplexMatrix rho = reconstruct(c);
  const double det = determinant(rho).real();
  const std::optional<double> det_f = det_formula(c);
  if (det_f) {
    const double w = c.omega[0] * c.omega[1] * c.omega[2];
    add("vi", *det_f / w);
  } else {
    // Some omega vanishes: the relative lengths do not exist, so the largest
    // minor is checked directly.
    add("vi", det);
  }

  for (int k = 0; k < 3; ++k) add("minor." + std::to_string(k + 1), c.omega[k]);
  for (int slot = 0; slot < 3; ++slot) {
    const auto [i, j] = kQutritPairs[slot];
    const double minor2 =
        c.omega[i - 1] * c.omega[j - 1] -
        0.25 * (c.alpha[slot] * c.alpha[slot] + c.beta[slot] * c.beta[slot]);
    add("minor." + slot_suffix(slot), minor2);
  }
  add("minor.123", det);

  report.overall = true;
  for (const ConstraintEntry& e : report.entries) report.overall = report.overall && e.pass;
  return report;
}

bool is_valid_state(const QutritCoefficients& c, double tol) {
  return check_constraints(c, tol).overall;
}

bool all_phi_valid(const QutritCoefficients& c, double tol) {
  const DerivedGeometry g = derived_geometry(c);
  if (!g.d[0] || !g.d[1] || !g.d[2]) {
    throw std::domain_error("all_phi_valid: some relative length is undefined (omega_i*omega_j = 0)");
  }
  const double d12 = *g.d[0], d13 = *g.d[1], d23 = *g.d[2];
  return 1.0 - (d12 * d12 + d13 * d13 + d23 * d23) - 2.0 * d12 * d13 * d23 >= -tol;
}

bool boundary_phase_constraint(const QutritCoefficients& c, double tol) {
  const DerivedGeometry g = derived_geometry(c);
  bool any_unit = false;
  bool ok = true;
  for (int slot = 0; slot < 3; ++slot) {
    if (!g.d[slot] || std::abs(*g.d[slot] - 1.0) > tol) continue;
    any_unit = true;
    const int a = (slot + 1) % 3, b = (slot + 2) % 3;
    const double da = g.d[a] ? *g.d[a] : 0.0;
    const double db = g.d[b] ? *g.d[b] : 0.0;
    if (std::abs(da - db) > tol) ok = false;
    // Phi only enters the determinant through the product d12*d13*d23, so the
    // phase condition is vacuous when the other two lengths vanish.
    if (da > tol && std::abs(reduce_angle(g.Phi)) > tol) ok = false;
  }
  if (!any_unit) {
    throw std::domain_error("boundary_phase_constraint: no relative length equals 1");
  }
  return ok;
}

namespace {

QutritCoefficients assemble(double r12, const std::array<double, 3>& u12, double len13,
                            double phi13, double len23, double phi23) {
  QutritCoefficients c;
  c.omega[2] = 1.0 - r12;
  c.omega[0] = 0.5 * (r12 + u12[2]);
  c.omega[1] = 0.5 * (r12 - u12[2]);
  c.alpha[0] = u12[0];
  c.beta[0] = u12[1];
  c.alpha[1] = len13 * std::cos(phi13);
  c.beta[1] = len13 * std::sin(phi13);
  c.alpha[2] = len23 * std::cos(phi23);
  c.beta[2] = len23 * std::sin(phi23);
  return c;
}

bool sampler_accepts(const QutritCoefficients& c) {
  return is_valid_state(c, tol::kSampler) &&
         min_eigenvalue(reconstruct(c)) >= -tol::kSampler;
}

}  // namespace

QutritCoefficients sample_valid(std::uint64_t seed, std::uint64_t index) {
  Rng rng = Rng::for_sample(seed, index);
  return sample_valid(rng);
}

QutritCoefficients sample_valid(Rng& rng) {
  // Step 1: sphere radius and a vector inside it.
  const double r12 = rng.uniform();
  std::array<double, 3> dir{};
  double norm = 0.0;
  do {
    for (double& x : dir) x = rng.normal();
    norm = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
  } while (norm < 1e-12);
  const double len12 = r12 * std::cbrt(rng.uniform());
  const std::array<double, 3> u12 = {len12 * dir[0] / norm, len12 * dir[1] / norm,
                                     len12 * dir[2] / norm};

  const double omega1 = 0.5 * (r12 + u12[2]);
  const double omega2 = 0.5 * (r12 - u12[2]);
  const double omega3 = 1.0 - r12;
  const double max13 = 2.0 * std::sqrt(std::max(omega1 * omega3, 0.0));
  const double max23 = 2.0 * std::sqrt(std::max(omega2 * omega3, 0.0));
  const double phi12 =
      (u12[0] == 0.0 && u12[1] == 0.0) ? 0.0 : std::atan2(u12[1], u12[0]);

  constexpr int kStep2Redraws = 1000;
  constexpr int kPhaseDraws = 10000;
  for (int redraw = 0; redraw < kStep2Redraws; ++redraw) {
    // Step 2: lengths of the remaining projections.
    const double len13 = max13 * rng.uniform();
    const double len23 = max23 * rng.uniform();

    // Feasibility over phases: the determinant factor is maximal at Phi = 0,
    // so an empty acceptance region is detectable before drawing any phase.
    const double d12 = (omega1 * omega2 > 0.0)
                           ? std::hypot(u12[0], u12[1]) / (2.0 * std::sqrt(omega1 * omega2))
                           : 0.0;
    const double d13 = (max13 > 0.0) ? len13 / max13 : 0.0;
    const double d23 = (max23 > 0.0) ? len23 / max23 : 0.0;
    const double best = 1.0 - (d12 * d12 + d13 * d13 + d23 * d23) + 2.0 * d12 * d13 * d23;
    if (best < -tol::kSampler) continue;

    // Step 3: phases by rejection.
    for (int it = 0; it < kPhaseDraws; ++it) {
      const double phi13 = rng.uniform(-kPi, kPi);
      const double phi23 = rng.uniform(-kPi, kPi);
      const QutritCoefficients c = assemble(r12, u12, len13, phi13, len23, phi23);
      if (sampler_accepts(c)) return c;
    }
    // Exhausted: the Phi = 0 orientation maximizes the determinant factor.
    const QutritCoefficients c = assemble(r12, u12, len13, phi12, len23, 0.0);
    if (sampler_accepts(c)) return c;
  }
  // Unreachable in practice; zero-length projections are always feasible.
  return assemble(r12, u12, 0.0, 0.0, 0.0, 0.0);
}

OrthogonalityCheck evaluate_orthogonality(const QutritCoefficients& p,
                                          const QutritCoefficients& q, double tol) {
  OrthogonalityCheck out;
  out.coeff_form = 0.0;
  for (int k = 0; k < 3; ++k) out.coeff_form += 2.0 * p.omega[k] * q.omega[k];
  for (int slot = 0; slot < 3; ++slot) {
    out.coeff_form += p.alpha[slot] * q.alpha[slot] + p.beta[slot] * q.beta[slot];
  }

  const BlochTriple bp = bloch_triple(p, 1e-9);
  const BlochTriple bq = bloch_triple(q, 1e-9);
  out.bloch_form = 2.0;
  for (int slot = 0; slot < 3; ++slot) {
    out.bloch_form -= bp.radii[slot] * bq.radii[slot];
    for (int k = 0; k < 3; ++k) out.bloch_form += bp.u[slot][k] * bq.u[slot][k];
  }

  if (std::abs(purity(p) - 1.0) <= tol::kPurity && std::abs(purity(q) - 1.0) <= tol::kPurity) {
    double form = 2.0;
    for (int slot = 0; slot < 3; ++slot) {
      const double np = bp.norm(slot);
      const double nq = bq.norm(slot);
      if (np * nq == 0.0) continue;  // the |u||u'| prefactor annihilates the term
      double dot = 0.0;
      for (int k = 0; k < 3; ++k) dot += bp.u[slot][k] * bq.u[slot][k];
      form -= np * nq - dot;
    }
    out.pure_form = form;
  }

  out.trace_overlap = trace_inner(reconstruct(p), reconstruct(q)).real();
  out.orthogonal = std::abs(0.5 * out.coeff_form) <= tol;
  return out;
}

bool orthogonal_pure_mixed(const QutritCoefficients& p, const QutritCoefficients& q, double tol,
                           double purity_tol) {
  if (std::abs(purity(p) - 1.0) > purity_tol) {
    throw std::invalid_argument("orthogonal_pure_mixed: first state is not pure");
  }
  return evaluate_orthogonality(p, q, tol).orthogonal;
}

bool orthogonal_pure_pure(const QutritCoefficients& p, const QutritCoefficients& q, double tol,
                          double purity_tol) {
  if (std::abs(purity(p) - 1.0) > purity_tol || std::abs(purity(q) - 1.0) > purity_tol) {
    throw std::invalid_argument("orthogonal_pure_pure: both states must be pure");
  }
  return evaluate_orthogonality(p, q, tol).orthogonal;
}

}  // namespace qbloch
