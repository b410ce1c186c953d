#include "qbloch/bloch.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qbloch {

namespace {

constexpr double kPi = std::numbers::pi;

double gamma_slot(const QutritCoefficients& c, int slot) {
  const auto [i, j] = kQutritPairs[slot];
  return c.omega[i - 1] - c.omega[j - 1];
}

// gamma for an arbitrary (possibly swapped) level pair, read in the
// canonical i<j orientation.
double gamma_canonical(const QutritCoefficients& c, int a, int b) {
  return a < b ? c.omega[a - 1] - c.omega[b - 1] : c.omega[b - 1] - c.omega[a - 1];
}

}  // namespace

int pair_slot(int i, int j) {
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  if (lo == 1 && hi == 2) return 0;
  if (lo == 1 && hi == 3) return 1;
  if (lo == 2 && hi == 3) return 2;
  throw std::invalid_argument("pair_slot: levels must be a pair from {1,2,3}");
}

double BlochTriple::norm(int slot) const {
  const auto& v = u[slot];
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

double reduce_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

QutritCoefficients decompose(const ComplexMatrix& rho, double herm_tol, double trace_tol) {
  if (rho.dim() != 3) {
    throw std::invalid_argument("decompose: expected a 3x3 matrix, got dimension " +
                                std::to_string(rho.dim()));
  }
  if (!rho.is_hermitian(herm_tol)) {
    throw std::invalid_argument("decompose: matrix is not Hermitian within tolerance");
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > trace_tol) {
    throw std::invalid_argument("decompose: trace is not 1 within tolerance");
  }

  QutritCoefficients c;
  for (int k = 0; k < 3; ++k) c.omega[k] = rho(k, k).real();
  for (int slot = 0; slot < 3; ++slot) {
    const auto [i, j] = kQutritPairs[slot];
    c.alpha[slot] = 2.0 * rho(i - 1, j - 1).real();
    c.beta[slot] = -2.0 * rho(i - 1, j - 1).imag();
  }
  return c;
}

ComplexMatrix reconstruct(const QutritCoefficients& c) {
  ComplexMatrix rho(3);
  for (int k = 0; k < 3; ++k) rho(k, k) = c.omega[k];
  for (int slot = 0; slot < 3; ++slot) {
    const auto [i, j] = kQutritPairs[slot];
    const Complex upper{0.5 * c.alpha[slot], -0.5 * c.beta[slot]};
    rho(i - 1, j - 1) = upper;
    rho(j - 1, i - 1) = std::conj(upper);
  }
  return rho;
}

BlochTriple bloch_triple(const QutritCoefficients& c, double trace_tol) {
  const double tr = c.omega[0] + c.omega[1] + c.omega[2];
  if (std::abs(tr - 1.0) > trace_tol) {
    throw std::invalid_argument("bloch_triple: omega does not sum to 1 within tolerance");
  }
  BlochTriple bt;
  for (int slot = 0; slot < 3; ++slot) {
    const auto [i, j] = kQutritPairs[slot];
    const int k = 6 - i - j;
    bt.u[slot] = {c.alpha[slot], c.beta[slot], gamma_slot(c, slot)};
    bt.radii[slot] = 1.0 - c.omega[k - 1];
  }
  return bt;
}

DerivedGeometry derived_geometry(const QutritCoefficients& c) {
  DerivedGeometry g;
  for (int slot = 0; slot < 3; ++slot) {
    const auto [i, j] = kQutritPairs[slot];
    const double product = c.omega[i - 1] * c.omega[j - 1];
    const double len = std::hypot(c.alpha[slot], c.beta[slot]);
    if (product > 0.0) g.d[slot] = len / (2.0 * std::sqrt(product));
    if (c.alpha[slot] == 0.0 && c.beta[slot] == 0.0) {
      g.phi[slot] = 0.0;
    } else {
      g.phi[slot] = reduce_angle(std::atan2(c.beta[slot], c.alpha[slot]));
    }
  }
  g.Phi = reduce_angle(g.phi[0] - g.phi[1] + g.phi[2]);
  return g;
}

double purity(const QutritCoefficients& c) {
  double p = 0.0;
  for (int k = 0; k < 3; ++k) p += c.omega[k] * c.omega[k];
  for (int slot = 0; slot < 3; ++slot) {
    p += 0.5 * (c.alpha[slot] * c.alpha[slot] + c.beta[slot] * c.beta[slot]);
  }
  return p;
}

std::optional<double> det_formula(const QutritCoefficients& c) {
  if (c.omega[0] <= 0.0 || c.omega[1] <= 0.0 || c.omega[2] <= 0.0) return std::nullopt;
  const DerivedGeometry g = derived_geometry(c);
  const double d12 = *g.d[0], d13 = *g.d[1], d23 = *g.d[2];
  const double factor =
      1.0 - (d12 * d12 + d13 * d13 + d23 * d23) + 2.0 * d12 * d13 * d23 * std::cos(g.Phi);
  return c.omega[0] * c.omega[1] * c.omega[2] * factor;
}

double radius_from_gammas(const QutritCoefficients& c, int slot) {
  const auto [i, j] = kQutritPairs[slot];
  const int k = 6 - i - j;
  const double sign_i = (i % 2 == 1) ? 1.0 : -1.0;  // (-1)^(i+1)
  const double sign_j = (j % 2 == 0) ? 1.0 : -1.0;  // (-1)^j
  return (2.0 + sign_i * gamma_canonical(c, i, k) + sign_j * gamma_canonical(c, j, k)) / 3.0;
}

}  // namespace qbloch
