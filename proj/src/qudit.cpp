#include "qbloch/qudit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qbloch {

namespace {

void require_dim(int d, const char* where) {
  if (d < 2 || d > kMaxDim) {
    throw std::invalid_argument(std::string(where) + ": dimension must be in [2, " +
                                std::to_string(kMaxDim) + "], got " + std::to_string(d));
  }
}

}  // namespace

std::vector<std::pair<int, int>> qudit_pairs(int d) {
  require_dim(d, "qudit_pairs");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

int qudit_pair_slot(int i, int j, int d) {
  const int lo = std::min(i, j), hi = std::max(i, j);
  if (lo < 1 || hi > d || lo == hi) {
    throw std::invalid_argument("qudit_pair_slot: bad pair (" + std::to_string(i) + "," +
                                std::to_string(j) + ") for d=" + std::to_string(d));
  }
  // Pairs with first level < lo come first: (lo-1) full blocks.
  return (lo - 1) * d - (lo - 1) * lo / 2 + (hi - lo - 1);
}

QuditCoefficients decompose_qudit(const ComplexMatrix& rho, double herm_tol, double trace_tol) {
  const int d = rho.dim();
  require_dim(d, "decompose_qudit");
  if (!rho.is_hermitian(herm_tol)) {
    throw std::invalid_argument("decompose_qudit: matrix is not Hermitian within tolerance");
  }
  if (std::abs(rho.trace() - Complex{1.0, 0.0}) > trace_tol) {
    throw std::invalid_argument("decompose_qudit: trace is not 1 within tolerance");
  }

  QuditCoefficients c;
  c.d = d;
  c.omega.resize(d);
  for (int k = 0; k < d; ++k) c.omega[k] = rho(k, k).real();
  const auto pairs = qudit_pairs(d);
  c.alpha.resize(pairs.size());
  c.beta.resize(pairs.size());
  for (std::size_t slot = 0; slot < pairs.size(); ++slot) {
    const auto [i, j] = pairs[slot];
    c.alpha[slot] = 2.0 * rho(i - 1, j - 1).real();
    c.beta[slot] = -2.0 * rho(i - 1, j - 1).imag();
  }
  return c;
}

ComplexMatrix reconstruct_qudit(const QuditCoefficients& c) {
  require_dim(c.d, "reconstruct_qudit");
  const auto pairs = qudit_pairs(c.d);
  if (c.omega.size() != static_cast<std::size_t>(c.d) || c.alpha.size() != pairs.size() ||
      c.beta.size() != pairs.size()) {
    throw std::invalid_argument("reconstruct_qudit: coefficient count does not match dimension");
  }
  ComplexMatrix rho(c.d);
  for (int k = 0; k < c.d; ++k) rho(k, k) = c.omega[k];
  for (std::size_t slot = 0; slot < pairs.size(); ++slot) {
    const auto [i, j] = pairs[slot];
    const Complex upper{0.5 * c.alpha[slot], -0.5 * c.beta[slot]};
    rho(i - 1, j - 1) = upper;
    rho(j - 1, i - 1) = std::conj(upper);
  }
  return rho;
}

QuditCoefficients to_qudit(const QutritCoefficients& c) {
  QuditCoefficients out;
  out.d = 3;
  out.omega.assign(c.omega.begin(), c.omega.end());
  out.alpha.assign(c.alpha.begin(), c.alpha.end());
  out.beta.assign(c.beta.begin(), c.beta.end());
  return out;
}

QutritCoefficients to_qutrit(const QuditCoefficients& c) {
  if (c.d != 3) throw std::invalid_argument("to_qutrit: dimension is not 3");
  QutritCoefficients out;
  std::copy_n(c.omega.begin(), 3, out.omega.begin());
  std::copy_n(c.alpha.begin(), 3, out.alpha.begin());
  std::copy_n(c.beta.begin(), 3, out.beta.begin());
  return out;
}

MinorReport necessary_conditions(const QuditCoefficients& c, double tol) {
  require_dim(c.d, "necessary_conditions");
  const ComplexMatrix rho = reconstruct_qudit(c);

  MinorReport report;
  report.d = c.d;

  double trace = 0.0;
  for (double w : c.omega) trace += w;
  report.entries.push_back({{}, trace, std::abs(trace - 1.0) <= tol});

  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << c.d); ++mask) {
    std::vector<int> subset;
    for (int k = 0; k < c.d; ++k) {
      if (mask & (1u << k)) subset.push_back(k + 1);
    }
    subsets.push_back(std::move(subset));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  for (const auto& subset : subsets) {
    std::vector<int> zero_based(subset.size());
    std::transform(subset.begin(), subset.end(), zero_based.begin(),
                   [](int level) { return level - 1; });
    const double value = principal_minor(rho, IndexSet(zero_based), 1e-6);
    report.entries.push_back({subset, value, value >= -tol});
  }

  report.overall = true;
  for (const MinorEntry& e : report.entries) report.overall = report.overall && e.pass;
  return report;
}

std::vector<SubspaceVector> subspace_bloch_vectors(const QuditCoefficients& c, double tol) {
  if (!necessary_conditions(c, tol).overall) {
    throw std::invalid_argument("subspace_bloch_vectors: coefficients fail the minor conditions");
  }
  const auto pairs = qudit_pairs(c.d);
  std::vector<SubspaceVector> out;
  out.reserve(pairs.size());
  for (std::size_t slot = 0; slot < pairs.size(); ++slot) {
    const auto [i, j] = pairs[slot];
    SubspaceVector v;
    v.i = i;
    v.j = j;
    v.v = {c.alpha[slot], c.beta[slot], c.omega[i - 1] - c.omega[j - 1]};
    v.radius_bound = c.omega[i - 1] + c.omega[j - 1];
    out.push_back(v);
  }
  return out;
}

}  // namespace qbloch
