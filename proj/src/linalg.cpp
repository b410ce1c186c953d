#include "qbloch/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qbloch {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* where) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

void require_hermitian(const ComplexMatrix& m, double tol, const char* where) {
  if (!m.is_hermitian(tol)) {
    throw std::invalid_argument(std::string(where) + ": matrix is not Hermitian within " +
                                std::to_string(tol));
  }
}

double offdiag_frobenius(const ComplexMatrix& a) {
  double sum = 0.0;
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < a.dim(); ++c) {
      if (r != c) sum += std::norm(a(r, c));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim)
    : dim_(dim), entries_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
  if (dim <= 0) throw std::invalid_argument("ComplexMatrix: dimension must be positive");
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim <= 0) throw std::invalid_argument("ComplexMatrix: dimension must be positive");
  if (entries_.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
    throw std::invalid_argument("ComplexMatrix: entry count must be dim^2");
  }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  for (int r = 0; r < dim_; ++r) {
    for (int c = r; c < dim_; ++c) {
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    }
  }
  return true;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& e : entries_) sum += std::norm(e);
  return std::sqrt(sum);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator+=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator-=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& e : entries_) e *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator*");
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{0.0, 0.0}) continue;
      for (int c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(double s, ComplexMatrix m) { return m *= Complex{s, 0.0}; }

ComplexMatrix hermitize(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) out(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b + b * a;
}

IndexSet::IndexSet(std::initializer_list<int> list) : IndexSet(std::vector<int>(list)) {}

IndexSet::IndexSet(std::vector<int> list) : indices(std::move(list)) {
  if (indices.empty()) throw std::invalid_argument("IndexSet: must be non-empty");
  for (std::size_t k = 1; k < indices.size(); ++k) {
    if (indices[k] <= indices[k - 1]) {
      throw std::invalid_argument("IndexSet: indices must be strictly increasing");
    }
  }
}

void IndexSet::validate(int dim) const {
  if (indices.front() < 0 || indices.back() >= dim) {
    throw std::out_of_range("IndexSet: index out of range for dimension " + std::to_string(dim));
  }
}

Complex trace_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "trace_inner");
  Complex sum = 0.0;
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < a.dim(); ++c) sum += std::conj(a(r, c)) * b(r, c);
  }
  return sum;
}

Eigensystem eigensystem_hermitian(const ComplexMatrix& m, double herm_tol) {
  require_hermitian(m, herm_tol, "eigensystem_hermitian");
  const int n = m.dim();

  ComplexMatrix a = hermitize(m);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(1.0, a.frobenius_norm());
  const double target = tol::kJacobiOff * scale;

  constexpr int kMaxSweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_frobenius(a) <= target) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq_abs = std::abs(a(p, q));
        if (apq_abs == 0.0) continue;
        const Complex phase = a(p, q) / apq_abs;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Rotation angle t = tan(theta) zeroing the (p,q) entry; the smaller
        // root keeps |theta| <= pi/4.
        const double tau = (aqq - app) / (2.0 * apq_abs);
        const double t = 1.0 / (tau + std::copysign(std::hypot(tau, 1.0), tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // a <- V^dag a V with V the identity outside the (p,q) plane and
        // V[p][p]=c*phase, V[p][q]=s*phase, V[q][p]=-s, V[q][q]=c.
        for (int k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * phase * akp - s * akq;
          a(k, q) = s * phase * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * std::conj(phase) * apk - s * aqk;
          a(q, k) = s * std::conj(phase) * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * phase * vkp - s * vkq;
          v(k, q) = s * phase * vkp + c * vkq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Complex{a(p, p).real(), 0.0};
        a(q, q) = Complex{a(q, q).real(), 0.0};
      }
    }
  }
  if (!converged && offdiag_frobenius(a) > target) {
    throw std::runtime_error("eigensystem_hermitian: Jacobi iteration did not converge");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&a](int x, int y) { return a(x, x).real() < a(y, y).real(); });

  Eigensystem out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (int r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }

  // Contract: the decomposition must actually reproduce the input.
  ComplexMatrix recon(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      Complex sum = 0.0;
      for (int k = 0; k < n; ++k) {
        sum += out.vectors(r, k) * out.values[k] * std::conj(out.vectors(c, k));
      }
      recon(r, c) = sum;
    }
  }
  if ((recon - m).max_abs() > tol::kEigenResidual * scale) {
    throw std::runtime_error("eigensystem_hermitian: reconstruction residual too large");
  }
  return out;
}

std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m, double herm_tol) {
  return eigensystem_hermitian(m, herm_tol).values;
}

double principal_minor(const ComplexMatrix& m, const IndexSet& s, double herm_tol) {
  require_hermitian(m, herm_tol, "principal_minor");
  s.validate(m.dim());
  const int k = static_cast<int>(s.indices.size());
  ComplexMatrix sub(k);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) sub(r, c) = m(s.indices[r], s.indices[c]);
  }
  const Complex det = determinant(sub);
  const double scale = std::max(1.0, m.max_abs());
  if (std::abs(det.imag()) > 1e-12 * scale) {
    throw std::runtime_error("principal_minor: determinant has a non-negligible imaginary part");
  }
  return det.real();
}

Complex determinant(const ComplexMatrix& m) {
  const int n = m.dim();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (n == 3) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }

  ComplexMatrix a = m;
  Complex det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(a(col, col));
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > best) {
        best = std::abs(a(r, col));
        pivot = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const Complex f = a(r, col) / a(col, col);
      for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

ComplexMatrix matrix_exp_unitary(const ComplexMatrix& g, double theta, double herm_tol) {
  const Eigensystem es = eigensystem_hermitian(g, herm_tol);
  const int n = g.dim();
  ComplexMatrix u(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      Complex sum = 0.0;
      for (int k = 0; k < n; ++k) {
        const Complex ph = std::polar(1.0, theta * es.values[k]);
        sum += es.vectors(r, k) * ph * std::conj(es.vectors(c, k));
      }
      u(r, c) = sum;
    }
  }
  ComplexMatrix gram = u * u.adjoint();
  if ((gram - ComplexMatrix::identity(n)).max_abs() > tol::kUnitarity) {
    throw std::runtime_error("matrix_exp_unitary: result is not unitary within tolerance");
  }
  return u;
}

}  // namespace qbloch
