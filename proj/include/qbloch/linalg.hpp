#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "qbloch/tolerances.hpp"

namespace qbloch {

using Complex = std::complex<double>;

// Dense complex square matrix, row-major storage. Values are immutable in
// spirit: every operation returns a new matrix, nothing here shares state.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim);
  ComplexMatrix(int dim, std::vector<Complex> entries);
  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }
  Complex& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r) * dim_ + c]; }
  const Complex& operator()(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * dim_ + c];
  }
  const std::vector<Complex>& entries() const { return entries_; }

  Complex trace() const;
  ComplexMatrix adjoint() const;
  bool is_hermitian(double tol = tol::kHermiticity) const;
  double max_abs() const;         // elementwise infinity norm
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

 private:
  int dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(double s, ComplexMatrix m);

// (m + m^dag)/2; used to scrub roundoff before eigendecomposition.
ComplexMatrix hermitize(const ComplexMatrix& m);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Row/column selector for principal submatrices: non-empty, strictly
// increasing indices. Range against a concrete dimension is checked at use.
struct IndexSet {
  std::vector<int> indices;

  IndexSet(std::initializer_list<int> list);
  explicit IndexSet(std::vector<int> list);
  void validate(int dim) const;
};

// Tr(a^dag b). Throws on dimension mismatch.
Complex trace_inner(const ComplexMatrix& a, const ComplexMatrix& b);

struct Eigensystem {
  std::vector<double> values;  // nondecreasing
  ComplexMatrix vectors;       // unitary; column k pairs with values[k]
};

// Cyclic complex Jacobi for Hermitian matrices. Input must be Hermitian
// within herm_tol; it is symmetrized before iterating. Converges to an
// off-diagonal Frobenius norm of kJacobiOff (relative to the matrix scale)
// and verifies the reconstruction residual before returning.
Eigensystem eigensystem_hermitian(const ComplexMatrix& m, double herm_tol = tol::kHermiticity);
std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m,
                                          double herm_tol = tol::kHermiticity);

// Determinant of the principal submatrix selected by s. Requires a Hermitian
// input so the result is real.
double principal_minor(const ComplexMatrix& m, const IndexSet& s,
                       double herm_tol = tol::kHermiticity);

// Cofactor expansion for dim <= 3, LU with partial pivoting above.
Complex determinant(const ComplexMatrix& m);

// exp(i theta g) for Hermitian g, via spectral decomposition. The result is
// checked to be unitary within kUnitarity.
ComplexMatrix matrix_exp_unitary(const ComplexMatrix& g, double theta,
                                 double herm_tol = tol::kHermiticity);

}  // namespace qbloch
