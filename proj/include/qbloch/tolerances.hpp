#pragma once

// Central numeric tolerances. Every check that uses one of these accepts a
// per-call override; the constants here are the library-wide defaults.
namespace qbloch::tol {

inline constexpr double kHermiticity = 1e-12;    // elementwise |m_ij - conj(m_ji)|
inline constexpr double kTrace = 1e-12;          // |Tr(rho) - 1|
inline constexpr double kJacobiOff = 1e-14;      // off-diagonal Frobenius target
inline constexpr double kEigenResidual = 1e-10;  // ||m - V diag(w) V^dag||_inf
inline constexpr double kUnitarity = 1e-10;      // ||U U^dag - I||_inf
inline constexpr double kBasisIdentity = 1e-12;  // operator-algebra residuals
inline constexpr double kValidity = 1e-10;       // constraint residual slack
inline constexpr double kSampler = 1e-12;        // sampler acceptance slack
inline constexpr double kPurity = 1e-9;          // |Tr(rho^2) - 1| for "pure"
inline constexpr double kOrthogonal = 1e-9;      // |Tr(rho rho')| verdict threshold

}  // namespace qbloch::tol
