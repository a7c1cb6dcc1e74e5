#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace miep {

using Scalar = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Default relative tolerance for rank and singularity decisions.
inline constexpr double kDefaultRankTol = 1e-9;

/// inverse() and solve_linear() refuse matrices whose reciprocal condition
/// estimate falls below this bound.
inline constexpr double kDefaultConditionBound = 1e13;

/// Monic polynomial lambda^n + b1 lambda^(n-1) + ... + bn, stored as the
/// coefficient vector (b1, ..., bn). The leading 1 is implicit.
struct MonicPoly {
  Vector coeffs;

  MonicPoly() = default;
  explicit MonicPoly(Vector b) : coeffs(std::move(b)) {}

  Eigen::Index degree() const noexcept { return coeffs.size(); }

  /// Expands prod (lambda - r_i).
  static MonicPoly from_roots(std::span<const Scalar> roots);

  Scalar evaluate(Scalar lambda) const noexcept;

  /// Roots via the eigenvalues of the companion matrix.
  std::vector<Scalar> roots() const;
};

/// Power sums and elementary symmetric functions of the same spectrum.
struct SymFuncs {
  Vector sigma;
  Vector powsums;

  static SymFuncs from_sigma(const Vector& sigma);
  static SymFuncs from_powsums(const Vector& powsums);
};

// Validation -----------------------------------------------------------------

void require_square(const Matrix& m, const char* what);
void require_finite(const Matrix& m, const char* what);

// Symmetric functions ------------------------------------------------------

/// Newton recurrence in the direction sigma -> p.
Vector sigma_to_powsums(const Vector& sigma);
/// Newton recurrence in the direction p -> sigma.
Vector powsums_to_sigma(const Vector& powsums);

/// b_i = (-1)^i sigma_i.
Vector sigma_to_coeffs(const Vector& sigma);
Vector coeffs_to_sigma(const Vector& coeffs);

/// Directional derivative of powsums_to_sigma at `powsums` along `dp`.
/// The conversion Jacobian is lower triangular with diagonal (-1)^(k-1)/k.
Vector powsums_to_sigma_derivative(const Vector& powsums, const Vector& sigma,
                                   const Vector& dp);

// Characteristic polynomials -----------------------------------------------

/// (tr M, tr M^2, ..., tr M^n) by repeated multiplication.
Vector trace_powers(const Matrix& m);

/// det(lambda I - M), computed from the traces of powers of M.
MonicPoly charpoly(const Matrix& m);

/// det(lambda I - M) via unitary Hessenberg reduction followed by the
/// Hessenberg determinant recurrence. Shares no code with charpoly().
MonicPoly charpoly_hessenberg(const Matrix& m);

// Dense linear algebra -------------------------------------------------------

Scalar det(const Matrix& m);
Scalar trace(const Matrix& m);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& m, double condition_bound = kDefaultConditionBound);
Vector solve_linear(const Matrix& a, const Vector& b,
                    double condition_bound = kDefaultConditionBound);

/// Number of singular values above tol * (largest singular value).
int numerical_rank(const Matrix& a, double tol = kDefaultRankTol);

/// Determinant of the submatrix on rows and columns `indices` (0-based,
/// strictly increasing). The empty minor is 1.
Scalar principal_minor(const Matrix& m, std::span<const int> indices);

/// Unit matrix E_ij (0-based) of order n.
Matrix unit_matrix(Eigen::Index n, Eigen::Index i, Eigen::Index j);

/// Largest |entry| over the matrix, 0 for an empty matrix.
double max_abs(const Matrix& m) noexcept;

}  // namespace miep
