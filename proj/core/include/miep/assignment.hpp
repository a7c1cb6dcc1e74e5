#pragma once

#include <vector>

#include "miep/family.hpp"
#include "miep/matrix.hpp"

namespace miep {

/// The fixed matrix M together with the family Z(x) it multiplies.
class AssignmentContext {
 public:
  AssignmentContext(Matrix m, AffineFamily family);

  const Matrix& M() const noexcept { return m_; }
  const AffineFamily& family() const noexcept { return family_; }
  Eigen::Index order() const noexcept { return m_.rows(); }
  Eigen::Index parameter_count() const noexcept { return family_.parameter_count(); }

 private:
  Matrix m_;
  AffineFamily family_;
};

/// Coefficients of det(lambda I - M Z(x)).
MonicPoly psi(const AssignmentContext& ctx, const Vector& x);

/// (tr(MZ), tr((MZ)^2), ..., tr((MZ)^n)) at Z = Z(x).
Vector phi(const AssignmentContext& ctx, const Vector& x);

/// n x d Jacobian of phi: entry (i, j) = (i+1) tr((MZ)^i M B_j), 0-based i.
Matrix dphi(const AssignmentContext& ctx, const Vector& x);

/// n x d Jacobian of the psi coefficients, via the chain rule through the
/// Newton-identity conversion.
Matrix dpsi(const AssignmentContext& ctx, const Vector& x);

/// psi and dpsi sharing one pass over the powers of MZ.
struct Linearization {
  MonicPoly value;
  Matrix jacobian;
};
Linearization linearize(const AssignmentContext& ctx, const Vector& x);

// Compactified map ------------------------------------------------------------

/// Polynomial b0 lambda^n + b1 lambda^(n-1) + ... + bn read as a point of
/// projective n-space. `degenerate` marks the identically-zero polynomial,
/// where the compactified map is undefined.
struct HomogeneousPoly {
  Vector coeffs;
  bool degenerate = false;

  /// Divides by b0. Only meaningful when b0 != 0.
  MonicPoly dehomogenize() const;
};

/// Representative [Z1 Z2] of an n-plane in 2n-space with its maximal minors.
struct PluckerPoint {
  Matrix Z1;
  Matrix Z2;
  Vector coords;

  /// Validates the full-row-rank condition and fills in coords.
  static PluckerPoint from_blocks(Matrix z1, Matrix z2);
};

inline constexpr double kDegenerateTol = 1e-12;

/// det [[Z1, Z2], [M, lambda I]] as a homogeneous coefficient vector, found by
/// evaluating at lambda = 0..n and interpolating.
HomogeneousPoly psi_bar(const Matrix& m, const Matrix& z1, const Matrix& z2,
                        double degenerate_tol = kDegenerateTol);
HomogeneousPoly psi_bar(const Matrix& m, const PluckerPoint& point,
                        double degenerate_tol = kDegenerateTol);

/// All n-element subsets of {0, ..., 2n-1} in lexicographic order. This is the
/// ordering of plucker_coords() and plucker_cofactors().
std::vector<std::vector<int>> plucker_column_subsets(Eigen::Index n);

/// All C(2n, n) maximal minors of [Z1 Z2] in lexicographic column order.
Vector plucker_coords(const Matrix& z1, const Matrix& z2);

/// Cofactor polynomials m_S(lambda) of each maximal minor of the top block in
/// det [[Z1, Z2], [M, lambda I]], so that psi_bar = sum_S z_S m_S. Each entry
/// is a homogeneous coefficient vector (b0, ..., bn).
std::vector<Vector> plucker_cofactors(const Matrix& m);

/// Coefficients (low to high) of the degree <= n polynomial taking `values[k]`
/// at lambda = k, k = 0..n.
Vector interpolate_integer_nodes(const Vector& values);

}  // namespace miep
