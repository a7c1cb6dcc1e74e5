#include "miep/assignment.hpp"

#include <cmath>
#include <string>

#include "miep/error.hpp"

namespace miep {

AssignmentContext::AssignmentContext(Matrix m, AffineFamily family)
    : m_(std::move(m)), family_(std::move(family)) {
  require_square(m_, "assignment matrix M");
  require_finite(m_, "assignment matrix M");
  if (m_.rows() != family_.order()) {
    throw Error(ErrorCode::dimension_mismatch,
                "M has order " + std::to_string(m_.rows()) + " but the family has order " +
                    std::to_string(family_.order()));
  }
}

namespace {

/// tr(P B) without forming the product.
Scalar trace_of_product(const Matrix& p, const Matrix& b) {
  return p.transpose().cwiseProduct(b).sum();
}

/// P_i = (MZ)^i M for i = 0..n-1, plus the power sums of MZ.
struct PowerTable {
  std::vector<Matrix> left;  // (MZ)^i M
  Vector powsums;
};

PowerTable power_table(const AssignmentContext& ctx, const Matrix& z) {
  const Eigen::Index n = ctx.order();
  const Matrix a = ctx.M() * z;
  PowerTable t;
  t.left.reserve(static_cast<std::size_t>(n));
  t.powsums.resize(n);
  Matrix power = Matrix::Identity(n, n);  // (MZ)^i
  for (Eigen::Index i = 0; i < n; ++i) {
    t.left.push_back(power * ctx.M());
    power = power * a;
    t.powsums(i) = power.trace();
  }
  return t;
}

Matrix dphi_from_table(const AssignmentContext& ctx, const PowerTable& t) {
  const Eigen::Index n = ctx.order();
  const Eigen::Index d = ctx.parameter_count();
  const AffineFamily& family = ctx.family();
  Matrix jac(n, d);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Matrix& p = t.left[static_cast<std::size_t>(i)];
    const double weight = static_cast<double>(i + 1);
    for (Eigen::Index j = 0; j < d; ++j) {
      // B_j = E_jj for the diagonal family, so tr(P B_j) = P(j, j).
      const Scalar tr = family.kind() == FamilyKind::diagonal
                            ? p(j, j)
                            : trace_of_product(p, family.basis()[static_cast<std::size_t>(j)]);
      jac(i, j) = weight * tr;
    }
  }
  return jac;
}

Matrix dpsi_from_dphi(const Vector& powsums, const Vector& sigma, const Matrix& dp) {
  Matrix jac(dp.rows(), dp.cols());
  for (Eigen::Index j = 0; j < dp.cols(); ++j) {
    jac.col(j) = sigma_to_coeffs(powsums_to_sigma_derivative(powsums, sigma, dp.col(j)));
  }
  return jac;
}

}  // namespace

MonicPoly psi(const AssignmentContext& ctx, const Vector& x) {
  return charpoly(ctx.M() * ctx.family().evaluate(x).Z);
}

Vector phi(const AssignmentContext& ctx, const Vector& x) {
  return trace_powers(ctx.M() * ctx.family().evaluate(x).Z);
}

Matrix dphi(const AssignmentContext& ctx, const Vector& x) {
  return dphi_from_table(ctx, power_table(ctx, ctx.family().evaluate(x).Z));
}

Matrix dpsi(const AssignmentContext& ctx, const Vector& x) {
  return linearize(ctx, x).jacobian;
}

Linearization linearize(const AssignmentContext& ctx, const Vector& x) {
  const PowerTable t = power_table(ctx, ctx.family().evaluate(x).Z);
  const Vector sigma = powsums_to_sigma(t.powsums);
  return {MonicPoly(sigma_to_coeffs(sigma)),
          dpsi_from_dphi(t.powsums, sigma, dphi_from_table(ctx, t))};
}

// Compactified map ------------------------------------------------------------

MonicPoly HomogeneousPoly::dehomogenize() const {
  const Eigen::Index n = coeffs.size() - 1;
  return MonicPoly(coeffs.tail(n) / coeffs(0));
}

Vector interpolate_integer_nodes(const Vector& values) {
  const Eigen::Index count = values.size();
  // Divided differences on nodes 0, 1, ..., count-1 (unit spacing).
  Vector dd = values;
  for (Eigen::Index level = 1; level < count; ++level) {
    for (Eigen::Index k = count - 1; k >= level; --k) {
      dd(k) = (dd(k) - dd(k - 1)) / static_cast<double>(level);
    }
  }
  // Newton form to monomial form, innermost factor first.
  Vector c = Vector::Zero(count);
  if (count == 0) return c;
  c(0) = dd(count - 1);
  for (Eigen::Index k = count - 2; k >= 0; --k) {
    // c <- c * (lambda - k) + dd(k)
    for (Eigen::Index t = count - 1; t >= 1; --t) c(t) = c(t - 1) - static_cast<double>(k) * c(t);
    c(0) = -static_cast<double>(k) * c(0) + dd(k);
  }
  return c;
}

namespace {

void require_blocks(const Matrix& z1, const Matrix& z2, const char* what) {
  require_square(z1, what);
  if (z2.rows() != z1.rows() || z2.cols() != z1.cols()) {
    throw Error(ErrorCode::dimension_mismatch, std::string(what) + ": Z1 and Z2 differ in shape");
  }
  require_finite(z1, what);
  require_finite(z2, what);
  Matrix joined(z1.rows(), 2 * z1.cols());
  joined << z1, z2;
  if (numerical_rank(joined) < z1.rows()) {
    throw Error(ErrorCode::invalid_input, std::string(what) + ": [Z1 Z2] is not of full row rank");
  }
}

/// Low-to-high coefficients to homogeneous (b0, ..., bn).
Vector to_homogeneous(const Vector& low_to_high) {
  return low_to_high.reverse();
}

double row_norm_product(const Matrix& a) {
  double prod = 1.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) prod *= a.row(i).norm();
  return prod;
}

}  // namespace

HomogeneousPoly psi_bar(const Matrix& m, const Matrix& z1, const Matrix& z2,
                        double degenerate_tol) {
  require_blocks(z1, z2, "psi_bar");
  require_square(m, "psi_bar M");
  const Eigen::Index n = z1.rows();
  if (m.rows() != n) throw Error(ErrorCode::dimension_mismatch, "psi_bar: M order");

  Matrix block(2 * n, 2 * n);
  block.topLeftCorner(n, n) = z1;
  block.topRightCorner(n, n) = z2;
  block.bottomLeftCorner(n, n) = m;
  Vector values(n + 1);
  for (Eigen::Index k = 0; k <= n; ++k) {
    block.bottomRightCorner(n, n) = Matrix::Identity(n, n) * static_cast<double>(k);
    values(k) = det(block);
  }
  HomogeneousPoly out{to_homogeneous(interpolate_integer_nodes(values)), false};

  // Hadamard bound on the determinant at the largest node sets the scale.
  block.bottomRightCorner(n, n) = Matrix::Identity(n, n) * static_cast<double>(n);
  const double scale = std::max(1.0, row_norm_product(block));
  out.degenerate = out.coeffs.cwiseAbs().maxCoeff() <= degenerate_tol * scale;
  return out;
}

HomogeneousPoly psi_bar(const Matrix& m, const PluckerPoint& point, double degenerate_tol) {
  return psi_bar(m, point.Z1, point.Z2, degenerate_tol);
}

std::vector<std::vector<int>> plucker_column_subsets(Eigen::Index n) {
  const int total = static_cast<int>(2 * n);
  const int k = static_cast<int>(n);
  std::vector<std::vector<int>> subsets;
  std::vector<int> s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
  while (true) {
    subsets.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == total - k + i) --i;
    if (i < 0) break;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  }
  return subsets;
}

Vector plucker_coords(const Matrix& z1, const Matrix& z2) {
  require_blocks(z1, z2, "plucker_coords");
  const Eigen::Index n = z1.rows();
  Matrix joined(n, 2 * n);
  joined << z1, z2;
  const auto subsets = plucker_column_subsets(n);
  Vector coords(static_cast<Eigen::Index>(subsets.size()));
  Matrix minor(n, n);
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    for (Eigen::Index c = 0; c < n; ++c) minor.col(c) = joined.col(subsets[s][static_cast<std::size_t>(c)]);
    coords(static_cast<Eigen::Index>(s)) = det(minor);
  }
  return coords;
}

PluckerPoint PluckerPoint::from_blocks(Matrix z1, Matrix z2) {
  Vector coords = plucker_coords(z1, z2);
  return {std::move(z1), std::move(z2), std::move(coords)};
}

std::vector<Vector> plucker_cofactors(const Matrix& m) {
  require_square(m, "plucker_cofactors");
  const Eigen::Index n = m.rows();
  const auto subsets = plucker_column_subsets(n);
  // Laplace expansion along the first n rows: the sign of the term for column
  // set S is (-1)^(sum of rows + sum of S), both 1-based.
  const long row_sum = static_cast<long>(n * (n + 1) / 2);

  std::vector<Vector> cofactors;
  cofactors.reserve(subsets.size());
  Matrix bottom(n, 2 * n);
  bottom.leftCols(n) = m;
  Matrix comp(n, n);
  for (const auto& s : subsets) {
    std::vector<int> complement;
    long col_sum = 0;
    std::size_t pos = 0;
    for (int c = 0; c < static_cast<int>(2 * n); ++c) {
      if (pos < s.size() && s[pos] == c) {
        col_sum += c + 1;
        ++pos;
      } else {
        complement.push_back(c);
      }
    }
    const double sign = ((row_sum + col_sum) % 2 == 0) ? 1.0 : -1.0;
    Vector values(n + 1);
    for (Eigen::Index k = 0; k <= n; ++k) {
      bottom.rightCols(n) = Matrix::Identity(n, n) * static_cast<double>(k);
      for (Eigen::Index c = 0; c < n; ++c) comp.col(c) = bottom.col(complement[static_cast<std::size_t>(c)]);
      values(k) = sign * det(comp);
    }
    cofactors.push_back(to_homogeneous(interpolate_integer_nodes(values)));
  }
  return cofactors;
}

}  // namespace miep
