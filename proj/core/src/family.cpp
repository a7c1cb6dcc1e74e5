#include "miep/family.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "miep/error.hpp"
#include "miep/random.hpp"

namespace miep {

AffineFamily AffineFamily::diagonal(Eigen::Index n) {
  if (n < 1) throw Error(ErrorCode::invalid_input, "diagonal family: order must be >= 1");
  std::vector<Matrix> basis;
  basis.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) basis.push_back(unit_matrix(n, i, i));
  return AffineFamily(Matrix::Zero(n, n), std::move(basis), FamilyKind::diagonal);
}

AffineFamily AffineFamily::general(Matrix base, std::vector<Matrix> basis) {
  require_square(base, "family base");
  require_finite(base, "family base");
  for (const Matrix& b : basis) {
    if (b.rows() != base.rows() || b.cols() != base.cols()) {
      throw Error(ErrorCode::dimension_mismatch,
                  "family basis matrix does not match the order of the base");
    }
    require_finite(b, "family basis");
  }
  return AffineFamily(std::move(base), std::move(basis), FamilyKind::general);
}

FamilyPoint AffineFamily::evaluate(const Vector& x) const {
  if (x.size() != parameter_count()) {
    throw Error(ErrorCode::dimension_mismatch,
                "evaluate: expected " + std::to_string(parameter_count()) +
                    " parameters, got " + std::to_string(x.size()));
  }
  if (kind_ == FamilyKind::diagonal) {
    return {x, Matrix(x.asDiagonal())};
  }
  Matrix z = base_;
  for (Eigen::Index i = 0; i < x.size(); ++i) z += x(i) * basis_[static_cast<std::size_t>(i)];
  return {x, std::move(z)};
}

int AffineFamily::basis_rank(double tol) const {
  const Eigen::Index n = order();
  const Eigen::Index d = parameter_count();
  if (d == 0) return 0;
  Matrix stacked(d, n * n);
  for (Eigen::Index k = 0; k < d; ++k) {
    stacked.row(k) = basis_[static_cast<std::size_t>(k)].reshaped().transpose();
  }
  return numerical_rank(stacked, tol);
}

int AffineFamily::dimension(double tol) const {
  const int rank = basis_rank(tol);
  if (rank < parameter_count()) {
    throw Error(ErrorCode::dependent_basis,
                "family basis is linearly dependent (rank " + std::to_string(rank) + " < " +
                    std::to_string(parameter_count()) + ")");
  }
  return rank;
}

NonconstancyResult det_is_nonconstant(const AffineFamily& family, int trials,
                                      std::uint64_t seed, double tol) {
  if (trials < 2) throw Error(ErrorCode::invalid_input, "det_is_nonconstant: trials must be >= 2");
  Rng rng(seed);
  std::vector<Vector> xs;
  std::vector<Scalar> dets;
  xs.reserve(static_cast<std::size_t>(trials));
  dets.reserve(static_cast<std::size_t>(trials));
  NonconstancyResult result;
  for (int t = 0; t < trials; ++t) {
    Vector x = random_vector(rng, family.parameter_count());
    dets.push_back(det(family.evaluate(x).Z));
    xs.push_back(std::move(x));
    result.max_abs_det = std::max(result.max_abs_det, std::abs(dets.back()));
  }
  const double threshold = tol * (1.0 + result.max_abs_det);
  for (std::size_t i = 0; i < dets.size() && !result.nonconstant; ++i) {
    for (std::size_t j = i + 1; j < dets.size(); ++j) {
      if (std::abs(dets[i] - dets[j]) > threshold) {
        result.nonconstant = true;
        result.witness = std::make_pair(xs[i], xs[j]);
        break;
      }
    }
  }
  return result;
}

FamilyPoint smooth_point(const AffineFamily& family, std::uint64_t seed, int retries,
                         double tol) {
  Rng rng(seed);
  for (int attempt = 0; attempt < retries; ++attempt) {
    FamilyPoint point = family.evaluate(random_vector(rng, family.parameter_count()));
    if (std::abs(det(point.Z)) > tol) return point;
  }
  throw Error(ErrorCode::not_found,
              "smooth_point: no sample with nonzero determinant after " +
                  std::to_string(retries) + " attempts");
}

}  // namespace miep
