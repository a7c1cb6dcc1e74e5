#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "miep/matrix.hpp"

namespace miep {

enum class FamilyKind { general, diagonal };

/// A point of a family together with its parameters.
struct FamilyPoint {
  Vector x;
  Matrix Z;
};

/// Affine-linear family x -> B0 + sum_i x_i B_i of n x n matrices.
///
/// The tangent space at every point is span(B_1, ..., B_d). Construction only
/// checks shapes; linear independence of the basis is verified by
/// dimension(), which is where a dependent basis is reported.
class AffineFamily {
 public:
  /// Diagonal matrices of order n: B0 = 0, B_i = E_ii.
  static AffineFamily diagonal(Eigen::Index n);

  static AffineFamily general(Matrix base, std::vector<Matrix> basis);

  Eigen::Index order() const noexcept { return base_.rows(); }
  Eigen::Index parameter_count() const noexcept {
    return static_cast<Eigen::Index>(basis_.size());
  }
  FamilyKind kind() const noexcept { return kind_; }
  const Matrix& base() const noexcept { return base_; }
  const std::vector<Matrix>& basis() const noexcept { return basis_; }

  FamilyPoint evaluate(const Vector& x) const;

  /// Returns d after checking that the basis is linearly independent.
  /// Throws ErrorCode::dependent_basis otherwise.
  int dimension(double tol = kDefaultRankTol) const;

  /// Rank of the basis stacked as d vectors in C^(n^2).
  int basis_rank(double tol = kDefaultRankTol) const;

 private:
  AffineFamily(Matrix base, std::vector<Matrix> basis, FamilyKind kind)
      : base_(std::move(base)), basis_(std::move(basis)), kind_(kind) {}

  Matrix base_;
  std::vector<Matrix> basis_;
  FamilyKind kind_;
};

struct NonconstancyResult {
  bool nonconstant = false;
  /// Two parameter vectors with visibly different determinants.
  std::optional<std::pair<Vector, Vector>> witness;
  /// Largest |det Z(x)| seen over the samples.
  double max_abs_det = 0.0;
};

inline constexpr int kDefaultNonconstancyTrials = 8;
inline constexpr double kDefaultNonconstancyTol = 1e-9;
inline constexpr int kDefaultSmoothPointRetries = 64;

/// Randomized identity test for det Z(x). A positive answer carries a witness
/// and is a proof; a negative answer is probabilistic evidence.
NonconstancyResult det_is_nonconstant(const AffineFamily& family,
                                      int trials = kDefaultNonconstancyTrials,
                                      std::uint64_t seed = 0,
                                      double tol = kDefaultNonconstancyTol);

/// Random point of the family with |det Z| > tol. Throws
/// ErrorCode::not_found when `retries` samples all fail.
FamilyPoint smooth_point(const AffineFamily& family, std::uint64_t seed = 0,
                         int retries = kDefaultSmoothPointRetries,
                         double tol = kDefaultNonconstancyTol);

}  // namespace miep
