#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "miep/family.hpp"
#include "miep/matrix.hpp"

namespace miep {

inline constexpr int kDefaultConjugatorAttempts = 128;
inline constexpr int kDefaultTraceRetries = 64;
inline constexpr double kDefaultJacobianRankTol = 1e-8;
inline constexpr int kDefaultJacobianSamples = 8;

/// Outcome of the generic-solvability decision.
///
/// certified_solvable: a point with a surjective Jacobian was exhibited.
/// certified_unsolvable: the dimension or determinant condition fails, and
///   both are necessary.
/// inconclusive: both conditions hold but no full-rank Jacobian was sampled.
enum class Verdict { certified_solvable, certified_unsolvable, inconclusive };

std::string_view to_string(Verdict v) noexcept;

struct SolvabilityReport {
  Eigen::Index n = 0;
  Eigen::Index parameter_count = 0;
  int dimension = 0;  // rank of the family basis
  bool dim_ok = false;
  bool det_nonconstant = false;
  std::optional<std::pair<Vector, Vector>> det_witness;
  int jacobian_rank = 0;
  double rank_tol = kDefaultJacobianRankTol;
  bool solvable = false;
  Verdict verdict = Verdict::inconclusive;
  /// True when M was supplied by the caller rather than constructed.
  bool matrix_given = false;
  std::optional<Matrix> witness_M;
  /// Point at which jacobian_rank was attained.
  std::optional<FamilyPoint> Z0;
  std::optional<Matrix> S;
  std::string note;
};

struct Witness {
  Matrix M;
  FamilyPoint Z0;
  Matrix S;
  int jacobian_rank = 0;
};

/// Matrix whose column j is the diagonal of S L_j S^-1.
Matrix diagonal_projection(const Matrix& s, std::span<const Matrix> lspace);

/// Random S in GL_n such that the diagonal projection of S L S^-1 is onto
/// C^n, certified by numerical rank. Throws trace_condition_violated when every
/// element of `lspace` is traceless, invalid_input when it spans fewer than n
/// dimensions, and search_exhausted when no sample passes the certificate.
Matrix find_conjugator(std::span<const Matrix> lspace, std::uint64_t seed = 0,
                       int attempts = kDefaultConjugatorAttempts,
                       double rank_tol = kDefaultJacobianRankTol);

/// Builds M = S^-1 D S Z0^-1 with D = diag(1, ..., n), which makes the
/// Jacobian of the power-sum map onto at Z0.
Witness construct_witness_M(const AffineFamily& family, std::uint64_t seed = 0,
                            int trace_retries = kDefaultTraceRetries,
                            int conjugator_attempts = kDefaultConjugatorAttempts,
                            double rank_tol = kDefaultJacobianRankTol);

SolvabilityReport check_generic_solvability(const AffineFamily& family,
                                            const std::optional<Matrix>& m = std::nullopt,
                                            std::uint64_t seed = 0,
                                            double rank_tol = kDefaultJacobianRankTol);

/// D W D with W_ij = i^(j-1) and D = diag(1, ..., n), 1-based.
Matrix vandermonde_V(Eigen::Index n);

}  // namespace miep
