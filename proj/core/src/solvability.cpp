#include "miep/solvability.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "miep/assignment.hpp"
#include "miep/error.hpp"
#include "miep/random.hpp"

namespace miep {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::certified_solvable: return "certified-solvable";
    case Verdict::certified_unsolvable: return "certified-unsolvable";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

// |tr L| below this fraction of ||L||_F counts as traceless.
constexpr double kTraceTol = 1e-10;

bool has_nonzero_trace(std::span<const Matrix> lspace) {
  for (const Matrix& l : lspace) {
    if (std::abs(l.trace()) > kTraceTol * std::max(1.0, l.norm())) return true;
  }
  return false;
}

int span_rank(std::span<const Matrix> lspace) {
  const Eigen::Index n = lspace.front().rows();
  Matrix stacked(static_cast<Eigen::Index>(lspace.size()), n * n);
  for (std::size_t k = 0; k < lspace.size(); ++k) {
    stacked.row(static_cast<Eigen::Index>(k)) = lspace[k].reshaped().transpose();
  }
  return numerical_rank(stacked);
}

Matrix diag_of_range(Eigen::Index n) {
  Matrix d = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) d(i, i) = static_cast<double>(i + 1);
  return d;
}

}  // namespace

Matrix diagonal_projection(const Matrix& s, std::span<const Matrix> lspace) {
  const Matrix s_inv = inverse(s);
  Matrix proj(s.rows(), static_cast<Eigen::Index>(lspace.size()));
  for (std::size_t j = 0; j < lspace.size(); ++j) {
    proj.col(static_cast<Eigen::Index>(j)) = (s * lspace[j] * s_inv).diagonal();
  }
  return proj;
}

Matrix find_conjugator(std::span<const Matrix> lspace, std::uint64_t seed, int attempts,
                       double rank_tol) {
  if (lspace.empty()) throw Error(ErrorCode::invalid_input, "find_conjugator: empty subspace");
  const Eigen::Index n = lspace.front().rows();
  for (const Matrix& l : lspace) {
    require_square(l, "find_conjugator");
    if (l.rows() != n) throw Error(ErrorCode::dimension_mismatch, "find_conjugator: mixed orders");
  }
  if (!has_nonzero_trace(lspace)) {
    throw Error(ErrorCode::trace_condition_violated,
                "find_conjugator: every element of the subspace is traceless");
  }
  if (const int rank = span_rank(lspace); rank < n) {
    throw Error(ErrorCode::invalid_input, "find_conjugator: subspace has dimension " +
                                              std::to_string(rank) + " < " + std::to_string(n));
  }

  Rng rng(seed);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const Matrix s = random_matrix(rng, n, n);
    try {
      if (numerical_rank(diagonal_projection(s, lspace), rank_tol) == n) return s;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::singular_matrix) throw;
    }
  }
  throw Error(ErrorCode::search_exhausted,
              "find_conjugator: no conjugator passed the rank certificate in " +
                  std::to_string(attempts) + " attempts");
}

Witness construct_witness_M(const AffineFamily& family, std::uint64_t seed, int trace_retries,
                            int conjugator_attempts, double rank_tol) {
  const Eigen::Index n = family.order();
  if (const int rank = family.basis_rank(); rank < n) {
    throw Error(ErrorCode::invalid_input, "construct_witness_M: family dimension " +
                                              std::to_string(rank) + " < " + std::to_string(n));
  }

  // Z0 must have det != 0 and Z0^-1 * tangent space must leave sl_n.
  for (int r = 0; r < trace_retries; ++r) {
    FamilyPoint z0 = smooth_point(family, derive_seed(seed, static_cast<std::uint64_t>(r)));
    Matrix z0_inv;
    try {
      z0_inv = inverse(z0.Z);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::singular_matrix) throw;
      continue;
    }
    std::vector<Matrix> tangents;
    tangents.reserve(family.basis().size());
    for (const Matrix& b : family.basis()) tangents.push_back(z0_inv * b);
    if (!has_nonzero_trace(tangents)) continue;

    Matrix s = find_conjugator(tangents, derive_seed(seed, 0x5eedULL + static_cast<std::uint64_t>(r)),
                               conjugator_attempts, rank_tol);
    Matrix m = inverse(s) * diag_of_range(n) * s * z0_inv;
    const int rank = numerical_rank(dphi(AssignmentContext(m, family), z0.x), rank_tol);
    if (rank < n) {
      throw Error(ErrorCode::search_exhausted,
                  "construct_witness_M: Jacobian certificate failed (rank " +
                      std::to_string(rank) + ")");
    }
    return Witness{std::move(m), std::move(z0), std::move(s), rank};
  }
  throw Error(ErrorCode::trace_condition_violated,
              "construct_witness_M: Z0^-1 times the tangent space stayed traceless over " +
                  std::to_string(trace_retries) + " sampled points");
}

namespace {

/// Best Jacobian rank of phi over random points of the family.
int sampled_jacobian_rank(const AssignmentContext& ctx, std::uint64_t seed, double rank_tol,
                          std::optional<FamilyPoint>& best_point) {
  int best = -1;
  for (int k = 0; k < kDefaultJacobianSamples; ++k) {
    Rng rng(derive_seed(seed, 0xacb0ULL + static_cast<std::uint64_t>(k)));
    FamilyPoint point = ctx.family().evaluate(random_vector(rng, ctx.parameter_count()));
    const int rank = numerical_rank(dphi(ctx, point.x), rank_tol);
    if (rank > best) {
      best = rank;
      best_point = std::move(point);
    }
    if (best == ctx.order()) break;
  }
  return std::max(best, 0);
}

}  // namespace

SolvabilityReport check_generic_solvability(const AffineFamily& family,
                                            const std::optional<Matrix>& m, std::uint64_t seed,
                                            double rank_tol) {
  SolvabilityReport report;
  report.n = family.order();
  report.parameter_count = family.parameter_count();
  report.rank_tol = rank_tol;
  report.dimension = family.basis_rank();
  report.dim_ok = report.dimension >= report.n;

  const NonconstancyResult nc = det_is_nonconstant(family, kDefaultNonconstancyTrials, seed);
  report.det_nonconstant = nc.nonconstant;
  report.det_witness = nc.witness;
  const bool necessary_ok = report.dim_ok && report.det_nonconstant;

  if (m) {
    report.matrix_given = true;
    const AssignmentContext ctx(*m, family);
    report.witness_M = *m;
    report.jacobian_rank = sampled_jacobian_rank(ctx, seed, rank_tol, report.Z0);
  } else if (necessary_ok) {
    try {
      Witness w = construct_witness_M(family, seed, kDefaultTraceRetries,
                                      kDefaultConjugatorAttempts, rank_tol);
      report.jacobian_rank = w.jacobian_rank;
      report.witness_M = std::move(w.M);
      report.Z0 = std::move(w.Z0);
      report.S = std::move(w.S);
    } catch (const Error& e) {
      report.note = std::string(to_string(e.code())) + ": " + e.what();
    }
  } else {
    // No good M can exist; sample a random one to record Jacobian evidence.
    Rng rng(derive_seed(seed, 0x3a7ULL));
    const AssignmentContext ctx(random_matrix(rng, report.n, report.n), family);
    report.jacobian_rank = sampled_jacobian_rank(ctx, seed, rank_tol, report.Z0);
  }

  report.solvable = necessary_ok && report.jacobian_rank == report.n;
  if (report.solvable) {
    report.verdict = Verdict::certified_solvable;
  } else if (!necessary_ok) {
    report.verdict = Verdict::certified_unsolvable;
    report.note = !report.dim_ok ? "family dimension is below the matrix order"
                                 : "det Z is constant on the family";
  } else {
    report.verdict = Verdict::inconclusive;
    if (report.note.empty()) report.note = "no full-rank Jacobian found at sampled points";
  }
  return report;
}

Matrix vandermonde_V(Eigen::Index n) {
  if (n < 1) throw Error(ErrorCode::invalid_input, "vandermonde_V: n must be >= 1");
  Matrix w(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double value = 1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      w(i, j) = value;
      value *= static_cast<double>(i + 1);
    }
  }
  const Matrix d = diag_of_range(n);
  return d * w * d;
}

}  // namespace miep
