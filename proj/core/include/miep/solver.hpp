#pragma once

#include <cstdint>
#include <vector>

#include "miep/assignment.hpp"
#include "miep/matrix.hpp"

namespace miep {

struct SolveConfig {
  int max_iters = 100;
  /// Absolute bound on ||psi(x) - p||_2.
  double residual_tol = 1e-12;
  /// Number of starting points; 0 selects 64 * n!.
  int starts = 0;
  std::uint64_t seed = 0;
  /// Relative parameter distance below which two solutions are merged.
  double dedup_tol = 1e-6;
  /// Backtracking factor of the line search.
  double damping = 0.5;
  int max_backtracks = 30;
  /// Solutions whose Jacobian condition number exceeds this are flagged as
  /// probable multiple roots.
  double multiple_root_cond = 1e8;
  /// Worker threads for multi-start; results do not depend on this.
  int threads = 1;

  /// Throws invalid_input on non-positive tolerances or counts.
  void validate() const;
  int resolved_starts(Eigen::Index n) const;
};

struct SolveOutcome {
  bool converged = false;
  Vector x;
  double residual = 0.0;
  int iterations = 0;
  /// Accepted step lengths ||x_(k+1) - x_k||, in order.
  std::vector<double> step_norms;
  /// 2-norm condition number of dpsi at the final point (inf if rank-deficient).
  double jacobian_cond = 0.0;
};

struct Solution {
  Vector x;
  Matrix Z;
  /// Residual through the Newton-identity route used by the iteration.
  double residual = 0.0;
  /// Residual through the Hessenberg characteristic polynomial.
  double verified_residual = 0.0;
  int iterations = 0;
  double jacobian_cond = 0.0;
  bool probable_multiple = false;
  /// How many starts converged to this solution.
  int hits = 0;
};

struct SolutionSet {
  std::vector<Solution> solutions;
  int attempted_starts = 0;
  int converged_starts = 0;
  int distinct_count = 0;
};

/// Damped Newton on psi(x) - p from x0. Uses a plain solve when the Jacobian
/// is square and well conditioned, otherwise the minimum-norm least-squares
/// step. Non-convergence is reported through `converged`, not thrown.
SolveOutcome solve_once(const AssignmentContext& ctx, const MonicPoly& p, const Vector& x0,
                        const SolveConfig& cfg = {});

/// Multi-start Newton with deduplication. Deterministic given cfg.seed.
SolutionSet solve(const AssignmentContext& ctx, const MonicPoly& p, const SolveConfig& cfg = {});

/// Starting points used by solve(), in order. For the diagonal family the
/// first min(n!, count) are x_i = r_pi(i) / M_ii over permutations pi of the
/// target roots; the rest are complex Gaussian, one stream per index.
std::vector<Vector> starting_points(const AssignmentContext& ctx, const MonicPoly& p, int count,
                                    std::uint64_t seed);

// Diagonal family ---------------------------------------------------------------

inline constexpr int kNondegeneracyCap = 16;
inline constexpr int kCountingCap = 5;
inline constexpr double kMinorTol = 1e-9;

struct NondegeneracyReport {
  bool nondegenerate = true;
  /// 0-based index subsets whose principal minor has |minor| <= tol.
  std::vector<std::vector<int>> failing_subsets;
  double min_abs_minor = 0.0;
};

/// Checks all 2^n principal minors. Throws too_large above `cap`.
NondegeneracyReport diag_nondegenerate(const Matrix& m, double tol = kMinorTol,
                                       int cap = kNondegeneracyCap);

struct CountResult {
  int count = 0;
  long expected = 0;
  bool match = false;
  SolutionSet solutions;
};

/// Multi-start count of diagonal Z with charpoly(MZ) = p, compared against n!.
/// Throws degenerate when some principal minor of M vanishes and too_large
/// when n exceeds `cap`.
CountResult count_solutions_diagonal(const Matrix& m, const MonicPoly& p,
                                     const SolveConfig& cfg = {}, int cap = kCountingCap);

long factorial(int n);

}  // namespace miep
