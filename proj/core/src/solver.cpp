#include "miep/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "miep/error.hpp"
#include "miep/random.hpp"

namespace miep {

long factorial(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

void SolveConfig::validate() const {
  if (max_iters < 1 || starts < 0 || max_backtracks < 0 || threads < 1) {
    throw Error(ErrorCode::invalid_input, "solve config: counts must be positive");
  }
  if (!(residual_tol > 0.0) || !(dedup_tol > 0.0) || !(multiple_root_cond > 0.0)) {
    throw Error(ErrorCode::invalid_input, "solve config: tolerances must be positive");
  }
  if (!(damping > 0.0 && damping < 1.0)) {
    throw Error(ErrorCode::invalid_input, "solve config: damping must lie in (0, 1)");
  }
}

int SolveConfig::resolved_starts(Eigen::Index n) const {
  if (starts > 0) return starts;
  const long auto_starts = 64 * factorial(static_cast<int>(n));
  return static_cast<int>(std::min<long>(auto_starts, std::numeric_limits<int>::max()));
}

namespace {

// Parameters beyond this magnitude are treated as escaping to infinity.
constexpr double kDivergenceBound = 1e12;

Vector newton_step(const Matrix& jac, const Vector& r) {
  if (jac.rows() == jac.cols()) {
    Eigen::PartialPivLU<Matrix> lu(jac);
    if (lu.rcond() > 1e-14) return lu.solve(-r);
  }
  // Minimum-norm least-squares step; covers d > n and singular Jacobians.
  return Eigen::CompleteOrthogonalDecomposition<Matrix>(jac).solve(-r);
}

double condition_number(const Matrix& jac) {
  if (jac.size() == 0) return std::numeric_limits<double>::infinity();
  Eigen::JacobiSVD<Matrix> svd(jac);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  if (sv.size() < jac.rows() || !(smallest > 0.0)) return std::numeric_limits<double>::infinity();
  return sv(0) / smallest;
}

}  // namespace

SolveOutcome solve_once(const AssignmentContext& ctx, const MonicPoly& p, const Vector& x0,
                        const SolveConfig& cfg) {
  if (x0.size() != ctx.parameter_count()) {
    throw Error(ErrorCode::dimension_mismatch,
                "solve_once: start has " + std::to_string(x0.size()) + " parameters, family has " +
                    std::to_string(ctx.parameter_count()));
  }
  if (p.degree() != ctx.order()) {
    throw Error(ErrorCode::dimension_mismatch, "solve_once: target degree differs from matrix order");
  }

  SolveOutcome out;
  out.x = x0;
  Linearization lin = linearize(ctx, out.x);
  Vector r = lin.value.coeffs - p.coeffs;
  double rn = r.norm();

  while (out.iterations < cfg.max_iters && rn > cfg.residual_tol) {
    const Vector step = newton_step(lin.jacobian, r);
    if (!step.allFinite()) break;

    double t = 1.0;
    bool accepted = false;
    Vector trial_x;
    Linearization trial;
    Vector trial_r;
    for (int b = 0; b <= cfg.max_backtracks; ++b, t *= cfg.damping) {
      trial_x = out.x + t * step;
      trial = linearize(ctx, trial_x);
      trial_r = trial.value.coeffs - p.coeffs;
      if (trial_r.allFinite() && trial_r.norm() < rn) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;  // stalled

    out.step_norms.push_back(t * step.norm());
    out.x = std::move(trial_x);
    lin = std::move(trial);
    r = std::move(trial_r);
    rn = r.norm();
    ++out.iterations;
    if (out.x.norm() > kDivergenceBound) break;
  }

  out.residual = rn;
  out.converged = rn <= cfg.residual_tol;
  out.jacobian_cond = condition_number(lin.jacobian);
  return out;
}

std::vector<Vector> starting_points(const AssignmentContext& ctx, const MonicPoly& p, int count,
                                    std::uint64_t seed) {
  std::vector<Vector> starts;
  starts.reserve(static_cast<std::size_t>(std::max(count, 0)));
  const Eigen::Index n = ctx.order();
  const Eigen::Index d = ctx.parameter_count();

  if (ctx.family().kind() == FamilyKind::diagonal && count > 0) {
    // Exact solutions when M is diagonal: z_i = r_pi(i) / m_ii.
    const std::vector<Scalar> roots = p.roots();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Vector x(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        const Scalar mii = ctx.M()(i, i);
        const Scalar root = roots[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        x(i) = std::abs(mii) > 1e-8 ? root / mii : root;
      }
      starts.push_back(std::move(x));
    } while (static_cast<int>(starts.size()) < count && std::next_permutation(perm.begin(), perm.end()));
  }

  for (auto k = static_cast<std::uint64_t>(starts.size()); starts.size() < static_cast<std::size_t>(count); ++k) {
    Rng rng(derive_seed(seed, k));
    starts.push_back(random_vector(rng, d));
  }
  return starts;
}

SolutionSet solve(const AssignmentContext& ctx, const MonicPoly& p, const SolveConfig& cfg) {
  cfg.validate();
  if (p.degree() != ctx.order()) {
    throw Error(ErrorCode::dimension_mismatch, "solve: target degree differs from matrix order");
  }
  const int count = cfg.resolved_starts(ctx.order());
  const std::vector<Vector> starts = starting_points(ctx, p, count, cfg.seed);

  std::vector<SolveOutcome> outcomes(starts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < starts.size(); k = next++) {
      outcomes[k] = solve_once(ctx, p, starts[k], cfg);
    }
  };
  const int threads = std::min<int>(cfg.threads, static_cast<int>(starts.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // Merge in start order so the result is independent of scheduling.
  SolutionSet set;
  set.attempted_starts = count;
  for (SolveOutcome& o : outcomes) {
    if (!o.converged) continue;
    ++set.converged_starts;
    auto same = std::find_if(set.solutions.begin(), set.solutions.end(), [&](const Solution& s) {
      return (s.x - o.x).norm() <= cfg.dedup_tol * std::max(1.0, s.x.norm());
    });
    if (same != set.solutions.end()) {
      ++same->hits;
      continue;
    }
    Matrix z = ctx.family().evaluate(o.x).Z;
    const double verified = (charpoly_hessenberg(ctx.M() * z).coeffs - p.coeffs).norm();
    if (!(verified <= cfg.residual_tol)) continue;
    Solution s;
    s.x = std::move(o.x);
    s.Z = std::move(z);
    s.residual = o.residual;
    s.verified_residual = verified;
    s.iterations = o.iterations;
    s.jacobian_cond = o.jacobian_cond;
    s.probable_multiple = o.jacobian_cond > cfg.multiple_root_cond;
    s.hits = 1;
    set.solutions.push_back(std::move(s));
  }
  std::stable_sort(set.solutions.begin(), set.solutions.end(),
                   [](const Solution& a, const Solution& b) { return a.residual < b.residual; });
  set.distinct_count = static_cast<int>(set.solutions.size());
  return set;
}

NondegeneracyReport diag_nondegenerate(const Matrix& m, double tol, int cap) {
  require_square(m, "diag_nondegenerate");
  require_finite(m, "diag_nondegenerate");
  const auto n = static_cast<int>(m.rows());
  if (n > cap) {
    throw Error(ErrorCode::too_large, "diag_nondegenerate: order " + std::to_string(n) +
                                          " exceeds the cap of " + std::to_string(cap));
  }
  NondegeneracyReport report;
  report.min_abs_minor = std::numeric_limits<double>::infinity();
  std::vector<int> subset;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    subset.clear();
    for (int i = 0; i < n; ++i) {
      if (mask & (1U << i)) subset.push_back(i);
    }
    const double value = std::abs(principal_minor(m, subset));
    report.min_abs_minor = std::min(report.min_abs_minor, value);
    if (!(value > tol)) report.failing_subsets.push_back(subset);
  }
  // Present failures by size, then lexicographically.
  std::sort(report.failing_subsets.begin(), report.failing_subsets.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  report.nondegenerate = report.failing_subsets.empty();
  return report;
}

CountResult count_solutions_diagonal(const Matrix& m, const MonicPoly& p, const SolveConfig& cfg,
                                     int cap) {
  require_square(m, "count_solutions_diagonal");
  const auto n = static_cast<int>(m.rows());
  if (n > cap) {
    throw Error(ErrorCode::too_large, "count_solutions_diagonal: order " + std::to_string(n) +
                                          " exceeds the counting cap of " + std::to_string(cap));
  }
  if (const NondegeneracyReport nd = diag_nondegenerate(m); !nd.nondegenerate) {
    throw Error(ErrorCode::degenerate,
                "count_solutions_diagonal: M has " + std::to_string(nd.failing_subsets.size()) +
                    " vanishing principal minor(s)");
  }
  CountResult result;
  result.solutions = solve(AssignmentContext(m, AffineFamily::diagonal(n)), p, cfg);
  result.count = result.solutions.distinct_count;
  result.expected = factorial(n);
  result.match = result.count == result.expected;
  return result;
}

}  // namespace miep
