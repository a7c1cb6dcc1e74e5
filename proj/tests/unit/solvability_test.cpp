#include <gtest/gtest.h>

#include <miep/assignment.hpp>
#include <miep/random.hpp>
#include <miep/solvability.hpp>
#include <miep/solver.hpp>

#include "test_support.hpp"
#include "unit/unit_support.hpp"

namespace miep {
namespace {

using testing::code_of;
using testing::rel_err;

std::vector<Matrix> diagonal_tangents(Eigen::Index n) {
  std::vector<Matrix> out;
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(unit_matrix(n, i, i));
  return out;
}

TEST(FindConjugator, DiagonalTangentsAreAlreadyOnto) {
  const auto lspace = diagonal_tangents(3);
  EXPECT_EQ(numerical_rank(diagonal_projection(Matrix::Identity(3, 3), lspace)), 3);
  const Matrix s = find_conjugator(lspace, 5);
  EXPECT_EQ(numerical_rank(diagonal_projection(s, lspace), kDefaultJacobianRankTol), 3);
}

TEST(FindConjugator, TracelessSubspaceIsRejected) {
  const std::vector<Matrix> lspace{unit_matrix(2, 0, 1)};
  EXPECT_EQ(code_of([&] { find_conjugator(lspace); }), ErrorCode::trace_condition_violated);
}

TEST(FindConjugator, TooSmallSubspaceIsRejected) {
  const std::vector<Matrix> lspace{unit_matrix(3, 0, 0), unit_matrix(3, 1, 1)};
  EXPECT_EQ(code_of([&] { find_conjugator(lspace); }), ErrorCode::invalid_input);
}

TEST(FindConjugator, RandomSubspacesPassCertificate) {
  Rng rng(51);
  for (Eigen::Index n = 1; n <= 5; ++n) {
    std::vector<Matrix> lspace;
    for (Eigen::Index k = 0; k < n; ++k) lspace.push_back(random_matrix(rng, n, n));
    const Matrix s = find_conjugator(lspace, static_cast<std::uint64_t>(n));
    EXPECT_EQ(numerical_rank(diagonal_projection(s, lspace), kDefaultJacobianRankTol), n);
    EXPECT_EQ(find_conjugator(lspace, static_cast<std::uint64_t>(n)), s) << "not deterministic";
  }
}

TEST(FindConjugator, SubspaceWithTracelessPartStillWorks) {
  // sl_2 directions plus one element with nonzero trace.
  const std::vector<Matrix> lspace{unit_matrix(2, 0, 1), unit_matrix(2, 1, 0),
                                   Matrix(Matrix::Identity(2, 2))};
  const Matrix s = find_conjugator(lspace, 9);
  EXPECT_EQ(numerical_rank(diagonal_projection(s, lspace), kDefaultJacobianRankTol), 2);
}

TEST(Witness, DiagonalFamilyCertificate) {
  const AffineFamily f = AffineFamily::diagonal(2);
  const Witness w = construct_witness_M(f, 3);
  EXPECT_EQ(w.jacobian_rank, 2);
  EXPECT_EQ(numerical_rank(dphi(AssignmentContext(w.M, f), w.Z0.x), kDefaultJacobianRankTol), 2);
}

TEST(Witness, JacobianFactorsThroughDiagonalProjectionAndV) {
  Rng rng(52);
  for (Eigen::Index n = 2; n <= 4; ++n) {
    const AffineFamily f = testing::random_family(rng, n, n + 1);
    const Witness w = construct_witness_M(f, static_cast<std::uint64_t>(n));
    const Matrix z0_inv = inverse(w.Z0.Z);
    std::vector<Matrix> tangents;
    for (const Matrix& b : f.basis()) tangents.push_back(z0_inv * b);
    // dphi(L) = pi(S Z0^-1 L S^-1) V, as a row vector; columns here.
    const Matrix chain = vandermonde_V(n).transpose() * diagonal_projection(w.S, tangents);
    EXPECT_LT(rel_err(dphi(AssignmentContext(w.M, f), w.Z0.x), chain), 1e-9);
  }
}

TEST(Witness, UnipotentFamilyHasNoTraceDirection) {
  EXPECT_EQ(code_of([] { construct_witness_M(testing::unipotent_family()); }),
            ErrorCode::trace_condition_violated);
}

TEST(Witness, ScalarFamilyGivesReciprocal) {
  const AffineFamily f = AffineFamily::diagonal(1);
  const Witness w = construct_witness_M(f, 4);
  EXPECT_LT(std::abs(w.M(0, 0) - 1.0 / w.Z0.Z(0, 0)), 1e-14);
  EXPECT_EQ(w.jacobian_rank, 1);
}

TEST(Witness, UnderDimensionedFamilyIsRejected) {
  EXPECT_EQ(code_of([] { construct_witness_M(testing::short_diagonal_family()); }),
            ErrorCode::invalid_input);
}

TEST(CheckSolvability, DiagonalWithNondegenerateMatrix) {
  Rng rng(53);
  const Matrix m = testing::random_nondegenerate(rng, 3);
  const SolvabilityReport r = check_generic_solvability(AffineFamily::diagonal(3), m, 1);
  EXPECT_TRUE(r.dim_ok);
  EXPECT_TRUE(r.det_nonconstant);
  EXPECT_EQ(r.jacobian_rank, 3);
  EXPECT_TRUE(r.solvable);
  EXPECT_EQ(r.verdict, Verdict::certified_solvable);
  EXPECT_TRUE(r.matrix_given);
}

TEST(CheckSolvability, UnipotentFamilyFailsDeterminantTest) {
  const SolvabilityReport r = check_generic_solvability(testing::unipotent_family());
  EXPECT_TRUE(r.dim_ok);
  EXPECT_FALSE(r.det_nonconstant);
  EXPECT_FALSE(r.solvable);
  EXPECT_EQ(r.verdict, Verdict::certified_unsolvable);
  EXPECT_LT(r.jacobian_rank, 3);
}

TEST(CheckSolvability, ShortDiagonalFamilyFailsDimensionTest) {
  const SolvabilityReport r = check_generic_solvability(testing::short_diagonal_family());
  EXPECT_FALSE(r.dim_ok);
  EXPECT_EQ(r.dimension, 2);
  EXPECT_FALSE(r.solvable);
  EXPECT_EQ(r.verdict, Verdict::certified_unsolvable);
}

TEST(CheckSolvability, WithoutMatrixConstructsWitness) {
  const SolvabilityReport r = check_generic_solvability(AffineFamily::diagonal(3), std::nullopt, 2);
  EXPECT_EQ(r.verdict, Verdict::certified_solvable);
  ASSERT_TRUE(r.witness_M && r.Z0 && r.S);
  EXPECT_FALSE(r.matrix_given);
  EXPECT_EQ(numerical_rank(dphi(AssignmentContext(*r.witness_M, AffineFamily::diagonal(3)), r.Z0->x),
                           r.rank_tol),
            3);
}

TEST(CheckSolvability, DegenerateMatrixIsInconclusive) {
  // M of rank 1 cannot produce a surjective Jacobian on any family.
  const Matrix rank_one = Vector::Ones(3) * Vector::Ones(3).transpose();
  const SolvabilityReport r = check_generic_solvability(AffineFamily::diagonal(3), rank_one, 0);
  EXPECT_TRUE(r.dim_ok && r.det_nonconstant);
  EXPECT_FALSE(r.solvable);
  EXPECT_EQ(r.verdict, Verdict::inconclusive);
}

TEST(CheckSolvability, VerdictInvariant) {
  Rng rng(54);
  for (int trial = 0; trial < 12; ++trial) {
    const Eigen::Index n = 2 + trial % 3;
    const Eigen::Index d = 1 + trial % 5;
    const AffineFamily f = testing::random_family(rng, n, d);
    const std::optional<Matrix> m =
        trial % 2 == 0 ? std::optional<Matrix>(random_matrix(rng, n, n)) : std::nullopt;
    const SolvabilityReport r = check_generic_solvability(f, m, static_cast<std::uint64_t>(trial));
    EXPECT_EQ(r.solvable, r.dim_ok && r.det_nonconstant && r.jacobian_rank == n);
  }
}

TEST(CheckSolvability, CertificateImpliesSolveSucceeds) {
  Rng rng(55);
  for (Eigen::Index n = 1; n <= 4; ++n) {
    const AffineFamily f = testing::random_family(rng, n, n);
    const SolvabilityReport r = check_generic_solvability(f, std::nullopt, static_cast<std::uint64_t>(n));
    ASSERT_TRUE(r.solvable);
    SolveConfig cfg;
    cfg.residual_tol = 1e-8;
    cfg.starts = 64;
    const SolutionSet set = solve(AssignmentContext(*r.witness_M, f), MonicPoly(random_vector(rng, n)), cfg);
    ASSERT_GT(set.distinct_count, 0) << "n=" << n;
    EXPECT_LE(set.solutions.front().verified_residual, 1e-8);
  }
}

TEST(Vandermonde, SmallCases) {
  EXPECT_EQ(vandermonde_V(1), Matrix::Constant(1, 1, 1.0));
  Matrix two(2, 2);
  two << 1.0, 2.0, 2.0, 8.0;
  EXPECT_EQ(vandermonde_V(2), two);
  EXPECT_LT(std::abs(det(vandermonde_V(2)) - Scalar(4.0)), 1e-14);
}

TEST(Vandermonde, DeterminantFormula) {
  for (int n = 1; n <= 6; ++n) {
    double want = static_cast<double>(factorial(n) * factorial(n));
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) want *= j - i;
    }
    EXPECT_LT(std::abs(det(vandermonde_V(n)) - want) / want, 1e-9) << "n=" << n;
  }
}

}  // namespace
}  // namespace miep
