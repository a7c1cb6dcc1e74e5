#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <miep/error.hpp>
#include <miep/matrix.hpp>
#include <miep/random.hpp>

#include "test_support.hpp"
#include "unit/unit_support.hpp"

namespace miep {
namespace {

using testing::code_of;
using testing::rel_err;
using testing::vec;

TEST(Charpoly, ZeroMatrixIsLambdaSquared) {
  const MonicPoly p = charpoly(Matrix::Zero(2, 2));
  EXPECT_EQ(p.coeffs, vec({0.0, 0.0}));
}

TEST(Charpoly, IdentityIsCubeOfLambdaMinusOne) {
  const MonicPoly p = charpoly(Matrix::Identity(3, 3));
  EXPECT_LT(rel_err(p.coeffs, vec({-3.0, 3.0, -1.0})), 1e-15);
}

TEST(Charpoly, SwapMatrixMatchesTwoByTwoCofactorOracle) {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  const MonicPoly p = charpoly(m);
  // det(lambda I - M) = lambda^2 - (a + d) lambda + (ad - bc)
  const Vector oracle = vec({-(m(0, 0) + m(1, 1)), m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)});
  EXPECT_LT(rel_err(p.coeffs, oracle), 1e-15);
  EXPECT_LT(rel_err(p.coeffs, vec({0.0, -1.0})), 1e-15);
}

TEST(Charpoly, RejectsNonSquareAndNonFinite) {
  EXPECT_EQ(code_of([] { charpoly(Matrix::Zero(2, 3)); }), ErrorCode::invalid_input);
  Matrix m = Matrix::Identity(2, 2);
  m(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_EQ(code_of([&] { charpoly(m); }), ErrorCode::invalid_input);
}

TEST(Charpoly, TracePowerRouteAgreesWithHessenbergRoute) {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index n = 1 + trial % 6;
    const Matrix m = random_matrix(rng, n, n);
    EXPECT_LT(rel_err(charpoly(m).coeffs, charpoly_hessenberg(m).coeffs), 1e-9) << "n=" << n;
  }
}

TEST(Charpoly, CoefficientsAreSignedSymmetricFunctionsOfTracePowers) {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index n = 1 + trial % 6;
    const Matrix m = random_matrix(rng, n, n);
    // Brute force traces of explicit powers.
    Vector p(n);
    Matrix power = Matrix::Identity(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
      power = power * m;
      p(k) = power.trace();
    }
    EXPECT_LT(rel_err(charpoly(m).coeffs, sigma_to_coeffs(powsums_to_sigma(p))), 1e-9);
  }
}

TEST(Charpoly, MatchesEigenvaluesFromIndependentEigensolver) {
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 1 + trial % 5;
    Matrix m = random_matrix(rng, n, n);
    m.diagonal().array() += 2.0;  // keep it well conditioned
    Eigen::ComplexEigenSolver<Matrix> es(m, false);
    EXPECT_LT(rel_err(charpoly(m).coeffs, testing::coeffs_from_roots(es.eigenvalues())), 1e-8);
  }
}

TEST(PrincipalMinor, SingleEntryFullAndEmpty) {
  Matrix m(2, 2);
  m << 1.0, 1.0, 1.0, 2.0;
  const std::vector<int> first{0};
  const std::vector<int> both{0, 1};
  EXPECT_EQ(principal_minor(m, first), Scalar(1.0));
  EXPECT_NEAR(std::abs(principal_minor(m, both) - Scalar(1.0)), 0.0, 1e-15);
  EXPECT_EQ(principal_minor(m, std::span<const int>{}), Scalar(1.0));
}

TEST(PrincipalMinor, RejectsBadIndexSets) {
  const Matrix m = Matrix::Identity(3, 3);
  const std::vector<int> out_of_range{0, 3};
  const std::vector<int> unsorted{2, 1};
  const std::vector<int> repeated{1, 1};
  EXPECT_EQ(code_of([&] { principal_minor(m, out_of_range); }), ErrorCode::invalid_input);
  EXPECT_EQ(code_of([&] { principal_minor(m, unsorted); }), ErrorCode::invalid_input);
  EXPECT_EQ(code_of([&] { principal_minor(m, repeated); }), ErrorCode::invalid_input);
}

TEST(PrincipalMinor, FullIndexSetIsExactlyDet) {
  Rng rng(14);
  for (Eigen::Index n = 1; n <= 6; ++n) {
    const Matrix m = random_matrix(rng, n, n);
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    EXPECT_EQ(principal_minor(m, all), det(m));
    EXPECT_LT(std::abs(det(m) - testing::leibniz_det(m)), 1e-12 * std::max(1.0, std::abs(det(m))));
  }
}

TEST(NewtonIdentities, DocumentedExamples) {
  EXPECT_LT(rel_err(sigma_to_powsums(vec({3.0, 3.0, 1.0})), vec({3.0, 3.0, 3.0})), 1e-15);
  EXPECT_LT(rel_err(sigma_to_powsums(vec({5.0, 6.0})), vec({5.0, 13.0})), 1e-15);
  EXPECT_LT(rel_err(powsums_to_sigma(vec({5.0, 13.0})), vec({5.0, 6.0})), 1e-15);
}

TEST(NewtonIdentities, RoundTripOnRandomInputs) {
  Rng rng(15);
  for (int trial = 0; trial < 80; ++trial) {
    const Eigen::Index n = 1 + trial % 8;
    const Vector v = random_vector(rng, n);
    EXPECT_LT(rel_err(powsums_to_sigma(sigma_to_powsums(v)), v), 1e-10);
    EXPECT_LT(rel_err(sigma_to_powsums(powsums_to_sigma(v)), v), 1e-10);
    const SymFuncs s = SymFuncs::from_sigma(v);
    EXPECT_LT(rel_err(SymFuncs::from_powsums(s.powsums).sigma, v), 1e-10);
  }
}

TEST(NewtonIdentities, ConversionDerivativeMatchesFiniteDifferences) {
  Rng rng(16);
  for (Eigen::Index n = 1; n <= 6; ++n) {
    const Vector p = random_vector(rng, n);
    const Vector dp = random_vector(rng, n);
    const double h = 1e-6;
    const Vector fd = (powsums_to_sigma(p + h * dp) - powsums_to_sigma(p - h * dp)) / (2 * h);
    EXPECT_LT(rel_err(powsums_to_sigma_derivative(p, powsums_to_sigma(p), dp), fd), 1e-7);
  }
}

TEST(MonicPoly, RootsRoundTrip) {
  const std::vector<Scalar> roots{{1.0, 0.0}, {-2.0, 0.5}, {0.0, 3.0}};
  const MonicPoly p = MonicPoly::from_roots(roots);
  for (const Scalar& r : roots) EXPECT_LT(std::abs(p.evaluate(r)), 1e-12);
  for (const Scalar& r : p.roots()) EXPECT_LT(std::abs(p.evaluate(r)), 1e-10);
  const Vector rv = Eigen::Map<const Vector>(roots.data(), 3);
  EXPECT_LT(rel_err(p.coeffs, testing::coeffs_from_roots(rv)), 1e-15);
}

TEST(DenseLinearAlgebra, DocumentedExamples) {
  EXPECT_EQ(det(Matrix::Identity(4, 4)), Scalar(1.0));
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 1.0, 2.0, 3.0;
  EXPECT_EQ(trace(d), Scalar(6.0));
  Matrix r = Matrix::Zero(2, 2);
  r(0, 0) = 1.0;
  EXPECT_EQ(numerical_rank(r, 1e-9), 1);
  EXPECT_EQ(numerical_rank(Matrix::Zero(2, 2)), 0);
}

TEST(DenseLinearAlgebra, SingularAndMismatchedInputs) {
  Matrix s(2, 2);
  s << 1.0, 2.0, 2.0, 4.0;
  EXPECT_EQ(code_of([&] { inverse(s); }), ErrorCode::singular_matrix);
  EXPECT_EQ(code_of([&] { solve_linear(s, Vector::Ones(2)); }), ErrorCode::singular_matrix);
  EXPECT_EQ(code_of([] { solve_linear(Matrix::Identity(2, 2), Vector::Ones(3)); }),
            ErrorCode::dimension_mismatch);
  EXPECT_EQ(code_of([] { matmul(Matrix::Identity(2, 2), Matrix::Identity(3, 3)); }),
            ErrorCode::dimension_mismatch);
}

TEST(DenseLinearAlgebra, InverseAndSolveAgree) {
  Rng rng(17);
  const Matrix a = random_matrix(rng, 4, 4);
  const Vector b = random_vector(rng, 4);
  EXPECT_LT(rel_err(Matrix(matmul(a, inverse(a))), Matrix(Matrix::Identity(4, 4))), 1e-12);
  EXPECT_LT(rel_err(Vector(a * solve_linear(a, b)), b), 1e-12);
}

TEST(DenseLinearAlgebra, DeterminantIsMultiplicative) {
  Rng rng(18);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 1 + trial % 5;
    const Matrix a = random_matrix(rng, n, n);
    const Matrix b = random_matrix(rng, n, n);
    const Scalar lhs = det(a * b);
    const Scalar rhs = det(a) * det(b);
    EXPECT_LT(std::abs(lhs - rhs), 1e-9 * std::max(1.0, std::abs(rhs)));
  }
}

}  // namespace
}  // namespace miep
