#include "miep/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "miep/error.hpp"

namespace miep {

// Small helpers ------------------------------------------------------------

void require_square(const Matrix& m, const char* what) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw Error(ErrorCode::invalid_input,
                std::string(what) + ": expected a non-empty square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) {
    throw Error(ErrorCode::invalid_input, std::string(what) + ": non-finite entry");
  }
}

Matrix unit_matrix(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  Matrix e = Matrix::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

double max_abs(const Matrix& m) noexcept {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// MonicPoly -------------------------------------------------------------------

MonicPoly MonicPoly::from_roots(std::span<const Scalar> roots) {
  // Low-to-high coefficients of the running product, leading 1 included.
  std::vector<Scalar> c{Scalar(1.0)};
  for (const Scalar& r : roots) {
    std::vector<Scalar> next(c.size() + 1, Scalar(0.0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  const auto n = static_cast<Eigen::Index>(roots.size());
  Vector b(n);
  for (Eigen::Index i = 1; i <= n; ++i) b(i - 1) = c[static_cast<std::size_t>(n - i)];
  return MonicPoly(std::move(b));
}

Scalar MonicPoly::evaluate(Scalar lambda) const noexcept {
  Scalar acc(1.0);
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) acc = acc * lambda + coeffs(i);
  return acc;
}

std::vector<Scalar> MonicPoly::roots() const {
  const Eigen::Index n = degree();
  if (n == 0) return {};
  Matrix companion = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) companion(0, j) = -coeffs(j);
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  Eigen::ComplexEigenSolver<Matrix> es(companion, false);
  const Vector& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// Newton's identities -------------------------------------------------------
//
//   p_k - s_1 p_(k-1) + s_2 p_(k-2) - ... + (-1)^(k-1) s_(k-1) p_1 + (-1)^k k s_k = 0

namespace {

double alt(Eigen::Index i) { return (i % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

Vector sigma_to_powsums(const Vector& sigma) {
  const Eigen::Index n = sigma.size();
  Vector p(n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    Scalar acc = alt(k - 1) * static_cast<double>(k) * sigma(k - 1);
    for (Eigen::Index i = 1; i < k; ++i) acc += alt(i - 1) * sigma(i - 1) * p(k - i - 1);
    p(k - 1) = acc;
  }
  return p;
}

Vector powsums_to_sigma(const Vector& powsums) {
  const Eigen::Index n = powsums.size();
  Vector s(n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    // k s_k = sum_{i=1..k} (-1)^(i-1) s_(k-i) p_i, with s_0 = 1.
    Scalar acc = alt(k - 1) * powsums(k - 1);
    for (Eigen::Index i = 1; i < k; ++i) acc += alt(i - 1) * s(k - i - 1) * powsums(i - 1);
    s(k - 1) = acc / static_cast<double>(k);
  }
  return s;
}

Vector powsums_to_sigma_derivative(const Vector& powsums, const Vector& sigma,
                                   const Vector& dp) {
  const Eigen::Index n = powsums.size();
  Vector ds(n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    Scalar acc = alt(k - 1) * dp(k - 1);
    for (Eigen::Index i = 1; i < k; ++i) {
      acc += alt(i - 1) * (ds(k - i - 1) * powsums(i - 1) + sigma(k - i - 1) * dp(i - 1));
    }
    ds(k - 1) = acc / static_cast<double>(k);
  }
  return ds;
}

Vector sigma_to_coeffs(const Vector& sigma) {
  Vector b(sigma.size());
  for (Eigen::Index i = 0; i < sigma.size(); ++i) b(i) = alt(i + 1) * sigma(i);
  return b;
}

Vector coeffs_to_sigma(const Vector& coeffs) {
  // The sign pattern is an involution.
  return sigma_to_coeffs(coeffs);
}

SymFuncs SymFuncs::from_sigma(const Vector& sigma) {
  return SymFuncs{sigma, sigma_to_powsums(sigma)};
}

SymFuncs SymFuncs::from_powsums(const Vector& powsums) {
  return SymFuncs{powsums_to_sigma(powsums), powsums};
}

// Characteristic polynomials ------------------------------------------------

Vector trace_powers(const Matrix& m) {
  require_square(m, "trace_powers");
  const Eigen::Index n = m.rows();
  Vector p(n);
  Matrix power = m;
  p(0) = power.trace();
  for (Eigen::Index k = 2; k <= n; ++k) {
    power = power * m;
    p(k - 1) = power.trace();
  }
  return p;
}

MonicPoly charpoly(const Matrix& m) {
  require_square(m, "charpoly");
  require_finite(m, "charpoly");
  return MonicPoly(sigma_to_coeffs(powsums_to_sigma(trace_powers(m))));
}

MonicPoly charpoly_hessenberg(const Matrix& m) {
  require_square(m, "charpoly_hessenberg");
  require_finite(m, "charpoly_hessenberg");
  const Eigen::Index n = m.rows();
  Eigen::HessenbergDecomposition<Matrix> hess(m);
  const Matrix h = hess.matrixH();

  // polys[k] holds det(lambda I - H[0:k, 0:k]) low-to-high, length k + 1.
  std::vector<std::vector<Scalar>> polys(static_cast<std::size_t>(n + 1));
  polys[0] = {Scalar(1.0)};
  for (Eigen::Index k = 1; k <= n; ++k) {
    const auto& prev = polys[static_cast<std::size_t>(k - 1)];
    std::vector<Scalar> cur(static_cast<std::size_t>(k + 1), Scalar(0.0));
    for (std::size_t t = 0; t < prev.size(); ++t) {
      cur[t + 1] += prev[t];
      cur[t] -= h(k - 1, k - 1) * prev[t];
    }
    Scalar subdiag_product(1.0);
    for (Eigen::Index i = k - 1; i >= 1; --i) {
      subdiag_product *= h(i, i - 1);
      const Scalar factor = h(i - 1, k - 1) * subdiag_product;
      const auto& lower = polys[static_cast<std::size_t>(i - 1)];
      for (std::size_t t = 0; t < lower.size(); ++t) cur[t] -= factor * lower[t];
    }
    polys[static_cast<std::size_t>(k)] = std::move(cur);
  }
  const auto& top = polys[static_cast<std::size_t>(n)];
  Vector b(n);
  for (Eigen::Index i = 1; i <= n; ++i) b(i - 1) = top[static_cast<std::size_t>(n - i)];
  return MonicPoly(std::move(b));
}

// Dense linear algebra -------------------------------------------------------

Scalar det(const Matrix& m) {
  require_square(m, "det");
  return Eigen::PartialPivLU<Matrix>(m).determinant();
}

Scalar trace(const Matrix& m) {
  require_square(m, "trace");
  return m.trace();
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::dimension_mismatch,
                "matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  return a * b;
}

namespace {

Eigen::PartialPivLU<Matrix> checked_lu(const Matrix& m, double condition_bound,
                                       const char* what) {
  require_square(m, what);
  Eigen::PartialPivLU<Matrix> lu(m);
  const double rcond = lu.rcond();
  if (!(rcond > 1.0 / condition_bound)) {
    throw Error(ErrorCode::singular_matrix,
                std::string(what) + ": matrix is singular to working precision (rcond " +
                    std::to_string(rcond) + ")");
  }
  return lu;
}

}  // namespace

Matrix inverse(const Matrix& m, double condition_bound) {
  return checked_lu(m, condition_bound, "inverse").inverse();
}

Vector solve_linear(const Matrix& a, const Vector& b, double condition_bound) {
  if (a.rows() != b.size()) {
    throw Error(ErrorCode::dimension_mismatch, "solve_linear: right-hand side length");
  }
  return checked_lu(a, condition_bound, "solve_linear").solve(b);
}

int numerical_rank(const Matrix& a, double tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  const double largest = sv.size() > 0 ? sv(0) : 0.0;
  if (!(largest > 0.0)) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol * largest) ++rank;
  }
  return rank;
}

Scalar principal_minor(const Matrix& m, std::span<const int> indices) {
  require_square(m, "principal_minor");
  const auto n = static_cast<int>(m.rows());
  for (std::size_t t = 0; t < indices.size(); ++t) {
    if (indices[t] < 0 || indices[t] >= n || (t > 0 && indices[t] <= indices[t - 1])) {
      throw Error(ErrorCode::invalid_input,
                  "principal_minor: index set must be strictly increasing within [0, " +
                      std::to_string(n) + ")");
    }
  }
  if (indices.empty()) return Scalar(1.0);
  const auto k = static_cast<Eigen::Index>(indices.size());
  Matrix sub(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) sub(r, c) = m(indices[r], indices[c]);
  }
  return det(sub);
}

}  // namespace miep
