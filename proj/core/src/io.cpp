#include "miep/io.hpp"

#include <cmath>
#include <string>

#include "miep/error.hpp"

namespace miep::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::invalid_input, what); }

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) bad(std::string(what) + ": non-finite value");
  return v;
}

// Avoids printing -0 for exact zeros.
double clean(double v) { return v == 0.0 ? 0.0 : v; }

json subsets_to_json(const std::vector<std::vector<int>>& subsets) {
  json out = json::array();
  for (const auto& s : subsets) {
    json one = json::array();
    for (int i : s) one.push_back(i + 1);
    out.push_back(std::move(one));
  }
  return out;
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

json scalar_to_json(Scalar z) {
  if (z.imag() == 0.0) return clean(z.real());
  return json::array({clean(z.real()), clean(z.imag())});
}

Scalar scalar_from_json(const json& j) {
  if (j.is_number()) return {finite_number(j, "scalar"), 0.0};
  if (j.is_array() && j.size() == 2) {
    return {finite_number(j[0], "scalar re"), finite_number(j[1], "scalar im")};
  }
  bad("scalar: expected a number or [re, im]");
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(scalar_to_json(v(i)));
  return out;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) bad("vector: expected an array");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = scalar_from_json(j[i]);
  return v;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.rows()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries")) bad("matrix: expected an object with \"entries\"");
  const json& rows = j.at("entries");
  if (!rows.is_array() || rows.empty()) bad("matrix: \"entries\" must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (j.contains("n")) {
    if (!j.at("n").is_number_integer() || j.at("n").get<long>() != n) {
      bad("matrix: \"n\" does not match the number of rows");
    }
  }
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      bad("matrix: row " + std::to_string(i + 1) + " does not have n entries");
    }
    for (Eigen::Index k = 0; k < n; ++k) m(i, k) = scalar_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

json poly_to_json(const MonicPoly& p) { return {{"coeffs", vector_to_json(p.coeffs)}}; }

MonicPoly poly_from_json(const json& j) {
  if (!j.is_object()) bad("poly: expected an object");
  if (j.contains("coeffs")) {
    Vector b = vector_from_json(j.at("coeffs"));
    if (b.size() == 0) bad("poly: empty coefficient list");
    return MonicPoly(std::move(b));
  }
  if (j.contains("roots")) {
    const Vector r = vector_from_json(j.at("roots"));
    if (r.size() == 0) bad("poly: empty root list");
    return MonicPoly::from_roots(std::span<const Scalar>(r.data(), static_cast<std::size_t>(r.size())));
  }
  bad("poly: expected \"coeffs\" or \"roots\"");
}

json family_to_json(const AffineFamily& f) {
  json out = {{"n", f.order()},
              {"kind", f.kind() == FamilyKind::diagonal ? "diagonal" : "general"}};
  if (f.kind() == FamilyKind::general) {
    out["base"] = matrix_to_json(f.base());
    json basis = json::array();
    for (const Matrix& b : f.basis()) basis.push_back(matrix_to_json(b));
    out["basis"] = std::move(basis);
  }
  return out;
}

AffineFamily family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer()) {
    bad("family: expected an object with integer \"n\"");
  }
  const long n = j.at("n").get<long>();
  if (n < 1) bad("family: \"n\" must be positive");
  const std::string kind = j.value("kind", std::string("general"));
  if (kind == "diagonal") return AffineFamily::diagonal(n);
  if (kind != "general") bad("family: unknown kind \"" + kind + "\"");

  Matrix base = Matrix::Zero(n, n);
  if (j.contains("base")) base = matrix_from_json(j.at("base"));
  if (base.rows() != n) bad("family: base order differs from \"n\"");
  std::vector<Matrix> basis;
  if (j.contains("basis")) {
    if (!j.at("basis").is_array()) bad("family: \"basis\" must be an array");
    for (const json& b : j.at("basis")) {
      basis.push_back(matrix_from_json(b));
      if (basis.back().rows() != n) bad("family: basis matrix order differs from \"n\"");
    }
  }
  return AffineFamily::general(std::move(base), std::move(basis));
}

json plucker_to_json(const PluckerPoint& p) {
  return {{"Z1", matrix_to_json(p.Z1)}, {"Z2", matrix_to_json(p.Z2)}};
}

PluckerPoint plucker_from_json(const json& j) {
  if (!j.is_object() || !j.contains("Z1") || !j.contains("Z2")) bad("plucker point: expected Z1 and Z2");
  return PluckerPoint::from_blocks(matrix_from_json(j.at("Z1")), matrix_from_json(j.at("Z2")));
}

json homogeneous_to_json(const HomogeneousPoly& p) {
  return {{"coeffs", vector_to_json(p.coeffs)}, {"degenerate", p.degenerate}};
}

json point_to_json(const FamilyPoint& p) {
  return {{"x", vector_to_json(p.x)}, {"Z", matrix_to_json(p.Z)}};
}

json report_to_json(const SolvabilityReport& r) {
  json out = {
      {"n", r.n},
      {"parameters", r.parameter_count},
      {"dimension", r.dimension},
      {"dim_ok", r.dim_ok},
      {"det_nonconstant", r.det_nonconstant},
      {"jacobian_rank", r.jacobian_rank},
      {"rank_tol", r.rank_tol},
      {"solvable", r.solvable},
      {"verdict", std::string(to_string(r.verdict))},
      {"matrix_given", r.matrix_given},
  };
  out["det_witness"] = r.det_witness
                           ? json{{"x", vector_to_json(r.det_witness->first)},
                                  {"x_prime", vector_to_json(r.det_witness->second)}}
                           : json(nullptr);
  out["M"] = r.witness_M ? matrix_to_json(*r.witness_M) : json(nullptr);
  out["Z0"] = r.Z0 ? point_to_json(*r.Z0) : json(nullptr);
  out["S"] = r.S ? matrix_to_json(*r.S) : json(nullptr);
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

json witness_to_json(const Witness& w) {
  return {{"M", matrix_to_json(w.M)},
          {"Z0", point_to_json(w.Z0)},
          {"S", matrix_to_json(w.S)},
          {"jacobian_rank", w.jacobian_rank},
          {"n", w.M.rows()}};
}

json config_to_json(const SolveConfig& cfg) {
  return {{"max_iters", cfg.max_iters},     {"residual_tol", cfg.residual_tol},
          {"starts", cfg.starts},           {"seed", cfg.seed},
          {"dedup_tol", cfg.dedup_tol},     {"damping", cfg.damping},
          {"max_backtracks", cfg.max_backtracks},
          {"multiple_root_cond", cfg.multiple_root_cond},
          {"threads", cfg.threads}};
}

json solution_set_to_json(const SolutionSet& set, const SolveConfig& cfg) {
  json sols = json::array();
  for (const Solution& s : set.solutions) {
    sols.push_back({{"x", vector_to_json(s.x)},
                    {"Z", matrix_to_json(s.Z)},
                    {"residual", s.residual},
                    {"verified_residual", s.verified_residual},
                    {"iterations", s.iterations},
                    {"jacobian_cond", std::isfinite(s.jacobian_cond) ? json(s.jacobian_cond) : json(nullptr)},
                    {"probable_multiple", s.probable_multiple},
                    {"hits", s.hits}});
  }
  return {{"solutions", std::move(sols)},
          {"attempted_starts", set.attempted_starts},
          {"converged_starts", set.converged_starts},
          {"distinct_count", set.distinct_count},
          {"config", config_to_json(cfg)}};
}

json nondegeneracy_to_json(const NondegeneracyReport& r) {
  return {{"nondegenerate", r.nondegenerate},
          {"failing_subsets", subsets_to_json(r.failing_subsets)},
          {"min_abs_minor", r.min_abs_minor}};
}

json count_to_json(const CountResult& r, const SolveConfig& cfg) {
  return {{"count", r.count},
          {"expected", r.expected},
          {"match", r.match},
          {"solution_set", solution_set_to_json(r.solutions, cfg)}};
}

}  // namespace miep::io
