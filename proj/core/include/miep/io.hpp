#pragma once

#include <nlohmann/json.hpp>

#include "miep/assignment.hpp"
#include "miep/family.hpp"
#include "miep/matrix.hpp"
#include "miep/solvability.hpp"
#include "miep/solver.hpp"

// JSON forms used by the command-line tool.
//
//   Matrix  {"n": int, "entries": [[e, ...], ...]}   e = number | [re, im]
//   Poly    {"coeffs": [b1, ..., bn]} | {"roots": [r1, ..., rn]}
//   Family  {"n": int, "kind": "diagonal" | "general", "base": Matrix?, "basis": [Matrix, ...]?}
//
// Scalars with a zero imaginary part are written as bare numbers. Index
// subsets in reports are 1-based.

namespace miep::io {

using json = nlohmann::json;

json scalar_to_json(Scalar z);
Scalar scalar_from_json(const json& j);

json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json poly_to_json(const MonicPoly& p);
MonicPoly poly_from_json(const json& j);

json family_to_json(const AffineFamily& f);
AffineFamily family_from_json(const json& j);

json plucker_to_json(const PluckerPoint& p);
PluckerPoint plucker_from_json(const json& j);

json homogeneous_to_json(const HomogeneousPoly& p);
json point_to_json(const FamilyPoint& p);
json report_to_json(const SolvabilityReport& r);
json witness_to_json(const Witness& w);
json config_to_json(const SolveConfig& cfg);
json solution_set_to_json(const SolutionSet& set, const SolveConfig& cfg);
json nondegeneracy_to_json(const NondegeneracyReport& r);
json count_to_json(const CountResult& r, const SolveConfig& cfg);

/// Parses text as JSON, mapping parse failures onto ErrorCode::invalid_input.
json parse(const std::string& text);

}  // namespace miep::io
