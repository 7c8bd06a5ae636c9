#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "amalgam/matrix.hpp"
#include "amalgam/poly.hpp"
#include "amalgam/rational.hpp"

namespace amalgam::io {

using nlohmann::json;

// Matrix interchange: {"rows": r, "cols": c, "entries": ["-3", "5/7", ...]} row-major.
json matrix_to_json(const Matrix<Rational>& m);
Matrix<Rational> matrix_from_json(const json& j);

// Integer matrices (F, Phi) as nested arrays [[1,0],[0,-1]].
json int_matrix_to_json(const Matrix<std::int64_t>& m);

// Polynomial interchange: {"vars": [...], "terms": [{"exp": [...], "coef": "p/q"}, ...]}.
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

// Points file: [{"z": ["1/2", "-3"]}, ...].
std::vector<std::vector<Rational>> points_from_json(const json& j);
json points_to_json(const std::vector<std::vector<Rational>>& pts);

json read_json_file(const std::string& path);

}  // namespace amalgam::io
