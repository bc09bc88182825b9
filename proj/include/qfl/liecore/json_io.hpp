#pragma once

#include <string>

#include "json.hpp"
#include "qfl/liecore/lie_algebra.hpp"

namespace qfl::liecore {

// {"dim": n, "labels": [...], "brackets": [{"i":i,"j":j,"terms":[{"k":k,"c":"p/q"}]}]}
// Brackets are written in (i, j) order, terms in increasing k.
nlohmann::json to_json(const LieAlgebra& g);

/// Throws InputError naming the offending field, e.g. "brackets[2].j".
LieAlgebra algebra_from_json(const nlohmann::json& doc);

LieAlgebra load_algebra_file(const std::string& path);

nlohmann::json vector_to_json(const Vector& v);
nlohmann::json matrix_to_json(const Matrix& m);  // row-major list of rows

}  // namespace qfl::liecore
