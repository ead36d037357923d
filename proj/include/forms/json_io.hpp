#pragma once

#include <string>

#include <json.hpp>

#include "forms/hermitian.hpp"
#include "forms/seifert.hpp"

namespace forms {

// JSON interchange. Matrices appear either as nested arrays whose entries
// are polynomial strings (or plain numbers), or as a single terse string
// with rows separated by ';' and entries by ','. Polynomials use the
// grammar accepted by parse_laurent, e.g. "2-t-t^-1".
//
// A Hermitian form object is {"gram": <matrix>, "eps": <unit string>} with
// eps defaulting to "1"; eps must parse to a unit monomial s*t^k. A Seifert
// object is {"name": <string>, "seifert": [[int]]}.

nlohmann::json load_json_file(const std::string& path);

LMat matrix_from_json(const nlohmann::json& j);
ZMat int_matrix_from_json(const nlohmann::json& j);
UnitMonomial eps_from_string(const std::string& s);
HermitianForm form_from_json(const nlohmann::json& j);
SeifertMatrix seifert_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const LMat& m);
nlohmann::json matrix_to_json(const ZMat& m);
nlohmann::json form_to_json(const HermitianForm& f);

}  // namespace forms
