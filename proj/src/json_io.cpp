#include "forms/json_io.hpp"

#include <fstream>
#include <sstream>

#include "forms/errors.hpp"

namespace forms {

namespace {

Laurent entry_from_json(const nlohmann::json& e) {
    if (e.is_number_integer()) return Laurent(e.get<long long>());
    if (e.is_string()) return parse_laurent(e.get<std::string>());
    throw parse_error("matrix entry must be an integer or a polynomial string");
}

}  // namespace

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(path + ": " + e.what());
    }
    return j;
}

LMat matrix_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_laurent_matrix(j.get<std::string>());
    if (!j.is_array()) throw parse_error("matrix must be a string or an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<Laurent> entries;
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = j[i];
        if (!row.is_array()) throw parse_error("matrix row must be an array");
        if (i == 0)
            cols = row.size();
        else if (row.size() != cols)
            throw parse_error("ragged matrix rows");
        for (const auto& e : row) entries.push_back(entry_from_json(e));
    }
    if (rows > 0 && cols == 0) throw parse_error("matrix rows are empty");
    return LMat(rows, cols, entries);
}

ZMat int_matrix_from_json(const nlohmann::json& j) {
    const LMat m = matrix_from_json(j);
    const auto z = to_integer(m);
    if (!z) throw parse_error("matrix entries must be integers");
    return *z;
}

UnitMonomial eps_from_string(const std::string& s) {
    const Laurent p = parse_laurent(s);
    const auto u = is_unit(p);
    if (!u) throw parse_error("eps must be a unit monomial like 1, -1 or -t");
    return *u;
}

HermitianForm form_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("gram"))
        throw parse_error("form object needs a \"gram\" field");
    UnitMonomial eps{1, 0};
    if (j.contains("eps")) {
        if (!j["eps"].is_string()) throw parse_error("\"eps\" must be a string");
        eps = eps_from_string(j["eps"].get<std::string>());
    }
    return HermitianForm(matrix_from_json(j["gram"]), eps);
}

SeifertMatrix seifert_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("seifert"))
        throw parse_error("seifert object needs a \"seifert\" field");
    return SeifertMatrix(int_matrix_from_json(j["seifert"]));
}

nlohmann::json matrix_to_json(const LMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(to_string(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json matrix_to_json(const ZMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(m(i, k).get_str());
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json form_to_json(const HermitianForm& f) {
    nlohmann::json j;
    j["gram"] = matrix_to_json(f.gram());
    j["eps"] = to_string(f.eps().to_laurent());
    return j;
}

}  // namespace forms
