#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "exactcat/morphism.hpp"

namespace exactcat {

// Insertion-ordered JSON keeps report layouts stable and reviewable.
using Json = nlohmann::ordered_json;

inline Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline Matrix matrix_from_json(const PrimeField& f, const Json& j) {
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    Matrix m(f, rows, cols);
    const Json& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows)
        throw invalid_input("matrix_from_json: row count mismatch");
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(entries[i].size()) != cols)
            throw invalid_input("matrix_from_json: column count mismatch");
        for (int jj = 0; jj < cols; ++jj) m.set(i, jj, entries[i][jj].get<int>());
    }
    return m;
}

inline Json to_json(const Quiver& q) {
    Json arrows = Json::array();
    for (auto& [s, t] : q.arrows()) arrows.push_back(Json::array({s, t}));
    return Json{{"vertices", q.vertex_count()}, {"arrows", std::move(arrows)}};
}

inline Json to_json(const Representation& x) {
    Json arrows = Json::array();
    for (int a = 0; a < x.quiver().arrow_count(); ++a) arrows.push_back(to_json(x.arrow_map(a)));
    return Json{{"dims", x.dims()}, {"arrows", std::move(arrows)}};
}

inline Representation representation_from_json(const Quiver& q, const PrimeField& f,
                                               const Json& j, int max_total_dim) {
    std::vector<int> dims = j.at("dims").get<std::vector<int>>();
    std::vector<Matrix> arrows;
    const Json& am = j.at("arrows");
    for (const Json& a : am) arrows.push_back(matrix_from_json(f, a));
    return Representation(q, f, std::move(dims), std::move(arrows), max_total_dim);
}

inline Json to_json(const RepMorphism& f) {
    Json maps = Json::array();
    for (const Matrix& m : f.maps()) maps.push_back(to_json(m));
    return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())},
                {"maps", std::move(maps)}};
}

inline RepMorphism morphism_from_json(const Quiver& q, const PrimeField& f, const Json& j,
                                      int max_total_dim) {
    Representation src = representation_from_json(q, f, j.at("source"), max_total_dim);
    Representation tgt = representation_from_json(q, f, j.at("target"), max_total_dim);
    std::vector<Matrix> maps;
    for (const Json& m : j.at("maps")) maps.push_back(matrix_from_json(f, m));
    return RepMorphism(std::move(src), std::move(tgt), std::move(maps));
}

}  // namespace exactcat
