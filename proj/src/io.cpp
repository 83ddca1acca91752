#include "fpl/io.hpp"

#include <fstream>

namespace fpl::io {

namespace {

Scalar scalar_from_json(const Json& v, Field field) {
    if (v.is_number()) return Scalar(v.get<double>(), 0.0);
    if (field == Field::Complex && v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return Scalar(v[0].get<double>(), v[1].get<double>());
    }
    throw Error(ErrorCode::ParseError, "matrix entry must be a number" +
                                           std::string(field == Field::Complex ? " or [re, im]" : ""));
}

Json scalar_to_json(const Scalar& s, Field field) {
    if (field == Field::Real) return s.real();
    return Json::array({s.real(), s.imag()});
}

Field field_of(const Json& doc) {
    return doc.contains("field") ? parse_field(doc.at("field").get<std::string>()) : Field::Real;
}

Index int_field(const Json& doc, const char* key) {
    if (!doc.contains(key) || !doc.at(key).is_number_integer()) {
        throw Error(ErrorCode::ParseError, std::string("missing integer field '") + key + "'");
    }
    return doc.at(key).get<Index>();
}

}  // namespace

Matrix matrix_from_columns(const Json& columns, Index rows, Field field) {
    if (!columns.is_array()) throw Error(ErrorCode::ParseError, "expected a list of columns");
    Matrix m(rows, static_cast<Index>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        const Json& col = columns[j];
        if (!col.is_array() || static_cast<Index>(col.size()) != rows) {
            throw Error(ErrorCode::ShapeError, "column " + std::to_string(j) + " does not have " +
                                                   std::to_string(rows) + " entries");
        }
        for (Index i = 0; i < rows; ++i) m(i, static_cast<Index>(j)) = scalar_from_json(col[static_cast<std::size_t>(i)], field);
    }
    return m;
}

Json matrix_to_columns(const Matrix& m, Field field) {
    Json columns = Json::array();
    for (Index j = 0; j < m.cols(); ++j) {
        Json col = Json::array();
        for (Index i = 0; i < m.rows(); ++i) col.push_back(scalar_to_json(m(i, j), field));
        columns.push_back(std::move(col));
    }
    return columns;
}

Frame frame_from_json(const Json& doc) {
    try {
        const Field field = field_of(doc);
        const Index n = int_field(doc, "n");
        const Index k = int_field(doc, "k");
        if (!doc.contains("vectors")) throw Error(ErrorCode::ParseError, "missing 'vectors'");
        Matrix m = matrix_from_columns(doc.at("vectors"), n, field);
        if (m.cols() != k) {
            throw Error(ErrorCode::ShapeError, "declared k = " + std::to_string(k) + " but " +
                                                   std::to_string(m.cols()) + " vectors given");
        }
        return make_frame(std::move(m), field);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

Json frame_to_json(const Frame& f) {
    return Json{{"field", std::string(to_string(f.field()))},
                {"n", f.n()},
                {"k", f.k()},
                {"vectors", matrix_to_columns(f.synthesis(), f.field())}};
}

LoadedFusion fusion_from_json(const Json& doc) {
    try {
        const Field field = field_of(doc);
        const Index n = int_field(doc, "n");
        if (!doc.contains("subspaces") || !doc.at("subspaces").is_array()) {
            throw Error(ErrorCode::ParseError, "missing 'subspaces' list");
        }
        std::vector<Subspace> subspaces;
        std::vector<Index> adjusted;
        for (const auto& entry : doc.at("subspaces")) {
            const Matrix basis = matrix_from_columns(entry.at("basis"), n, field);
            subspaces.push_back(make_subspace(basis, field));
            if (subspaces.back().adjustment() > 1e-8) adjusted.push_back(static_cast<Index>(subspaces.size()) - 1);
        }
        return LoadedFusion{make_fusion_frame(std::move(subspaces)), std::move(adjusted)};
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

Json fusion_to_json(const FusionFrame& p) {
    Json subspaces = Json::array();
    for (const auto& w : p.subspaces()) subspaces.push_back(Json{{"basis", matrix_to_columns(w.basis(), p.field())}});
    return Json{{"n", p.n()}, {"field", std::string(to_string(p.field()))}, {"subspaces", std::move(subspaces)}};
}

Json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
    }
}

void write_json(const std::filesystem::path& path, const Json& doc) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
    out << doc.dump(2) << '\n';
}

Frame read_frame(const std::filesystem::path& path) { return frame_from_json(read_json(path)); }

LoadedFusion read_fusion(const std::filesystem::path& path) { return fusion_from_json(read_json(path)); }

}  // namespace fpl::io
