#include "ncmod/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>

namespace ncmod {

namespace {

[[noreturn]] void file_fail(const std::string& what) { throw FileError(what); }

// Loader bodies run under this wrapper so malformed content of any kind
// surfaces uniformly as FileError.
template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const FileError&) {
        throw;
    } catch (const Error& e) {
        file_fail(std::string(what) + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
        file_fail(std::string(what) + ": " + e.what());
    }
}

const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) file_fail(std::string("missing field '") + key + "'");
    return *it;
}

} // namespace

Algebra::Ptr resolve_algebra(const std::string& name_or_path) {
    try {
        return load_builtin(name_or_path);
    } catch (const DomainError&) {
        std::ifstream probe(name_or_path);
        if (!probe.good())
            throw DomainError("unknown algebra '" + name_or_path +
                              "' (not a builtin, not a readable file)");
    }
    return load_algebra_file(name_or_path);
}

Algebra::Ptr algebra_from_json(const Json& j) {
    return guarded("algebra file", [&] {
        std::string name = field(j, "name").get<std::string>();
        std::size_t dim = field(j, "dim").get<std::size_t>();
        auto basis = field(j, "basis").get<std::vector<std::string>>();
        if (basis.size() != dim) file_fail("algebra file: basis size differs from dim");

        std::optional<std::size_t> unit;
        const Json& ju = field(j, "unit");
        if (!ju.is_null()) unit = ju.get<std::size_t>();

        std::vector<Rational> constants(dim * dim * dim, Rational(0));
        std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
        for (const Json& entry : field(j, "constants")) {
            std::size_t i = field(entry, "i").get<std::size_t>();
            std::size_t jj = field(entry, "j").get<std::size_t>();
            std::size_t k = field(entry, "k").get<std::size_t>();
            if (i >= dim || jj >= dim || k >= dim)
                file_fail("algebra file: constant index out of range");
            if (!seen.insert({i, jj, k}).second)
                file_fail("algebra file: duplicate constant entry (" + std::to_string(i) + "," +
                          std::to_string(jj) + "," + std::to_string(k) + ")");
            constants[(i * dim + jj) * dim + k] =
                Rational::from_string(field(entry, "c").get<std::string>());
        }
        return Algebra::create(std::move(name), std::move(basis), std::move(constants), unit);
    });
}

Json algebra_to_json(const Algebra::Ptr& algebra) {
    Json j;
    j["name"] = algebra->name();
    j["dim"] = algebra->dim();
    j["basis"] = algebra->basis_labels();
    if (algebra->unit_index())
        j["unit"] = *algebra->unit_index();
    else
        j["unit"] = nullptr;
    Json constants = Json::array();
    std::size_t n = algebra->dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t jj = 0; jj < n; ++jj)
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& c = algebra->constant(i, jj, k);
                if (c.is_zero()) continue;
                constants.push_back(Json{{"i", i}, {"j", jj}, {"k", k}, {"c", c.to_string()}});
            }
    j["constants"] = std::move(constants);
    return j;
}

LoadedMatrix matrix_from_json(const Json& j) {
    return guarded("matrix file", [&] {
        std::size_t rows = field(j, "rows").get<std::size_t>();
        std::size_t cols = field(j, "cols").get<std::size_t>();
        const Json& entries = field(j, "entries");
        if (entries.size() != rows) file_fail("matrix file: row count mismatch");

        LoadedMatrix out;
        const Json& alg_field = field(j, "algebra");
        if (alg_field.is_null()) {
            DMatrix m = dmatrix(rows, cols);
            for (std::size_t r = 0; r < rows; ++r) {
                if (entries[r].size() != cols) file_fail("matrix file: column count mismatch");
                for (std::size_t c = 0; c < cols; ++c)
                    m(r, c) = Rational::from_string(entries[r][c].get<std::string>());
            }
            out.rational_matrix = std::move(m);
        } else {
            Algebra::Ptr alg = resolve_algebra(alg_field.get<std::string>());
            AlgMatrix m(rows, cols, alg->zero());
            for (std::size_t r = 0; r < rows; ++r) {
                if (entries[r].size() != cols) file_fail("matrix file: column count mismatch");
                for (std::size_t c = 0; c < cols; ++c)
                    m(r, c) = AlgElem::from_string(alg, entries[r][c].get<std::string>());
            }
            out.algebra_matrix = std::move(m);
            out.algebra = std::move(alg);
        }
        return out;
    });
}

Json matrix_to_json(const AlgMatrix& m, const Algebra::Ptr& algebra) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["algebra"] = algebra->name();
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

Json matrix_to_json(const DMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["algebra"] = nullptr;
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

LoadedVectors vectors_from_json(const Json& j) {
    return guarded("vector file", [&] {
        LoadedVectors out;
        out.algebra = resolve_algebra(field(j, "algebra").get<std::string>());
        out.orientation = orientation_from_name(field(j, "orientation").get<std::string>());
        for (const Json& row : field(j, "vectors")) {
            std::vector<AlgElem> comps;
            for (const Json& e : row)
                comps.push_back(AlgElem::from_string(out.algebra, e.get<std::string>()));
            out.vectors.emplace_back(out.orientation, std::move(comps));
        }
        if (out.vectors.empty()) file_fail("vector file: no vectors");
        return out;
    });
}

Json vectors_to_json(const LoadedVectors& v) {
    Json j;
    j["algebra"] = v.algebra->name();
    j["orientation"] = orientation_name(v.orientation);
    Json rows = Json::array();
    for (const auto& vec : v.vectors) {
        Json row = Json::array();
        for (std::size_t i = 0; i < vec.size(); ++i) row.push_back(vec.comp(i).to_string());
        rows.push_back(std::move(row));
    }
    j["vectors"] = std::move(rows);
    return j;
}

ModuleHom hom_from_json(const Json& j) {
    return guarded("hom file", [&] {
        Algebra::Ptr alg = resolve_algebra(field(j, "algebra").get<std::string>());
        Orientation o = orientation_from_name(field(j, "orientation").get<std::string>());
        const Json& rows = field(j, "matrix");
        if (rows.empty()) file_fail("hom file: empty matrix");
        std::size_t cols = rows[0].size();
        AlgMatrix m(rows.size(), cols, alg->zero());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) file_fail("hom file: ragged matrix");
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = AlgElem::from_string(alg, rows[r][c].get<std::string>());
        }

        if (!j.contains("alg_hom") || j["alg_hom"].is_null())
            return ModuleHom(o, std::move(m));

        Algebra::Ptr source = alg;
        if (j.contains("source_algebra") && !j["source_algebra"].is_null())
            source = resolve_algebra(j["source_algebra"].get<std::string>());
        const Json& gh = j["alg_hom"];
        DMatrix f = dmatrix(gh.size(), gh.empty() ? 0 : gh[0].size());
        for (std::size_t r = 0; r < gh.size(); ++r) {
            if (gh[r].size() != f.cols()) file_fail("hom file: ragged alg_hom");
            for (std::size_t c = 0; c < f.cols(); ++c)
                f(r, c) = Rational::from_string(gh[r][c].get<std::string>());
        }
        return ModuleHom(o, std::move(m), std::move(source), std::move(f));
    });
}

Json hom_to_json(const ModuleHom& h) {
    Json j;
    j["algebra"] = h.target_algebra()->name();
    j["orientation"] = orientation_name(h.orientation());
    Json rows = Json::array();
    for (std::size_t r = 0; r < h.matrix().rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < h.matrix().cols(); ++c)
            row.push_back(h.matrix()(r, c).to_string());
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    if (h.alg_hom()) {
        Json gh = Json::array();
        for (std::size_t r = 0; r < h.alg_hom()->rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < h.alg_hom()->cols(); ++c)
                row.push_back((*h.alg_hom())(r, c).to_string());
            gh.push_back(std::move(row));
        }
        j["alg_hom"] = std::move(gh);
        j["source_algebra"] = h.source_algebra()->name();
    }
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) file_fail("cannot open file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        file_fail("file '" + path + "': " + e.what());
    }
}

Algebra::Ptr load_algebra_file(const std::string& path) {
    return algebra_from_json(read_json_file(path));
}

LoadedMatrix load_matrix_file(const std::string& path) {
    return matrix_from_json(read_json_file(path));
}

LoadedVectors load_vectors_file(const std::string& path) {
    return vectors_from_json(read_json_file(path));
}

ModuleHom load_hom_file(const std::string& path) {
    return hom_from_json(read_json_file(path));
}

} // namespace ncmod
