#pragma once

// JSON file formats: shift-graph instances, hearts, quiver algebras and
// complexes of projectives.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "derhed/error.hpp"
#include "derhed/hereditary.hpp"
#include "derhed/homotopy.hpp"
#include "derhed/quiver.hpp"
#include "derhed/shift_graph.hpp"

namespace derhed {

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void schema_error(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

inline const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) schema_error(where + ": missing key '" + key + "'");
    return j.at(key);
}

inline std::string string_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_string()) schema_error(where + ": '" + key + "' must be a string");
    return v.get<std::string>();
}

inline std::int64_t int_value(const Json& v, const std::string& where) {
    if (!v.is_number_integer()) schema_error(where + " must be an integer");
    return v.get<std::int64_t>();
}

inline bool bool_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_boolean()) schema_error(where + ": '" + key + "' must be a boolean");
    return v.get<bool>();
}

inline const Json& array_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_array()) schema_error(where + ": '" + key + "' must be an array");
    return v;
}

inline int parse_degree(const std::string& key) {
    try {
        std::size_t used = 0;
        const int k = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
        return k;
    } catch (const std::exception&) {
        schema_error("degree key '" + key + "' is not an integer");
    }
}

} // namespace detail

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
    }
}

inline Json to_json(const ShiftGraph& g) {
    Json j;
    j["name"] = g.name;
    j["field_char"] = g.field_char;
    j["genuine"] = g.genuine;
    j["windowed"] = g.windowed;
    j["orbits"] = Json::array();
    for (const Orbit& o : g.orbits()) {
        Json oj;
        oj["id"] = o.id;
        oj["period"] = o.period ? Json(*o.period) : Json(nullptr);
        oj["end_dim"] = o.end_dim;
        j["orbits"].push_back(std::move(oj));
    }
    j["homs"] = Json::array();
    for (const auto& [pair, list] : g.homs()) {
        Json hj;
        hj["from"] = g.orbit(pair.first).id;
        hj["to"] = g.orbit(pair.second).id;
        hj["edges"] = Json::array();
        for (const HomEdge& e : list) {
            hj["edges"].push_back({{"weight", e.weight}, {"dim", e.dim}, {"all_iso", e.all_iso}});
        }
        j["homs"].push_back(std::move(hj));
    }
    return j;
}

inline ShiftGraph shift_graph_from_json(const Json& j) {
    using namespace detail;
    if (!j.is_object()) schema_error("instance: expected an object");
    ShiftGraph g;
    g.name = string_field(j, "name", "instance");
    const std::int64_t p = int_value(field(j, "field_char", "instance"), "instance.field_char");
    if (p < 2 || p >= (1ll << 31) || !PrimeField::is_prime(static_cast<std::uint32_t>(p))) {
        throw Error(ErrorKind::InvalidField, "instance.field_char must be a prime");
    }
    g.field_char = static_cast<std::uint32_t>(p);
    g.genuine = bool_field(j, "genuine", "instance");
    g.windowed = bool_field(j, "windowed", "instance");
    for (const Json& oj : array_field(j, "orbits", "instance")) {
        Orbit o;
        o.id = string_field(oj, "id", "orbit");
        const Json& period = field(oj, "period", "orbit " + o.id);
        if (!period.is_null()) {
            const std::int64_t v = int_value(period, "orbit " + o.id + ".period");
            if (v < 1) schema_error("orbit " + o.id + ".period must be positive or null");
            o.period = static_cast<int>(v);
        }
        const std::int64_t end_dim = int_value(field(oj, "end_dim", "orbit " + o.id), "orbit " + o.id + ".end_dim");
        if (end_dim < 0) schema_error("orbit " + o.id + ".end_dim must be nonnegative");
        o.end_dim = static_cast<std::size_t>(end_dim);
        try {
            g.add_orbit(std::move(o));
        } catch (const Error& e) {
            schema_error(e.what());
        }
    }
    for (const Json& hj : array_field(j, "homs", "instance")) {
        const std::string from = string_field(hj, "from", "hom");
        const std::string to = string_field(hj, "to", "hom");
        const std::size_t a = g.orbit_index(from);
        const std::size_t b = g.orbit_index(to);
        const std::string where = "hom " + from + " -> " + to;
        for (const Json& ej : array_field(hj, "edges", where)) {
            HomEdge e;
            e.weight = static_cast<int>(int_value(field(ej, "weight", where), where + ".weight"));
            const std::int64_t dim = int_value(field(ej, "dim", where), where + ".dim");
            if (dim < 0) schema_error(where + ".dim must be nonnegative");
            e.dim = static_cast<std::size_t>(dim);
            e.all_iso = bool_field(ej, "all_iso", where);
            g.add_edge(a, b, e);
        }
    }
    return g;
}

inline Json to_json(const ShiftGraph& g, const Heart& heart) {
    Json j;
    j["block"] = Json::array();
    for (std::size_t x : heart.block) j["block"].push_back(g.orbit(x).id);
    j["offsets"] = Json::object();
    for (std::size_t x : heart.block) {
        auto it = heart.offsets.find(x);
        if (it != heart.offsets.end()) j["offsets"][g.orbit(x).id] = it->second;
    }
    return j;
}

inline Heart heart_from_json(const ShiftGraph& g, const Json& j) {
    using namespace detail;
    Heart heart;
    for (const Json& id : array_field(j, "block", "heart")) {
        if (!id.is_string()) schema_error("heart.block entries must be orbit ids");
        heart.block.push_back(g.orbit_index(id.get<std::string>()));
    }
    std::sort(heart.block.begin(), heart.block.end());
    const Json& offsets = field(j, "offsets", "heart");
    if (!offsets.is_object()) schema_error("heart.offsets must be an object");
    for (const auto& [id, value] : offsets.items()) {
        heart.offsets[g.orbit_index(id)] = int_value(value, "heart.offsets." + id);
    }
    return heart;
}

/// {"vertices": [...], "arrows": [{"id", "from", "to"}], "relations": [["a1", "a2"], ...]}
inline MonomialAlgebra algebra_from_json(const Json& j, PrimeField fp = PrimeField{}) {
    using namespace detail;
    std::vector<std::string> vertices;
    for (const Json& v : array_field(j, "vertices", "algebra")) {
        if (v.is_string()) {
            vertices.push_back(v.get<std::string>());
        } else if (v.is_number_integer()) {
            vertices.push_back(std::to_string(v.get<std::int64_t>()));
        } else {
            schema_error("algebra.vertices entries must be strings");
        }
    }
    auto vertex_id = [](const Json& v) {
        if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
        if (!v.is_string()) schema_error("arrow endpoints must be vertex ids");
        return v.get<std::string>();
    };
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    for (const Json& a : array_field(j, "arrows", "algebra")) {
        arrows.emplace_back(string_field(a, "id", "arrow"), vertex_id(field(a, "from", "arrow")),
                            vertex_id(field(a, "to", "arrow")));
    }
    std::vector<std::vector<std::string>> relations;
    if (j.contains("relations")) {
        for (const Json& r : array_field(j, "relations", "algebra")) {
            if (!r.is_array()) schema_error("algebra.relations entries must be arrays of arrow ids");
            std::vector<std::string> path;
            for (const Json& a : r) {
                if (!a.is_string()) schema_error("algebra.relations entries must be arrays of arrow ids");
                path.push_back(a.get<std::string>());
            }
            relations.push_back(std::move(path));
        }
    }
    return build_algebra(Quiver::from_ids(std::move(vertices), arrows), relations, fp);
}

namespace detail {

inline void add_term(const MonomialAlgebra& alg, AlgElem& e, const Json& term, const std::string& where) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_string() || !term[1].is_number_integer()) {
        schema_error(where + ": terms must be [path id, coefficient]");
    }
    const std::size_t b = alg.basis_index(term[0].get<std::string>());
    e[b] = alg.field().add(e[b], alg.field().reduce(term[1].get<std::int64_t>()));
}

} // namespace detail

/// {"degrees": {"-1": ["v"], "0": ["v"]}, "differentials": {"-1": rows}}. A
/// matrix is a list of rows, one per summand of the source degree; an entry is
/// a list of [path id, coefficient] terms, or a single such term.
inline ProjComplex complex_from_json(const MonomialAlgebra& alg, const Json& j) {
    using namespace detail;
    std::map<int, std::vector<std::size_t>> comps;
    const Json& degrees = field(j, "degrees", "complex");
    if (!degrees.is_object()) schema_error("complex.degrees must be an object");
    for (const auto& [key, vs] : degrees.items()) {
        if (!vs.is_array()) schema_error("complex.degrees." + key + " must be an array of vertex ids");
        std::vector<std::size_t> vertices;
        for (const Json& v : vs) {
            const std::string id = v.is_number_integer() ? std::to_string(v.get<std::int64_t>())
                                   : v.is_string()       ? v.get<std::string>()
                                                         : std::string();
            try {
                vertices.push_back(alg.quiver().vertex(id));
            } catch (const Error&) {
                throw Error(ErrorKind::AlgebraMismatch, "complex uses vertex '" + id + "' the algebra does not have");
            }
        }
        comps[parse_degree(key)] = std::move(vertices);
    }
    std::map<int, AlgMatrix> diffs;
    if (j.contains("differentials")) {
        const Json& ds = j.at("differentials");
        if (!ds.is_object()) schema_error("complex.differentials must be an object");
        for (const auto& [key, rows] : ds.items()) {
            const int k = parse_degree(key);
            const std::string where = "complex.differentials." + key;
            if (!rows.is_array()) schema_error(where + " must be a list of rows");
            const std::size_t r = rows.size();
            const std::size_t c = r == 0 ? 0 : rows[0].size();
            AlgMatrix m(alg, r, c);
            for (std::size_t i = 0; i < r; ++i) {
                if (!rows[i].is_array() || rows[i].size() != c) schema_error(where + ": ragged matrix");
                for (std::size_t col = 0; col < c; ++col) {
                    const Json& entry = rows[i][col];
                    if (!entry.is_array()) schema_error(where + ": entries must be arrays");
                    if (!entry.empty() && entry[0].is_string()) {
                        add_term(alg, m.at(i, col), entry, where);
                    } else {
                        for (const Json& term : entry) add_term(alg, m.at(i, col), term, where);
                    }
                }
            }
            diffs.emplace(k, std::move(m));
        }
    }
    return ProjComplex(std::move(comps), std::move(diffs));
}

inline Json to_json(const MonomialAlgebra& alg, const ProjComplex& c) {
    Json j;
    j["degrees"] = Json::object();
    for (const auto& [k, vs] : c.components()) {
        Json list = Json::array();
        for (std::size_t v : vs) list.push_back(alg.quiver().vertices()[v]);
        j["degrees"][std::to_string(k)] = std::move(list);
    }
    j["differentials"] = Json::object();
    for (const auto& [k, d] : c.differentials()) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < d.rows; ++i) {
            Json row = Json::array();
            for (std::size_t col = 0; col < d.cols; ++col) {
                Json terms = Json::array();
                const AlgElem& e = d.at(i, col);
                for (std::size_t b = 0; b < e.size(); ++b) {
                    if (e[b] != 0) terms.push_back(Json::array({alg.path_id(b), e[b]}));
                }
                row.push_back(std::move(terms));
            }
            rows.push_back(std::move(row));
        }
        j["differentials"][std::to_string(k)] = std::move(rows);
    }
    return j;
}

/// Parses "ORBIT@OFFSET"; a bare orbit id means offset 0.
inline ObjRef parse_obj_ref(const ShiftGraph& g, std::string_view text) {
    const auto at = text.rfind('@');
    if (at == std::string_view::npos) return {g.orbit_index(text), 0};
    const std::string offset(text.substr(at + 1));
    try {
        std::size_t used = 0;
        const long long v = std::stoll(offset, &used);
        if (used != offset.size()) throw std::invalid_argument(offset);
        return {g.orbit_index(text.substr(0, at)), v};
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::InvalidInput, "bad object reference '" + std::string(text) + "', expected ORBIT@OFFSET");
    } catch (const std::out_of_range&) {
        throw Error(ErrorKind::InvalidInput, "offset out of range in '" + std::string(text) + "'");
    }
}

inline std::string format_obj_ref(const ShiftGraph& g, const ObjRef& r) {
    return g.orbit(r.orbit).id + "@" + std::to_string(r.offset);
}

} // namespace derhed
