#include "holonomy/io.hpp"

#include <fstream>
#include <sstream>

#include "holonomy/generate.hpp"

namespace holonomy::io {

namespace {

std::string label_of(const json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ValidationError(where + ": vertex labels must be strings or integers");
}

std::vector<std::vector<std::string>> cells_of(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) throw ValidationError(std::string("missing \"") + key + "\" array");
    std::vector<std::vector<std::string>> out;
    std::size_t i = 0;
    for (const auto& cell : j[key]) {
        const std::string where = std::string(key) + "[" + std::to_string(i++) + "]";
        if (!cell.is_array()) throw ValidationError(where + " is not an array");
        std::vector<std::string> labels;
        for (const auto& v : cell) labels.push_back(label_of(v, where));
        out.push_back(std::move(labels));
    }
    return out;
}

}  // namespace

Complex parse_complex(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ValidationError("complex must be an object with a \"type\" field");
    const auto type = j["type"].get<std::string>();
    if (type == "simplicial") return SimplicialComplex::from_facets(cells_of(j, "facets"));
    if (type == "cubical") {
        auto cubes = cells_of(j, "cubes");
        CubicalComplex k = CubicalComplex::from_cubes(cubes);
        if (j.contains("dim") && (!j["dim"].is_number_integer() || j["dim"].get<int>() != k.dim()))
            throw ValidationError("declared \"dim\" does not match the cubes");
        return k;
    }
    throw ValidationError("unknown complex type '" + type + "'");
}

json to_json(const SimplicialComplex& k) {
    json facets = json::array();
    for (const auto& f : k.facets()) facets.push_back(k.labels_of(f));
    return {{"type", "simplicial"}, {"facets", facets}};
}

json to_json(const CubicalComplex& k) {
    json cubes = json::array();
    for (const auto& c : k.cubes()) cubes.push_back(k.labels_of(c.corners));
    return {{"type", "cubical"}, {"dim", k.dim()}, {"cubes", cubes}};
}

json to_json(const Complex& k) {
    return std::visit([](const auto& c) { return to_json(c); }, k);
}

std::map<std::string, std::string> parse_vertex_map(const json& j) {
    const json& m = j.is_object() && j.contains("vertex_map") ? j["vertex_map"] : j;
    if (!m.is_object()) throw ValidationError("vertex map must be a JSON object");
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : m.items()) out.emplace(k, label_of(v, "vertex_map." + k));
    return out;
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

std::vector<std::string> split_labels(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

Complex load_complex(const std::string& source, std::uint64_t seed) {
    if (source.rfind("gen:", 0) != 0) return parse_complex(read_file(source));
    const auto rest = source.substr(4);
    const auto colon = rest.find(':');
    const std::string family = rest.substr(0, colon);
    std::map<std::string, int> params;
    if (colon != std::string::npos)
        for (const auto& kv : split_labels(rest.substr(colon + 1))) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw ValidationError("generator parameter '" + kv + "' needs key=value");
            try {
                params[kv.substr(0, eq)] = std::stoi(kv.substr(eq + 1));
            } catch (const std::exception&) {
                throw ValidationError("generator parameter '" + kv + "' is not an integer");
            }
        }
    if (!params.count("seed")) params["seed"] = static_cast<int>(seed & 0x7fffffff);
    return generate::by_name(family, params);
}

json betti_json(const BettiProfile& b) {
    json torsion = json::array();
    for (const auto& t : b.torsion) {
        json row = json::array();
        for (const auto& x : t) row.push_back(x.get_si());
        torsion.push_back(row);
    }
    return {{"empty", b.empty}, {"reduced_betti", b.reduced_betti}, {"torsion", torsion}};
}

json curvature_json(const RidgeGraph& g, const CurvatureReport& r) {
    json witness = json::array();
    for (std::size_t f : r.witness) witness.push_back(g.labels_of(f));
    json z = r.z_chain ? json(*r.z_chain) : json("inf");
    return {{"I", r.invariant},
            {"Z_chain", z},
            {"CC", r.cc_text()},
            {"witness", witness},
            {"witness_distinct_cubes", r.witness_distinct}};
}

json holonomy_json(const RidgeGraph& g, const HolonomyGroup& h) {
    const GroupSummary s = h.summary();
    json gens = json::array();
    for (const auto& p : h.generators) gens.push_back(vertex_map(g, p));
    json out = {{"base", g.labels_of(h.base)},
                {"order", s.order},
                {"element_orders", s.element_orders},
                {"abelian", s.abelian},
                {"generators", gens}};
    if (g.kind == CellKind::cube) {
        json parities = json::array();
        for (const auto& p : h.generators) parities.push_back(parity(signed_matrix(g, p)));
        out["generator_parities"] = parities;
    }
    return out;
}

}  // namespace holonomy::io
