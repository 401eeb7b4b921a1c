#pragma once

// JSON forms of complexes, maps and reports.
//
//   {"type":"simplicial","facets":[["a","b","c"],...]}
//   {"type":"cubical","dim":k,"cubes":[["v0",...,"v{2^k-1}"],...]}
//   {"vertex_map":{"a":"x",...}}
//
// Vertex labels may be given as strings or integers.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "holonomy/complex.hpp"
#include "holonomy/cubical.hpp"
#include "holonomy/groupoid.hpp"
#include "holonomy/homology.hpp"

namespace holonomy::io {

using nlohmann::json;

/// Throws ValidationError on malformed input.
Complex parse_complex(const json& j);
json to_json(const SimplicialComplex& k);
json to_json(const CubicalComplex& k);
json to_json(const Complex& k);

/// Accepts {"vertex_map":{...}} or a bare object.
std::map<std::string, std::string> parse_vertex_map(const json& j);

/// Reads a JSON document from a file; ValidationError if unreadable.
json read_file(const std::string& path);

/// Complex from a file path, or from "gen:<family>:<key>=<int>,..." using the
/// standard families (the seed feeds random families).
Complex load_complex(const std::string& source, std::uint64_t seed = 0);

/// "a,b,c" -> {"a","b","c"}.
std::vector<std::string> split_labels(const std::string& text, char sep = ',');

json betti_json(const BettiProfile& b);
json curvature_json(const RidgeGraph& g, const CurvatureReport& r);
json holonomy_json(const RidgeGraph& g, const HolonomyGroup& h);

}  // namespace holonomy::io
