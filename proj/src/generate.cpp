#include "holonomy/generate.hpp"

#include <bit>
#include <random>

namespace holonomy::generate {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
}

int param(const std::map<std::string, int>& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end()) throw ValidationError("missing parameter '" + name + "'");
    return it->second;
}

}  // namespace

SimplicialComplex complete_graph(int n) {
    require(n >= 1, "complete_graph needs n >= 1");
    if (n == 1) return SimplicialComplex::from_facets({{"1"}});
    std::vector<std::vector<std::string>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.push_back({std::to_string(i), std::to_string(j)});
    return SimplicialComplex::from_facets(edges);
}

SimplicialComplex cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<std::vector<std::string>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({std::to_string(i), std::to_string((i + 1) % n)});
    return SimplicialComplex::from_facets(edges);
}

SimplicialComplex path(int m) {
    require(m >= 2, "path needs m >= 2");
    std::vector<std::vector<std::string>> edges;
    for (int i = 0; i + 1 < m; ++i) edges.push_back({std::to_string(i), std::to_string(i + 1)});
    return SimplicialComplex::from_facets(edges);
}

SimplicialComplex simplex(int d) {
    require(d >= 0, "simplex needs d >= 0");
    std::vector<std::string> facet;
    for (int i = 1; i <= d + 1; ++i) facet.push_back(std::to_string(i));
    return SimplicialComplex::from_facets({facet});
}

SimplicialComplex simplex_boundary(int d) {
    require(d >= 1, "simplex boundary needs d >= 1");
    std::vector<std::vector<std::string>> facets;
    for (int skip = 1; skip <= d + 1; ++skip) {
        std::vector<std::string> f;
        for (int i = 1; i <= d + 1; ++i)
            if (i != skip) f.push_back(std::to_string(i));
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex clique_complex(const SimplicialComplex& g) {
    if (g.empty()) return {};
    auto cliques = maximal_cliques(one_skeleton_graph(g));
    return SimplicialComplex::from_indexed(g.vertices().labels(),
                                           {cliques.begin(), cliques.end()});
}

CubicalComplex cube_skeleton(int d, int k) {
    require(d >= 1 && d <= 10, "cube_skeleton needs 1 <= d <= 10");
    require(k >= 0 && k <= d, "cube_skeleton needs 0 <= k <= d");
    std::vector<std::string> labels;
    for (int i = 0; i < (1 << d); ++i) labels.push_back(std::to_string(i));
    Cube whole;
    whole.dim = d;
    for (int i = 0; i < (1 << d); ++i) whole.corners.push_back(static_cast<Vertex>(i));
    const unsigned full = (1u << d) - 1;
    std::vector<std::vector<Vertex>> cubes;
    for (unsigned free = 0; free <= full; ++free) {
        if (std::popcount(free) != k) continue;
        const unsigned fixed_space = full & ~free;
        for (unsigned fixed = fixed_space;; fixed = (fixed - 1) & fixed_space) {
            cubes.push_back(cube_face(whole, free, fixed).corners);
            if (fixed == 0) break;
        }
    }
    return CubicalComplex::from_indexed(labels, cubes);
}

CubicalComplex square_ring(int m, bool twist) {
    require(m >= 3, "square_ring needs m >= 3");
    auto a = [](int i) { return "a" + std::to_string(i); };
    auto b = [](int i) { return "b" + std::to_string(i); };
    std::vector<std::vector<std::string>> cubes;
    for (int i = 0; i < m; ++i) {
        std::string a_next = a((i + 1) % m);
        std::string b_next = b((i + 1) % m);
        if (twist && i == m - 1) std::swap(a_next, b_next);
        // bit 0 runs along the ring, bit 1 across it
        cubes.push_back({a(i), a_next, b(i), b_next});
    }
    return CubicalComplex::from_cubes(cubes);
}

SimplicialComplex random_tree_like(int facets, int d, std::uint64_t seed) {
    require(facets >= 1 && d >= 1, "random_tree_like needs facets >= 1 and d >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Vertex>> cells(1);
    for (int i = 0; i <= d; ++i) cells[0].push_back(static_cast<Vertex>(i));
    Vertex next = static_cast<Vertex>(d + 1);
    while (static_cast<int>(cells.size()) < facets) {
        // Cone a fresh vertex over a random ridge of a random facet.
        const auto& host = cells[std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(rng)];
        const auto drop = std::uniform_int_distribution<std::size_t>(0, host.size() - 1)(rng);
        std::vector<Vertex> cell;
        for (std::size_t i = 0; i < host.size(); ++i)
            if (i != drop) cell.push_back(host[i]);
        cell.push_back(next++);
        cells.push_back(std::move(cell));
    }
    std::vector<std::string> labels;
    for (Vertex v = 0; v < next; ++v) labels.push_back(std::to_string(v));
    return SimplicialComplex::from_indexed(labels, cells);
}

Complex by_name(const std::string& family, const std::map<std::string, int>& params) {
    if (family == "complete_graph") return complete_graph(param(params, "n"));
    if (family == "cycle") return cycle(param(params, "n"));
    if (family == "path") return path(param(params, "m"));
    if (family == "simplex") return simplex(param(params, "d"));
    if (family == "cube_skeleton") return cube_skeleton(param(params, "d"), param(params, "k"));
    if (family == "square_ring") {
        auto it = params.find("twist");
        return square_ring(param(params, "m"), it != params.end() && it->second != 0);
    }
    if (family == "random_tree_like") {
        auto it = params.find("seed");
        return random_tree_like(param(params, "facets"), param(params, "d"),
                                it == params.end() ? 0 : static_cast<std::uint64_t>(it->second));
    }
    throw ValidationError("unknown family '" + family + "'");
}

}  // namespace holonomy::generate
