#pragma once

// Independent reference computations used by the tests.  They work on plain
// label lists and share no code with the library beyond the complex types
// used to read inputs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "holonomy/complex.hpp"

namespace oracle {

using Labels = std::vector<std::string>;
using Perm = std::vector<std::uint8_t>;

struct FacetGraph {
    std::vector<Labels> facets;                  // vertex lists: sorted sets or cube corner arrays
    std::vector<std::vector<std::size_t>> nbrs;  // facets sharing a ridge
    bool cubes = false;
};

inline std::size_t shared(const Labels& a, const Labels& b) {
    std::size_t n = 0;
    for (const auto& x : a) n += std::count(b.begin(), b.end(), x) > 0;
    return n;
}

inline FacetGraph facet_graph(const holonomy::SimplicialComplex& k) {
    FacetGraph g;
    for (const auto& f : k.facets()) g.facets.push_back(k.labels_of(f));
    g.nbrs.resize(g.facets.size());
    for (std::size_t a = 0; a < g.facets.size(); ++a)
        for (std::size_t b = 0; b < g.facets.size(); ++b)
            if (a != b && shared(g.facets[a], g.facets[b]) + 1 == g.facets[a].size()) g.nbrs[a].push_back(b);
    return g;
}

inline FacetGraph facet_graph(const holonomy::CubicalComplex& k) {
    FacetGraph g;
    g.cubes = true;
    for (const auto& c : k.cubes()) g.facets.push_back(k.labels_of(c.corners));
    g.nbrs.resize(g.facets.size());
    for (std::size_t a = 0; a < g.facets.size(); ++a)
        for (std::size_t b = 0; b < g.facets.size(); ++b)
            if (a != b && 2 * shared(g.facets[a], g.facets[b]) == g.facets[a].size()) g.nbrs[a].push_back(b);
    return g;
}

inline std::size_t position(const Labels& f, const std::string& x) {
    return static_cast<std::size_t>(std::find(f.begin(), f.end(), x) - f.begin());
}

/// Position map of the flip a -> b.
inline Perm flip(const FacetGraph& g, std::size_t a, std::size_t b) {
    const Labels& A = g.facets[a];
    const Labels& B = g.facets[b];
    Perm p(A.size());
    if (!g.cubes) {
        std::size_t fresh = 0;
        for (std::size_t j = 0; j < B.size(); ++j)
            if (std::find(A.begin(), A.end(), B[j]) == A.end()) fresh = j;
        for (std::size_t i = 0; i < A.size(); ++i) {
            const std::size_t j = position(B, A[i]);
            p[i] = static_cast<std::uint8_t>(j < B.size() ? j : fresh);
        }
        return p;
    }
    // A corner off the ridge goes to the B-corner adjacent to its ridge partner.
    auto adjacent = [](std::size_t x, std::size_t y) {
        const std::size_t d = x ^ y;
        return d != 0 && (d & (d - 1)) == 0;
    };
    for (std::size_t i = 0; i < A.size(); ++i) {
        const std::size_t j = position(B, A[i]);
        if (j < B.size()) {
            p[i] = static_cast<std::uint8_t>(j);
            continue;
        }
        for (std::size_t r = 0; r < A.size(); ++r) {
            const std::size_t rb = position(B, A[r]);
            if (rb == B.size() || !adjacent(i, r)) continue;
            for (std::size_t t = 0; t < B.size(); ++t)
                if (adjacent(rb, t) && std::find(A.begin(), A.end(), B[t]) == A.end())
                    p[i] = static_cast<std::uint8_t>(t);
        }
    }
    return p;
}

inline Perm then(const Perm& first, const Perm& second) {
    Perm r(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) r[i] = second[first[i]];
    return r;
}

/// Holonomy group at `base` as the set of permutations with which the
/// (facet, permutation) state space returns to the base.
inline std::set<Perm> holonomy(const FacetGraph& g, std::size_t base) {
    Perm id(g.facets[base].size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<std::uint8_t>(i);
    std::set<std::pair<std::size_t, Perm>> seen{{base, id}};
    std::queue<std::pair<std::size_t, Perm>> todo;
    todo.push({base, id});
    std::set<Perm> out;
    while (!todo.empty()) {
        auto [f, p] = todo.front();
        todo.pop();
        if (f == base) out.insert(p);
        for (std::size_t n : g.nbrs[f]) {
            std::pair<std::size_t, Perm> next{n, then(p, flip(g, f, n))};
            if (seen.insert(next).second) todo.push(next);
        }
    }
    return out;
}

/// Parity of a corner map of a cube: number of axes whose direction is reversed.
inline int cube_parity(const Perm& p) {
    int reversed = 0;
    const std::size_t k = static_cast<std::size_t>(__builtin_ctzll(p.size()));
    for (std::size_t j = 0; j < k; ++j) {
        // Axis j maps to the axis of p[1<<j] ^ p[0]; it is reversed when p[0]
        // has that bit set.
        const std::size_t axis = p[std::size_t{1} << j] ^ p[0];
        reversed += (p[0] & axis) != 0;
    }
    return reversed % 2;
}

/// Minimum number of flips of a closed chain with odd holonomy, over all
/// base facets.  Breadth-first over (facet, accumulated corner map).
inline std::optional<std::size_t> odd_chain_length(const FacetGraph& g) {
    std::optional<std::size_t> best;
    for (std::size_t base = 0; base < g.facets.size(); ++base) {
        Perm id(g.facets[base].size());
        for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<std::uint8_t>(i);
        std::map<std::pair<std::size_t, Perm>, std::size_t> dist{{{base, id}, 0}};
        std::queue<std::pair<std::size_t, Perm>> todo;
        todo.push({base, id});
        while (!todo.empty()) {
            auto [f, p] = todo.front();
            todo.pop();
            const std::size_t d = dist[{f, p}];
            if (best && d >= *best) break;
            for (std::size_t n : g.nbrs[f]) {
                Perm q = then(p, flip(g, f, n));
                if (n == base && cube_parity(q) == 1) {
                    if (!best || d + 1 < *best) best = d + 1;
                }
                if (dist.emplace(std::pair{n, q}, d + 1).second) todo.push({n, q});
            }
        }
    }
    return best;
}

/// Brute-force Hom complex cells: every map from K-vertices to nonempty
/// subsets of L-vertices, disjoint along edges, whose transversals over each
/// facet span faces of L.
inline std::size_t hom_cells(const holonomy::SimplicialComplex& k, const holonomy::SimplicialComplex& l) {
    const std::size_t n = k.num_vertices();
    const std::size_t m = l.num_vertices();
    std::vector<std::uint32_t> blocks(n, 1);
    std::size_t count = 0;
    auto valid = [&] {
        for (const auto& f : k.facets()) {
            for (std::size_t i = 0; i < f.size(); ++i)
                for (std::size_t j = i + 1; j < f.size(); ++j)
                    if (blocks[f[i]] & blocks[f[j]]) return false;
            // Enumerate transversals by odometer.
            std::vector<std::uint32_t> choice(f.size(), 0);
            std::vector<std::vector<holonomy::Vertex>> opts;
            for (auto v : f) {
                std::vector<holonomy::Vertex> o;
                for (holonomy::Vertex w = 0; w < m; ++w)
                    if (blocks[v] >> w & 1u) o.push_back(w);
                opts.push_back(o);
            }
            for (;;) {
                holonomy::VertexSet s;
                for (std::size_t i = 0; i < f.size(); ++i) s.push_back(opts[i][choice[i]]);
                std::sort(s.begin(), s.end());
                s.erase(std::unique(s.begin(), s.end()), s.end());
                if (!l.contains(s)) return false;
                std::size_t i = 0;
                while (i < f.size() && ++choice[i] == opts[i].size()) choice[i++] = 0;
                if (i == f.size()) break;
            }
        }
        return true;
    };
    for (;;) {
        if (valid()) ++count;
        std::size_t i = 0;
        while (i < n && ++blocks[i] == (1u << m)) blocks[i++] = 1;
        if (i == n) break;
    }
    return count;
}

/// Chromatic number by trying every colouring with c colours, c = 1, 2, ...
inline int chromatic_number(const holonomy::Graph& g) {
    const std::size_t n = g.size();
    if (n == 0) return 0;
    for (int c = 1;; ++c) {
        std::vector<int> col(n, 0);
        for (;;) {
            bool ok = true;
            for (holonomy::Vertex a = 0; a < n && ok; ++a)
                for (holonomy::Vertex b : g.adjacency[a])
                    if (a < b && col[a] == col[b]) ok = false;
            if (ok) return c;
            std::size_t i = 0;
            while (i < n && ++col[i] == c) col[i++] = 0;
            if (i == n) break;
        }
    }
}

}  // namespace oracle
