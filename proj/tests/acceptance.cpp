// Acceptance run: one PASS/FAIL line per criterion, with its runtime limit.
//
// Usage: acceptance [--expect-fail N]...
// Exit status is 0 when the set of failing criteria equals the expected set.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <gmpxx.h>

#include "holonomy/coloring.hpp"
#include "holonomy/cubical.hpp"
#include "holonomy/generate.hpp"
#include "holonomy/groupoid.hpp"
#include "holonomy/hom.hpp"
#include "holonomy/homology.hpp"
#include "oracles.hpp"

using namespace holonomy;
namespace gen = holonomy::generate;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Check {
    std::ostringstream note;
    bool ok = true;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) note << "failed: " << what << "; ";
        ok = ok && condition;
    }
    Outcome done() { return {ok, note.str()}; }
};

std::string betti_text(const BettiProfile& b) {
    if (b.empty) return "empty";
    std::string s = "[";
    for (std::size_t i = 0; i < b.reduced_betti.size(); ++i) s += (i ? "," : "") + std::to_string(b.reduced_betti[i]);
    return s + "]";
}

bool is_sphere(const BettiProfile& b, int n) {
    if (b.empty || !b.torsion_free()) return false;
    for (std::size_t q = 0; q < b.reduced_betti.size(); ++q)
        if (b.reduced_betti[q] != (static_cast<int>(q) == n ? 1 : 0)) return false;
    return static_cast<int>(b.reduced_betti.size()) > n;
}

CubicalComplex random_connected(std::mt19937_64& rng, int d, int k) {
    const auto whole = gen::cube_skeleton(d, k);
    const auto o = oracle::facet_graph(whole);
    const std::size_t target = 1 + rng() % o.facets.size();
    std::set<std::size_t> chosen{rng() % o.facets.size()};
    std::vector<std::size_t> frontier(o.nbrs[*chosen.begin()]);
    while (chosen.size() < target && !frontier.empty()) {
        const std::size_t pick = rng() % frontier.size();
        const std::size_t f = frontier[pick];
        frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(pick));
        if (!chosen.insert(f).second) continue;
        for (std::size_t n : o.nbrs[f])
            if (!chosen.count(n)) frontier.push_back(n);
    }
    std::vector<std::vector<std::string>> cubes;
    for (std::size_t f : chosen) cubes.push_back(o.facets[f]);
    return CubicalComplex::from_cubes(cubes);
}

// 1
Outcome cube_holonomy() {
    Check c;
    const auto k = gen::cube_skeleton(3, 2);
    const auto g = ridge_graph(k);
    const auto h = holonomy_group(g, 0);
    const auto s = h.summary();
    c.require(s.order == 4, "order 4");
    c.require(s.abelian, "abelian");
    c.require(s.element_orders == std::vector<int>{1, 2, 2, 2}, "element orders 1,2,2,2");
    for (const auto& e : h.elements) c.require(parity(signed_matrix(e)) == 0, "element in the parity-0 subgroup");
    const auto reference = oracle::holonomy(oracle::facet_graph(k), 0);
    c.require(reference == std::set<Perm>(h.elements.begin(), h.elements.end()), "matches state-space oracle");
    c.note << "order " << s.order << ", orders 1,2,2,2, abelian, all parity 0";
    return c.done();
}

// 2
Outcome even_holonomy_suite() {
    Check c;
    std::mt19937_64 rng(2024);
    std::size_t generators = 0, odd = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 2 + trial % 4;
        const int k = 1 + (trial / 4) % std::min(3, d - 1);
        const auto sub = random_connected(rng, d, k);
        const auto g = ridge_graph(sub);
        const auto h = holonomy_group(g, 0);
        for (const auto& p : h.generators) {
            ++generators;
            odd += parity(signed_matrix(g, p)) != 0;
        }
        for (const auto& e : oracle::holonomy(oracle::facet_graph(sub), 0))
            c.require(oracle::cube_parity(e) == 0, "oracle group elements are even");
    }
    c.require(odd == 0, "all generators even");
    c.note << "200 subcomplexes, " << generators << " generators, " << odd << " odd";
    return c.done();
}

// 3
Outcome invariant_I_values() {
    Check c;
    for (int k = 1; k <= 3; ++k) c.require(invariant_I(gen::cube_skeleton(k + 1, k)) == 0, "I of cube skeleton is 0");
    for (int m = 3; m <= 8; ++m) {
        const auto ring = gen::square_ring(m, false);
        const int brute = oracle::odd_chain_length(oracle::facet_graph(ring)).has_value() ? 1 : 0;
        c.require(brute == m % 2, "oracle gives m mod 2");
        c.require(invariant_I(ring) == brute, "I(ring) matches oracle");
    }
    c.note << "I(cube skeleta)=0, I(ring_m)=m mod 2 for m=3..8";
    return c.done();
}

// 4
Outcome embedding_obstruction() {
    Check c;
    const auto a = embed_obstruction(gen::square_ring(5, false), gen::cube_skeleton(6, 2));
    const auto b = embed_obstruction(gen::cube_skeleton(3, 2), gen::cube_skeleton(4, 2));
    c.require(a.obstructed, "ring5 -> {I^6}_(2) obstructed");
    c.require(!b.obstructed, "{I^3}_(2) -> {I^4}_(2) inconclusive");
    c.note << "CC(ring5)=" << a.source.cc_text() << " vs " << a.target.cc_text() << ": "
           << (a.obstructed ? "obstructed" : "inconclusive") << "; cube skeleta: "
           << (b.obstructed ? "obstructed" : "inconclusive");
    return c.done();
}

// 5
Outcome bubble_invariance() {
    Check c;
    std::mt19937_64 rng(55);
    auto label = [](char side, int i) { return std::string(1, side) + std::to_string(i); };
    int moves = 0;
    for (int trial = 0; moves < 20; ++trial) {
        const int m = 3 + trial % 6;
        const bool twist = (trial / 6) % 2;
        const auto ring = gen::square_ring(m, twist);
        const int i = static_cast<int>(rng() % static_cast<unsigned>(m - 1));
        std::vector<std::vector<std::string>> ball{{label('a', i), label('a', i + 1), label('b', i), label('b', i + 1)}};
        std::map<std::string, unsigned> embed;
        if (m >= 4 && i + 2 < m && trial % 3 == 0) {
            // Two adjacent squares folded onto two adjacent facets of I^3.
            ball.push_back({label('a', i + 1), label('a', i + 2), label('b', i + 1), label('b', i + 2)});
            embed = {{label('a', i), 0}, {label('a', i + 1), 1}, {label('b', i), 2},
                     {label('b', i + 1), 3}, {label('a', i + 2), 5}, {label('b', i + 2), 7}};
        } else {
            const unsigned axis = static_cast<unsigned>(rng() % 3), side = static_cast<unsigned>(rng() % 2);
            const unsigned p = axis == 0 ? 1 : 0, q = axis == 2 ? 1 : 2;
            const bool swap = rng() % 2;
            for (unsigned x = 0; x < 4; ++x) {
                unsigned u = x & 1u, v = x >> 1;
                if (swap) std::swap(u, v);
                embed[ball[0][x]] = (side << axis) | (u << p) | (v << q);
            }
        }
        const auto after = bubble_move(ring, ball, embed);
        const int before_i = invariant_I(ring), after_i = invariant_I(after);
        const int after_brute = oracle::odd_chain_length(oracle::facet_graph(after)).has_value() ? 1 : 0;
        c.require(before_i == after_i, "I unchanged");
        c.require(after_i == after_brute, "I after matches oracle");
        ++moves;
    }
    c.note << moves << " moves on rings m=3..8, I unchanged";
    return c.done();
}

// 6
Outcome sphere_claims() {
    Check c;
    for (int n = 3; n <= 5; ++n) {
        const auto b = betti(hom_complex(gen::complete_graph(2), gen::complete_graph(n)));
        c.require(is_sphere(b, n - 2), "Hom(K2,K" + std::to_string(n) + ") ~ S^" + std::to_string(n - 2));
    }
    c.note << "Hom(K2,Kn) n=3..5 spheres; ";
    // Delta^{[j]} is the simplex on j vertices, i.e. simplex(j - 1).
    std::string literal = "Hom(D[2],D[m+2]) m=1..3: ";
    std::string shifted = "Hom(D[2],D[m+1]) m=1..3: ";
    for (int m = 1; m <= 3; ++m) {
        const auto b = betti(hom_complex(gen::simplex(1), gen::simplex(m + 1)));
        literal += betti_text(b) + (m < 3 ? " " : "");
        c.require(is_sphere(b, m - 1), "Hom(D[2],D[" + std::to_string(m + 2) + "]) ~ S^" + std::to_string(m - 1) +
                                           " (computed " + betti_text(b) + ", a homology S^" + std::to_string(m) + ")");
        const auto s = betti(hom_complex(gen::simplex(1), gen::simplex(m)));
        shifted += std::string(is_sphere(s, m - 1) ? "S^" + std::to_string(m - 1) : betti_text(s)) + (m < 3 ? " " : "");
    }
    c.note << literal << "; " << shifted << "; ";
    for (const auto& [d, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
        const auto b = betti(hom_complex(gen::complete_graph(d + 1), gen::complete_graph(m + d + 1)));
        c.require(!b.empty && b.support() == std::vector<int>{m}, "Hom(K_{d+1},K_{m+d+1}) concentrated in degree m");
        c.note << "Hom(K" << d + 1 << ",K" << m + d + 1 << ")=" << betti_text(b) << " ";
    }
    return c.done();
}

// Chain-level oracle for criterion 7.  Cells of Hom(K2, Kn) are pairs (A, B)
// of disjoint nonempty sets; the cell is the product simplex A x B, oriented
// by increasing vertex order in each factor.
struct PairCell {
    Block a, b;
};

long transport_sign_by_chains(const HomComplex& h) {
    const int top = h.dim();
    std::vector<PairCell> tops, lowers;
    for (const auto& cell : h.cells()) {
        if (cell.dim == top) tops.push_back({cell.eta[0], cell.eta[1]});
        if (cell.dim == top - 1) lowers.push_back({cell.eta[0], cell.eta[1]});
    }
    auto index_of = [&](Block a, Block b) {
        for (std::size_t i = 0; i < lowers.size(); ++i)
            if (lowers[i].a == a && lowers[i].b == b) return i;
        return lowers.size();
    };
    // d(A x B) = dA x B + (-1)^{dim A} A x dB.
    std::vector<std::vector<mpq_class>> d(lowers.size(), std::vector<mpq_class>(tops.size(), 0));
    for (std::size_t j = 0; j < tops.size(); ++j) {
        const auto [a, b] = tops[j];
        const int dim_a = std::popcount(a) - 1;
        int pos = 0;
        for (Block x = a; x; x &= x - 1, ++pos)
            if (std::popcount(a) > 1) d[index_of(a & ~(x & -x), b)][j] += pos % 2 ? -1 : 1;
        pos = 0;
        for (Block x = b; x; x &= x - 1, ++pos)
            if (std::popcount(b) > 1) d[index_of(a, b & ~(x & -x))][j] += ((dim_a + pos) % 2) ? -1 : 1;
    }
    // Kernel of d (top homology, since nothing lies above): reduced row echelon form.
    const std::size_t rows = d.size(), cols = tops.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && d[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(d[p], d[r]);
        const mpq_class lead = d[r][col];
        for (auto& x : d[r]) x /= lead;
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && d[i][col] != 0) {
                const mpq_class f = d[i][col];
                for (std::size_t k = 0; k < cols; ++k) d[i][k] -= f * d[r][k];
            }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t col = 0; col < cols; ++col)
        if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end()) free_cols.push_back(col);
    if (free_cols.size() != 1) return 0;
    std::vector<mpq_class> z(cols, 0);
    z[free_cols[0]] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) z[pivot_col[i]] = -d[i][free_cols[0]];
    // Swapping the two factors: (A, B) -> (B, A) with sign (-1)^{dim A dim B}.
    std::vector<mpq_class> image(cols, 0);
    for (std::size_t j = 0; j < cols; ++j) {
        const auto [a, b] = tops[j];
        std::size_t target = cols;
        for (std::size_t t = 0; t < cols; ++t)
            if (tops[t].a == b && tops[t].b == a) target = t;
        const int s = ((std::popcount(a) - 1) * (std::popcount(b) - 1)) % 2 ? -1 : 1;
        image[target] += s * z[j];
    }
    if (image == z) return 1;
    for (auto& x : image) x = -x;
    return image == z ? -1 : 0;
}

std::vector<std::size_t> c5_loop(const RidgeGraph& g) {
    std::vector<std::size_t> loop{0};
    std::size_t prev = g.size(), cur = 0;
    do {
        std::size_t next = g.size();
        for (const auto& e : g.adjacency[cur])
            if (e.to != prev) {
                next = e.to;
                break;
            }
        prev = cur;
        cur = next;
        loop.push_back(cur);
    } while (cur != 0);
    return loop;
}

// 7
Outcome transport_degrees() {
    Check c;
    const auto g = ridge_graph(gen::cycle(5));
    const auto loop = c5_loop(g);
    c.require(loop.size() == 6, "C5 loop of 5 flips");
    for (int n : {4, 3}) {
        const auto fibre = hom_complex(facet_simplex(g, 0), gen::complete_graph(n));
        const auto m = transport(g, loop, fibre, fibre);
        // The loop projectivity swaps the two vertices of the base edge.
        for (std::size_t i = 0; i < fibre.size(); ++i) {
            const auto& eta = fibre.cells()[i].eta;
            c.require(fibre.cells()[m.image[i]].eta == std::vector<Block>{eta[1], eta[0]}, "transport swaps blocks");
        }
        const long chain_sign = transport_sign_by_chains(fibre);
        const auto mat = induced_homology_map(fibre, fibre, m, n - 2);
        const long expected = n % 2 ? 1 : -1;
        c.require(chain_sign == expected, "chain-level sign");
        c.require(mat == IntMatrix{{expected}}, "library induced map");
        c.note << "Hom(K2,K" << n << "): H_" << n - 2 << " acts by " << chain_sign << " (chains), "
               << (mat.size() == 1 && mat[0].size() == 1 ? mat[0][0].get_str() : "?") << " (library); ";
    }
    return c.done();
}

// 8
Outcome transport_coherence() {
    Check c;
    std::mt19937_64 rng(88);
    const auto l = gen::complete_graph(4);
    std::size_t compared = 0;
    for (const auto& k : {gen::simplex_boundary(3), gen::random_tree_like(6, 2, 3), gen::cycle(5)}) {
        const auto g = ridge_graph(k);
        std::vector<HomComplex> fibres;
        for (std::size_t f = 0; f < g.size(); ++f) fibres.push_back(hom_complex(facet_simplex(g, f), l));
        std::map<std::tuple<std::size_t, std::size_t, Perm>, CellMap> seen;
        for (int trial = 0; trial < 400; ++trial) {
            std::vector<std::size_t> path{rng() % g.size()};
            const std::size_t steps = rng() % 9;
            for (std::size_t s = 0; s < steps; ++s) {
                const auto& adj = g.adjacency[path.back()];
                if (adj.empty()) break;
                path.push_back(adj[rng() % adj.size()].to);
            }
            const auto p = compose_path(g, path);
            const auto m = transport(g, path, fibres[path.back()], fibres[path.front()]);
            auto [it, fresh] = seen.emplace(std::tuple{path.front(), path.back(), p.image}, m);
            if (!fresh) {
                ++compared;
                c.require(it->second == m, "equal projectivities give equal transports");
            }
        }
    }
    // Functoriality on random composable pairs.
    auto after = [](const VertexMap& first, const VertexMap& second) {
        VertexMap r;
        for (Vertex v : first.image) r.image.push_back(second.image[v]);
        return r;
    };
    auto pick = [&](const SimplicialComplex& a, const SimplicialComplex& b) {
        const auto all = hom0(a, b);
        return all[rng() % all.size()];
    };
    const auto k1 = gen::complete_graph(4), k2 = gen::complete_graph(4);
    const auto l2 = gen::complete_graph(5), l3 = gen::complete_graph(5);
    int pairs = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto k = trial % 2 ? gen::cycle(4) : gen::path(4);
        const auto f = pick(k, k1), f1 = pick(k1, k2);
        const auto h_k = hom_complex(k, l), h_k1 = hom_complex(k1, l), h_k2 = hom_complex(k2, l);
        c.require(compose(induced_precompose(h_k2, h_k1, f1), induced_precompose(h_k1, h_k, f)) ==
                      induced_precompose(h_k2, h_k, after(f, f1)),
                  "precomposition is functorial");
        const auto g = pick(l, l2), g1 = pick(l2, l3);
        const auto h_l2 = hom_complex(k, l2), h_l3 = hom_complex(k, l3);
        c.require(compose(induced_postcompose(h_k, h_l2, g), induced_postcompose(h_l2, h_l3, g1)) ==
                      induced_postcompose(h_k, h_l3, after(g, g1)),
                  "postcomposition is functorial");
        ++pairs;
    }
    c.note << compared << " repeated projectivities compared, " << pairs << " pre/post pairs";
    return c.done();
}

// 9
Outcome collapse_suite() {
    Check c;
    const std::vector<std::pair<std::string, SimplicialComplex>> targets{{"K4", gen::complete_graph(4)},
                                                                         {"D3", gen::simplex(3)}};
    std::map<std::string, BettiProfile> reference;
    for (const auto& [name, l] : targets) reference[name] = betti(hom_complex(gen::simplex(2), l));
    std::size_t largest = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto t = gen::random_tree_like(2 + static_cast<int>(seed % 7), 2, seed);
        c.require(vertex_collapsible(t).collapsible, "tree-like complex is vertex collapsible");
        for (const auto& [name, l] : targets) {
            const auto h = hom_complex(t, l);
            largest = std::max(largest, h.size());
            c.require(betti(h) == reference[name], "Hom(T," + name + ") matches Hom(D2," + name + ")");
        }
    }
    c.note << "20 complexes; Hom(D2,K4)=" << betti_text(reference["K4"]) << " (no cells), Hom(D2,D3)="
           << betti_text(reference["D3"]) << "; largest Hom " << largest << " cells";
    return c.done();
}

bool bipartite(const Graph& g) {
    std::vector<int> side(g.size(), -1);
    for (Vertex s = 0; s < g.size(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.adjacency[v]) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool cells_connected(const HomComplex& h) {
    if (h.empty()) return false;
    std::vector<std::size_t> parent(h.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    const auto poset = h.poset();
    for (std::size_t x = 0; x < h.size(); ++x)
        for (std::size_t y : poset.covers[x]) parent[root(x)] = root(y);
    for (std::size_t x = 0; x < h.size(); ++x)
        if (root(x) != root(0)) return false;
    return true;
}

// 10
Outcome colouring() {
    Check c;
    for (int n = 2; n <= 6; ++n) c.require(chi(gen::complete_graph(n)).value == n, "chi(K_n) = n");
    c.require(chi(gen::simplex(0)).value == 1, "chi(K_1) = 1");
    c.require(chi(gen::cycle(5)).value == 3, "chi(C5) = 3");
    std::mt19937_64 rng(1010);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::vector<std::string>> facets;
        const int n = 6 + trial % 4;
        for (int f = 0; f < 4 + trial % 5; ++f) {
            std::set<int> s;
            const int size = 2 + static_cast<int>(rng() % 3);
            while (static_cast<int>(s.size()) < size) s.insert(static_cast<int>(rng() % static_cast<unsigned>(n)));
            std::vector<std::string> labels;
            for (int v : s) labels.push_back(std::to_string(v));
            facets.push_back(labels);
        }
        const auto k = SimplicialComplex::from_facets(facets);
        const int value = chi(k).value;
        c.require(value == chi(skeleton(k, 1)).value, "chi(K) = chi(1-skeleton)");
        c.require(value == oracle::chromatic_number(one_skeleton_graph(k)), "matches brute-force colouring");
    }
    // Every graph on at most 6 labelled vertices.
    std::size_t graphs = 0, connected = 0, violations = 0;
    for (int n = 2; n <= 6; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) slots.push_back({a, b});
        for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
            std::vector<std::vector<std::string>> facets;
            std::vector<bool> touched(static_cast<std::size_t>(n), false);
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (mask >> i & 1u) {
                    facets.push_back({std::to_string(slots[i].first), std::to_string(slots[i].second)});
                    touched[static_cast<std::size_t>(slots[i].first)] = touched[static_cast<std::size_t>(slots[i].second)] = true;
                }
            for (int v = 0; v < n; ++v)
                if (!touched[static_cast<std::size_t>(v)]) facets.push_back({std::to_string(v)});
            const auto g = SimplicialComplex::from_facets(facets);
            ++graphs;
            const auto h = hom_complex(gen::complete_graph(2), g);
            if (!cells_connected(h)) continue;
            ++connected;
            const int value = chi(g).value;
            if (value < 3 || bipartite(one_skeleton_graph(g))) ++violations;
        }
    }
    c.require(violations == 0, "no counterexample to chi >= 3");
    c.note << "chi(K_n), chi(C5)=3, 50 random complexes; " << graphs << " graphs, " << connected
           << " with Hom(K2,G) connected, " << violations << " counterexamples";
    return c.done();
}

// 11
Outcome phi_detection() {
    Check c;
    auto reflection = [](int n, int shift) {
        VertexMap m;
        for (int i = 0; i < n; ++i) m.image.push_back(static_cast<Vertex>(((shift - i) % n + n) % n));
        return m;
    };
    const auto c5 = gen::cycle(5);
    const auto c4 = gen::cycle(4);
    const auto yes = is_phi_complex(c5, reflection(5, 0), c5.vertex_set({"2", "3"}));
    const auto no = is_phi_complex(c4, reflection(4, 1), c4.vertex_set({"0", "1"}));
    c.require(yes.is_phi, "C5 is Phi_1");
    c.require(!no.is_phi, "C4 is not Phi_1");
    // Oracle: is the swap of the edge a loop projectivity at that edge?
    const Perm swap{1, 0};
    const auto g5 = oracle::facet_graph(c5);
    const auto g4 = oracle::facet_graph(c4);
    auto index = [](const oracle::FacetGraph& g, const oracle::Labels& f) {
        return static_cast<std::size_t>(std::find(g.facets.begin(), g.facets.end(), f) - g.facets.begin());
    };
    c.require(oracle::holonomy(g5, index(g5, {"2", "3"})).count(swap) == 1, "oracle: swap is C5 holonomy");
    c.require(oracle::holonomy(g4, index(g4, {"0", "1"})).count(swap) == 0, "oracle: swap is not C4 holonomy");
    c.note << "C5: " << (yes.is_phi ? "Phi_1" : "not Phi_1") << ", C4: " << (no.is_phi ? "Phi_1" : "not Phi_1")
           << " (" << no.reason << ")";
    return c.done();
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expected_failures;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--expect-fail" && i + 1 < argc) {
            expected_failures.insert(std::atoi(argv[++i]));
        } else {
            std::cerr << "usage: acceptance [--expect-fail N]...\n";
            return 2;
        }
    }

    const std::vector<Criterion> criteria{
        {1, "holonomy of the 3-cube 2-skeleton", 1, cube_holonomy},
        {2, "even holonomy on cube skeleton subcomplexes", 30, even_holonomy_suite},
        {3, "invariant I", 5, invariant_I_values},
        {4, "curvature embedding obstruction", 1, embedding_obstruction},
        {5, "bubble invariance", 10, bubble_invariance},
        {6, "sphere claims", 120, sphere_claims},
        {7, "transport degrees on Hom(K2,Kn)", 60, transport_degrees},
        {8, "transport coherence and functoriality", 30, transport_coherence},
        {9, "collapse suite", 120, collapse_suite},
        {10, "colouring", 180, colouring},
        {11, "Phi detection", 1, phi_detection},
    };

    std::set<int> failures;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.limit_seconds) {
            o.pass = false;
            o.detail += " [over time limit]";
        }
        if (!o.pass) failures.insert(c.id);
        std::ostringstream time;
        time.precision(2);
        time << std::fixed << seconds;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " (" << time.str() << " s, limit "
                  << c.limit_seconds << " s): " << o.detail << std::endl;
    }
    if (!expected_failures.empty()) {
        std::cout << "expected failures:";
        for (int id : expected_failures) std::cout << " " << id;
        std::cout << std::endl;
    }
    return failures == expected_failures ? 0 : 1;
}
