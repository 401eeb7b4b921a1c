#include "holonomy/coloring.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "holonomy/generate.hpp"
#include "holonomy/hom.hpp"

namespace holonomy {

namespace {

class Dsatur {
public:
    explicit Dsatur(const Graph& g) : g_(g), colour_(g.size(), 0) {}

    void solve(int lower) {
        best_.assign(g_.size(), 0);
        best_value_ = static_cast<int>(g_.size()) + 1;
        lower_ = lower;
        rec(0, 0);
    }

    int value() const { return best_value_; }
    const std::vector<int>& colouring() const { return best_; }

private:
    std::size_t pick() const {
        std::size_t best = g_.size();
        int best_sat = -1, best_deg = -1;
        for (std::size_t v = 0; v < g_.size(); ++v) {
            if (colour_[v]) continue;
            std::set<int> seen;
            int deg = 0;
            for (Vertex u : g_.adjacency[v]) {
                if (colour_[u]) seen.insert(colour_[u]);
                else ++deg;
            }
            const int sat = static_cast<int>(seen.size());
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    // Returns true once an optimal colouring is certified by the lower bound.
    bool rec(std::size_t coloured, int used) {
        if (used >= best_value_) return false;
        if (coloured == g_.size()) {
            best_value_ = used;
            best_ = colour_;
            return best_value_ <= lower_;
        }
        const std::size_t v = pick();
        std::vector<bool> blocked(static_cast<std::size_t>(used) + 2, false);
        for (Vertex u : g_.adjacency[v])
            if (colour_[u]) blocked[static_cast<std::size_t>(colour_[u])] = true;
        for (int c = 1; c <= used + 1; ++c) {
            if (blocked[static_cast<std::size_t>(c)]) continue;
            colour_[v] = c;
            if (rec(coloured + 1, std::max(used, c))) return true;
            colour_[v] = 0;
        }
        colour_[v] = 0;
        return false;
    }

    const Graph& g_;
    std::vector<int> colour_;
    std::vector<int> best_;
    int best_value_ = 0;
    int lower_ = 0;
};

}  // namespace

ColoringCertificate chi(const Graph& g) {
    ColoringCertificate c;
    if (g.size() == 0) return c;
    for (const auto& q : maximal_cliques(g))
        if (q.size() > c.clique.size()) c.clique = q;
    Dsatur d(g);
    d.solve(static_cast<int>(c.clique.size()));
    c.value = d.value();
    c.colour = d.colouring();
    return c;
}

ColoringCertificate chi(const SimplicialComplex& k) { return chi(one_skeleton_graph(k)); }

int chi_by_hom0(const SimplicialComplex& k) {
    if (k.empty()) return 0;
    for (int m = 1;; ++m)
        if (hom0_exists(k, generate::simplex(m - 1))) return m;
}

FamilyResult chi_family(const SimplicialComplex& k, const std::vector<SimplicialComplex>& tests,
                        const std::vector<double>& weights) {
    if (tests.size() != weights.size()) throw ValidationError("one weight per test complex is required");
    std::vector<std::size_t> order(tests.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weights[a] < weights[b]; });
    FamilyResult r;
    for (std::size_t i : order)
        if (auto m = first_hom0(k, tests[i])) {
            r.value = weights[i];
            r.index = i;
            r.witness = std::move(m);
            return r;
        }
    return r;
}

PhiVerdict is_phi_complex(const SimplicialComplex& gamma, const VertexMap& omega, const VertexSet& sigma) {
    const std::size_t n = gamma.num_vertices();
    if (omega.image.size() != n) throw ValidationError("involution must be defined on every vertex");
    for (std::size_t v = 0; v < n; ++v)
        if (omega.image[v] >= n || omega.image[omega.image[v]] != v)
            throw ValidationError("map is not an involution");
    if (!is_simplicial(gamma, gamma, omega)) throw ValidationError("involution is not simplicial");
    const RidgeGraph g = ridge_graph(gamma);

    PhiVerdict out;
    out.sigma = sigma;
    const auto base = g.facet_index(sigma);
    if (!base) throw ValidationError("sigma is not a facet");
    out.base = base;
    const auto& facet = g.facets[*base];
    out.tau.resize(facet.size());
    for (std::size_t i = 0; i < facet.size(); ++i) {
        auto it = std::find(facet.begin(), facet.end(), omega.image[facet[i]]);
        if (it == facet.end()) {
            out.reason = "sigma is not invariant under the involution";
            return out;
        }
        out.tau[i] = static_cast<std::uint8_t>(it - facet.begin());
    }
    if (out.tau == identity_perm(facet.size())) {
        out.reason = "the involution fixes sigma point-wise";
        return out;
    }
    if (!holonomy_group(g, *base).contains(out.tau)) {
        out.reason = "the restricted involution is not a projectivity";
        return out;
    }
    // Evidence: BFS over (facet, accumulated projectivity from sigma).
    using State = std::pair<std::size_t, Perm>;
    std::map<State, State> prev;
    const State start{*base, identity_perm(facet.size())};
    const State goal{*base, out.tau};
    prev.emplace(start, start);
    std::deque<State> queue{start};
    while (!queue.empty() && !prev.count(goal)) {
        State s = queue.front();
        queue.pop_front();
        for (const auto& e : g.adjacency[s.first]) {
            State t{e.to, compose_perm(s.second, e.flip)};
            if (prev.count(t)) continue;
            prev.emplace(t, s);
            queue.push_back(std::move(t));
        }
    }
    for (State s = goal;; s = prev.at(s)) {
        out.evidence.push_back(s.first);
        if (s == start && out.evidence.size() > 1) break;
    }
    std::reverse(out.evidence.begin(), out.evidence.end());
    out.is_phi = true;
    out.reason = "sigma is invariant and the restricted involution is a nontrivial projectivity";
    return out;
}

CollapseResult vertex_collapsible(const SimplicialComplex& k) {
    CollapseResult r;
    if (k.empty() || !k.is_pure()) return r;
    const auto& facets = k.facets();
    const std::size_t n = facets.size();
    if (n > 64) throw SizeLimitError("collapse search is limited to 64 facets");
    if (n == 1) {
        r.collapsible = true;
        return r;
    }
    using Mask = std::uint64_t;
    std::unordered_set<Mask> dead;
    std::vector<CollapseStep> steps;

    auto removable = [&](Mask alive, std::size_t f, Vertex& free_vertex) {
        for (Vertex v : facets[f]) {
            bool alone = true;
            for (std::size_t o = 0; o < n && alone; ++o)
                if (o != f && (alive >> o & 1u) && std::binary_search(facets[o].begin(), facets[o].end(), v))
                    alone = false;
            if (!alone) continue;
            for (std::size_t o = 0; o < n; ++o) {
                if (o == f || !(alive >> o & 1u)) continue;
                bool contains = true;
                for (Vertex u : facets[f])
                    if (u != v && !std::binary_search(facets[o].begin(), facets[o].end(), u)) {
                        contains = false;
                        break;
                    }
                if (contains) {
                    free_vertex = v;
                    return true;
                }
            }
        }
        return false;
    };

    std::function<bool(Mask)> rec = [&](Mask alive) {
        if (std::popcount(alive) == 1) return true;
        if (dead.count(alive)) return false;
        for (std::size_t f = 0; f < n; ++f) {
            if (!(alive >> f & 1u)) continue;
            Vertex v = 0;
            if (!removable(alive, f, v)) continue;
            steps.push_back({facets[f], v});
            if (rec(alive & ~(Mask{1} << f))) return true;
            steps.pop_back();
        }
        dead.insert(alive);
        return false;
    };
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    r.collapsible = rec(all);
    if (r.collapsible) r.sequence = std::move(steps);
    return r;
}

}  // namespace holonomy
