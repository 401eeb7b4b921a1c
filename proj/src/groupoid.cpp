#include "holonomy/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace holonomy {

namespace {

std::size_t position_in(const std::vector<Vertex>& cell, Vertex v) {
    for (std::size_t i = 0; i < cell.size(); ++i)
        if (cell[i] == v) return i;
    throw std::logic_error("vertex not in cell");
}

void finish(RidgeGraph& g) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        VertexSet s(g.facets[i].begin(), g.facets[i].end());
        std::sort(s.begin(), s.end());
        g.lookup.emplace(std::move(s), i);
    }
    for (auto& adj : g.adjacency)
        std::sort(adj.begin(), adj.end(),
                  [](const RidgeEdge& a, const RidgeEdge& b) { return a.to < b.to; });
    g.component.assign(g.size(), g.size());
    std::size_t next = 0;
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (g.component[s] != g.size()) continue;
        std::deque<std::size_t> queue{s};
        g.component[s] = next;
        while (!queue.empty()) {
            const auto x = queue.front();
            queue.pop_front();
            for (const auto& e : g.adjacency[x])
                if (g.component[e.to] == g.size()) {
                    g.component[e.to] = next;
                    queue.push_back(e.to);
                }
        }
        ++next;
    }
}

}  // namespace

std::size_t RidgeGraph::num_edges() const {
    std::size_t n = 0;
    for (const auto& adj : adjacency) n += adj.size();
    return n / 2;
}

std::optional<std::size_t> RidgeGraph::facet_index(const VertexSet& vs) const {
    auto it = lookup.find(vs);
    if (it == lookup.end()) return std::nullopt;
    return it->second;
}

std::size_t RidgeGraph::facet_at(const std::vector<std::string>& labels) const {
    VertexSet vs;
    for (const auto& l : labels) vs.push_back(vertices.at(l));
    std::sort(vs.begin(), vs.end());
    if (auto i = facet_index(vs)) return *i;
    std::string text;
    for (const auto& l : labels) text += (text.empty() ? "" : ",") + l;
    throw ValidationError("{" + text + "} is not a facet");
}

const RidgeEdge* RidgeGraph::edge(std::size_t a, std::size_t b) const {
    const auto& adj = adjacency.at(a);
    auto it = std::lower_bound(adj.begin(), adj.end(), b,
                               [](const RidgeEdge& e, std::size_t t) { return e.to < t; });
    if (it == adj.end() || it->to != b) return nullptr;
    return &*it;
}

std::vector<std::string> RidgeGraph::labels_of(std::size_t facet) const {
    std::vector<std::string> out;
    for (Vertex v : facets.at(facet)) out.push_back(vertices.label(v));
    return out;
}

RidgeGraph ridge_graph(const SimplicialComplex& k) {
    if (k.empty() || !k.is_pure()) throw ValidationError("ridge graph needs a pure complex");
    if (k.dim() < 1) throw ValidationError("ridge graph needs dimension at least 1");
    RidgeGraph g;
    g.kind = CellKind::simplex;
    g.dim = k.dim();
    g.vertices = k.vertices();
    g.facets.assign(k.facets().begin(), k.facets().end());
    g.adjacency.assign(g.size(), {});
    std::map<VertexSet, std::vector<std::size_t>> by_ridge;
    for (std::size_t f = 0; f < g.size(); ++f) {
        const auto& facet = g.facets[f];
        for (std::size_t drop = 0; drop < facet.size(); ++drop) {
            VertexSet ridge;
            for (std::size_t i = 0; i < facet.size(); ++i)
                if (i != drop) ridge.push_back(facet[i]);
            by_ridge[ridge].push_back(f);
        }
    }
    for (const auto& [ridge, members] : by_ridge)
        for (std::size_t x : members)
            for (std::size_t y : members) {
                if (x == y) continue;
                const auto& a = g.facets[x];
                const auto& b = g.facets[y];
                Vertex apex_b = 0;
                for (Vertex v : b)
                    if (!std::binary_search(ridge.begin(), ridge.end(), v)) apex_b = v;
                Perm p(a.size());
                for (std::size_t i = 0; i < a.size(); ++i) {
                    const Vertex v = std::binary_search(ridge.begin(), ridge.end(), a[i]) ? a[i] : apex_b;
                    p[i] = static_cast<std::uint8_t>(position_in(b, v));
                }
                g.adjacency[x].push_back({y, ridge, std::move(p)});
            }
    finish(g);
    return g;
}

RidgeGraph ridge_graph(const CubicalComplex& k) {
    if (k.dim() < 1) throw ValidationError("ridge graph needs dimension at least 1");
    RidgeGraph g;
    g.kind = CellKind::cube;
    g.dim = k.dim();
    g.vertices = k.vertices();
    for (const auto& c : k.cubes()) g.facets.push_back(c.corners);
    g.adjacency.assign(g.size(), {});
    struct Side {
        std::size_t cube;
        int axis;
        unsigned value;
    };
    std::map<VertexSet, std::vector<Side>> by_ridge;
    const unsigned full = (1u << k.dim()) - 1;
    for (std::size_t c = 0; c < g.size(); ++c)
        for (int j = 0; j < k.dim(); ++j)
            for (unsigned side = 0; side < 2; ++side)
                by_ridge[cube_face(k.cubes()[c], full & ~(1u << j), side << j).vertex_set()]
                    .push_back({c, j, side});
    for (const auto& [ridge, members] : by_ridge)
        for (const auto& x : members)
            for (const auto& y : members) {
                if (x.cube == y.cube) continue;
                const auto& a = g.facets[x.cube];
                const auto& b = g.facets[y.cube];
                Perm p(a.size());
                for (std::size_t i = 0; i < a.size(); ++i) {
                    if (((i >> x.axis) & 1u) == x.value) {
                        p[i] = static_cast<std::uint8_t>(position_in(b, a[i]));
                    } else {
                        // Off-ridge corner: follow the edge to the ridge, then
                        // leave the ridge along b's transverse axis.
                        const Vertex partner = a[i ^ (std::size_t{1} << x.axis)];
                        p[i] = static_cast<std::uint8_t>(position_in(b, partner) ^ (std::size_t{1} << y.axis));
                    }
                }
                g.adjacency[x.cube].push_back({y.cube, ridge, std::move(p)});
            }
    finish(g);
    return g;
}

Perm identity_perm(std::size_t n) {
    Perm p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(i);
    return p;
}

Perm compose_perm(const Perm& first, const Perm& second) {
    Perm out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
    return out;
}

Perm inverse_perm(const Perm& p) {
    Perm out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<std::uint8_t>(i);
    return out;
}

int element_order(const Perm& p) {
    const Perm id = identity_perm(p.size());
    Perm q = p;
    int n = 1;
    while (q != id) {
        q = compose_perm(q, p);
        ++n;
    }
    return n;
}

std::vector<Perm> close_group(const std::vector<Perm>& generators, std::size_t degree) {
    std::set<Perm> seen{identity_perm(degree)};
    std::deque<Perm> queue{identity_perm(degree)};
    while (!queue.empty()) {
        Perm x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators) {
            Perm y = compose_perm(x, g);
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    }
    return {seen.begin(), seen.end()};
}

Projectivity identity_projectivity(const RidgeGraph& g, std::size_t facet) {
    return {facet, facet, identity_perm(g.facets.at(facet).size())};
}

Projectivity flip(const RidgeGraph& g, std::size_t a, std::size_t b) {
    if (a == b) throw ValidationError("a flip needs two distinct facets");
    const RidgeEdge* e = g.edge(a, b);
    if (!e) throw ValidationError("facets are not adjacent along a ridge");
    return {a, b, e->flip};
}

Projectivity compose(const Projectivity& f, const Projectivity& g) {
    if (f.target != g.source) throw std::invalid_argument("projectivities are not composable");
    return {f.source, g.target, compose_perm(f.image, g.image)};
}

Projectivity inverse(const Projectivity& p) { return {p.target, p.source, inverse_perm(p.image)}; }

Projectivity compose_path(const RidgeGraph& g, const std::vector<std::size_t>& path) {
    if (path.empty()) throw ValidationError("empty facet path");
    Projectivity acc = identity_projectivity(g, path.front());
    for (std::size_t i = 1; i < path.size(); ++i) acc = compose(acc, flip(g, path[i - 1], path[i]));
    return acc;
}

std::map<std::string, std::string> vertex_map(const RidgeGraph& g, const Projectivity& p) {
    std::map<std::string, std::string> out;
    const auto& src = g.facets.at(p.source);
    const auto& dst = g.facets.at(p.target);
    for (std::size_t i = 0; i < src.size(); ++i)
        out.emplace(g.vertices.label(src[i]), g.vertices.label(dst[p.image[i]]));
    return out;
}

std::vector<std::size_t> SpanningTree::path_to(std::size_t facet) const {
    if (!to_facet.at(facet)) throw ValidationError("facet lies in another component");
    std::vector<std::size_t> path{facet};
    while (parent[path.back()]) path.push_back(*parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

SpanningTree bfs_tree(const RidgeGraph& g, std::size_t base) {
    if (base >= g.size()) throw ValidationError("base is not a facet");
    SpanningTree t;
    t.base = base;
    t.parent.assign(g.size(), std::nullopt);
    t.to_facet.assign(g.size(), std::nullopt);
    t.to_facet[base] = identity_projectivity(g, base);
    std::deque<std::size_t> queue{base};
    while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        t.order.push_back(x);
        for (const auto& e : g.adjacency[x]) {
            if (t.to_facet[e.to]) continue;
            t.parent[e.to] = x;
            t.to_facet[e.to] = compose(*t.to_facet[x], Projectivity{x, e.to, e.flip});
            queue.push_back(e.to);
        }
    }
    return t;
}

bool HolonomyGroup::contains(const Perm& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

GroupSummary HolonomyGroup::summary() const {
    GroupSummary s;
    s.order = elements.size();
    for (const auto& e : elements) s.element_orders.push_back(element_order(e));
    std::sort(s.element_orders.begin(), s.element_orders.end());
    for (std::size_t i = 0; i < generators.size() && s.abelian; ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (compose_perm(generators[i].image, generators[j].image) !=
                compose_perm(generators[j].image, generators[i].image)) {
                s.abelian = false;
                break;
            }
    return s;
}

HolonomyGroup holonomy_group(const RidgeGraph& g, std::size_t base) {
    const SpanningTree tree = bfs_tree(g, base);
    HolonomyGroup h;
    h.base = base;
    for (std::size_t x : tree.order)
        for (const auto& e : g.adjacency[x]) {
            const std::size_t y = e.to;
            // Each non-tree edge once, from its smaller endpoint.
            if (x > y || tree.parent[y] == x || tree.parent[x] == y) continue;
            Projectivity loop = compose(compose(*tree.to_facet[x], Projectivity{x, y, e.flip}),
                                        inverse(*tree.to_facet[y]));
            auto path = tree.path_to(x);
            auto back = tree.path_to(y);
            std::reverse(back.begin(), back.end());
            path.insert(path.end(), back.begin(), back.end());
            h.generators.push_back(std::move(loop));
            h.generator_loops.push_back(std::move(path));
        }
    std::vector<Perm> gens;
    for (const auto& p : h.generators) gens.push_back(p.image);
    h.elements = close_group(gens, g.facets[base].size());
    return h;
}

HolonomyEmbedding induced_holonomy_map(const RidgeGraph& source, const RidgeGraph& target,
                                       const VertexMap& f, std::size_t base) {
    if (source.dim != target.dim || source.kind != target.kind)
        throw ValidationError("source and target must be complexes of the same kind and dimension");
    if (f.image.size() != source.vertices.size())
        throw ValidationError("vertex map does not cover every source vertex");
    auto image_facet = [&](std::size_t facet) {
        VertexSet vs;
        for (Vertex v : source.facets[facet]) vs.push_back(f.image[v]);
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            throw ValidationError("map is degenerate on a facet");
        auto idx = target.facet_index(vs);
        if (!idx) throw ValidationError("facet image is not a facet of the target");
        return *idx;
    };
    for (std::size_t facet = 0; facet < source.size(); ++facet) image_facet(facet);

    HolonomyEmbedding out;
    out.target_base = image_facet(base);
    const auto& src = source.facets[base];
    const auto& dst = target.facets[out.target_base];
    // pull[j] = source position mapping onto target position j
    Perm pull(dst.size());
    for (std::size_t i = 0; i < src.size(); ++i)
        pull[position_in(dst, f.image[src[i]])] = static_cast<std::uint8_t>(i);
    Perm push(src.size());
    for (std::size_t j = 0; j < dst.size(); ++j) push[pull[j]] = static_cast<std::uint8_t>(j);

    const HolonomyGroup from = holonomy_group(source, base);
    const HolonomyGroup to = holonomy_group(target, out.target_base);
    for (const auto& gen : from.generators) {
        Perm img(dst.size());
        for (std::size_t j = 0; j < dst.size(); ++j) img[j] = push[gen.image[pull[j]]];
        out.contained = out.contained && to.contains(img);
        out.generator_images.push_back(std::move(img));
    }
    return out;
}

}  // namespace holonomy
