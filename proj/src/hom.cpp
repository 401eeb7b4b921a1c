#include "holonomy/hom.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <unordered_set>

namespace holonomy {

HomLimits HomLimits::from_environment() {
    HomLimits l;
    if (const char* env = std::getenv("HOLONOMY_MAX_CELLS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) l.max_cells = static_cast<std::size_t>(v);
    }
    return l;
}

std::size_t HomComplex::EtaHash::operator()(const std::vector<Block>& eta) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Block b : eta) h = (h ^ std::hash<Block>{}(b)) * 0x100000001b3ull;
    return h;
}

int HomComplex::dim() const { return cells_.empty() ? -1 : cells_.back().dim; }

std::vector<std::size_t> HomComplex::f_vector() const {
    std::vector<std::size_t> f(static_cast<std::size_t>(dim() + 1), 0);
    for (const auto& c : cells_) ++f[static_cast<std::size_t>(c.dim)];
    return f;
}

std::optional<std::size_t> HomComplex::find(const std::vector<Block>& eta) const {
    auto it = index_.find(eta);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Poset HomComplex::poset() const {
    Poset p;
    p.covers.assign(cells_.size(), {});
    p.rank.resize(cells_.size());
    std::vector<Block> eta;
    for (std::size_t c = 0; c < cells_.size(); ++c) {
        p.rank[c] = cells_[c].dim;
        eta = cells_[c].eta;
        for (std::size_t v = 0; v < eta.size(); ++v) {
            const Block b = cells_[c].eta[v];
            if (std::popcount(b) < 2) continue;
            for (Block rest = b; rest; rest &= rest - 1) {
                eta[v] = b & ~(rest & -rest);
                p.covers[index_.at(eta)].push_back(c);
            }
            eta[v] = b;
        }
    }
    for (auto& c : p.covers) std::sort(c.begin(), c.end());
    return p;
}

std::map<std::string, std::vector<std::string>> HomComplex::labels_of(std::size_t cell) const {
    std::map<std::string, std::vector<std::string>> out;
    const auto& eta = cells_.at(cell).eta;
    for (std::size_t v = 0; v < eta.size(); ++v) {
        auto& labels = out[source_.label(static_cast<Vertex>(v))];
        for (Block b = eta[v]; b; b &= b - 1) labels.push_back(target_.label(static_cast<Vertex>(std::countr_zero(b))));
    }
    return out;
}

namespace {

Block mask_of(const VertexSet& s) {
    Block m = 0;
    for (Vertex v : s) m |= Block{1} << v;
    return m;
}

/// Backtracking search shared by hom_complex and hom0.
class Search {
public:
    Search(const SimplicialComplex& k, const SimplicialComplex& l) : k_(k), l_(l) {
        if (l.num_vertices() > 64) throw SizeLimitError("target complexes are limited to 64 vertices");
        for (int d = 0; d <= l.dim(); ++d)
            for (const auto& f : l.faces(d)) faces_.insert(mask_of(f));
        const std::size_t n = k.num_vertices();
        neighbours_.assign(n, {});
        facets_of_.assign(n, {});
        for (std::size_t f = 0; f < k.facets().size(); ++f)
            for (Vertex v : k.facets()[f]) facets_of_[v].push_back(f);
        if (k.dim() >= 1)
            for (const auto& e : k.faces(1)) {
                neighbours_[e[0]].push_back(e[1]);
                neighbours_[e[1]].push_back(e[0]);
            }
        eta_.assign(n, 0);
    }

    /// Vertices x of L that may appear in eta(v) given eta of all earlier vertices.
    Block allowed(Vertex v) const {
        Block forbidden = 0;
        for (Vertex u : neighbours_[v])
            if (u < v) forbidden |= eta_[u];
        Block out = 0;
        const Block all = l_.num_vertices() == 64 ? ~Block{0} : (Block{1} << l_.num_vertices()) - 1;
        for (Block rest = all & ~forbidden; rest; rest &= rest - 1) {
            const Block x = rest & -rest;
            bool ok = true;
            for (std::size_t f : facets_of_[v]) {
                if (!transversals_ok(k_.facets()[f], v, x)) {
                    ok = false;
                    break;
                }
            }
            if (ok) out |= x;
        }
        return out;
    }

    std::vector<Block>& eta() { return eta_; }
    std::size_t size() const { return eta_.size(); }

private:
    bool transversals_ok(const VertexSet& facet, Vertex v, Block x) const {
        std::vector<Block> blocks;
        for (Vertex u : facet)
            if (u < v) blocks.push_back(eta_[u]);
        return walk(blocks, 0, x);
    }

    bool walk(const std::vector<Block>& blocks, std::size_t i, Block acc) const {
        if (!faces_.count(acc)) return false;
        if (i == blocks.size()) return true;
        for (Block rest = blocks[i]; rest; rest &= rest - 1)
            if (!walk(blocks, i + 1, acc | (rest & -rest))) return false;
        return true;
    }

    const SimplicialComplex& k_;
    const SimplicialComplex& l_;
    std::unordered_set<Block> faces_;
    std::vector<std::vector<Vertex>> neighbours_;
    std::vector<std::vector<std::size_t>> facets_of_;
    std::vector<Block> eta_;
};

/// Nonempty subsets of `set`, by size then lexicographically.
std::vector<Block> subsets_by_size(Block set) {
    std::vector<Block> elems;
    for (Block rest = set; rest; rest &= rest - 1) elems.push_back(rest & -rest);
    std::vector<Block> out;
    const std::size_t n = elems.size();
    std::vector<std::size_t> pick;
    for (std::size_t size = 1; size <= n; ++size) {
        pick.resize(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            Block b = 0;
            for (std::size_t i : pick) b |= elems[i];
            out.push_back(b);
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

}  // namespace

HomComplex hom_complex(const SimplicialComplex& k, const SimplicialComplex& l, const HomLimits& limits) {
    HomComplex h;
    h.source_ = k;
    h.target_ = l;
    if (k.empty()) {
        // The unique empty function.
        h.cells_.push_back({{}, 0});
        h.index_.emplace(std::vector<Block>{}, 0);
        return h;
    }
    if (l.empty()) return h;
    const double bits = static_cast<double>(k.num_vertices()) *
                        std::log2(std::max<double>(2.0, static_cast<double>(l.num_vertices())));
    if (bits > limits.search_bits)
        throw SizeLimitError("Hom complex search space too large (|V(K)| log2 |V(L)| = " +
                             std::to_string(bits) + ")");
    Search s(k, l);
    std::vector<HomCell> found;
    std::function<void(Vertex, int)> rec = [&](Vertex v, int dim) {
        if (v == s.size()) {
            if (found.size() >= limits.max_cells)
                throw SizeLimitError("Hom complex exceeds " + std::to_string(limits.max_cells) + " cells");
            found.push_back({s.eta(), dim});
            return;
        }
        for (Block b : subsets_by_size(s.allowed(v))) {
            s.eta()[v] = b;
            rec(v + 1, dim + std::popcount(b) - 1);
        }
        s.eta()[v] = 0;
    };
    rec(0, 0);
    std::stable_sort(found.begin(), found.end(), [](const HomCell& a, const HomCell& b) { return a.dim < b.dim; });
    h.cells_ = std::move(found);
    for (std::size_t i = 0; i < h.cells_.size(); ++i) h.index_.emplace(h.cells_[i].eta, i);
    return h;
}

namespace {

template <class Visit>
void search_hom0(const SimplicialComplex& k, const SimplicialComplex& l, Visit&& visit) {
    if (k.empty()) {
        visit(std::vector<Block>{});
        return;
    }
    if (l.empty()) return;
    Search s(k, l);
    std::function<bool(Vertex)> rec = [&](Vertex v) {
        if (v == s.size()) return visit(s.eta());
        for (Block rest = s.allowed(v); rest; rest &= rest - 1) {
            s.eta()[v] = rest & -rest;
            if (!rec(v + 1)) return false;
        }
        s.eta()[v] = 0;
        return true;
    };
    rec(0);
}

}  // namespace

std::vector<VertexMap> hom0(const SimplicialComplex& k, const SimplicialComplex& l) {
    std::vector<VertexMap> out;
    search_hom0(k, l, [&](const std::vector<Block>& eta) {
        VertexMap m;
        for (Block b : eta) m.image.push_back(static_cast<Vertex>(std::countr_zero(b)));
        out.push_back(std::move(m));
        return true;
    });
    return out;
}

std::optional<VertexMap> first_hom0(const SimplicialComplex& k, const SimplicialComplex& l) {
    std::optional<VertexMap> found;
    search_hom0(k, l, [&](const std::vector<Block>& eta) {
        VertexMap m;
        for (Block b : eta) m.image.push_back(static_cast<Vertex>(std::countr_zero(b)));
        found = std::move(m);
        return false;
    });
    return found;
}

bool hom0_exists(const SimplicialComplex& k, const SimplicialComplex& l) { return first_hom0(k, l).has_value(); }

namespace {

void require_nondegenerate(const SimplicialComplex& a, const SimplicialComplex& b, const VertexMap& f) {
    bool ok = false;
    try {
        ok = is_nondegenerate(a, b, f);
    } catch (const ValidationError&) {
        ok = false;
    }
    if (!ok) throw ValidationError("map is not a non-degenerate simplicial map");
}

}  // namespace

CellMap induced_precompose(const HomComplex& from, const HomComplex& to, const VertexMap& f) {
    if (!(from.target() == to.target())) throw ValidationError("Hom complexes have different targets");
    require_nondegenerate(to.source(), from.source(), f);
    CellMap m;
    std::vector<Block> eta(to.source().num_vertices());
    for (const auto& c : from.cells()) {
        for (std::size_t v = 0; v < eta.size(); ++v) eta[v] = c.eta[f.image[v]];
        auto idx = to.find(eta);
        if (!idx) throw std::logic_error("precomposed cell missing from target Hom complex");
        m.image.push_back(*idx);
    }
    return m;
}

CellMap induced_postcompose(const HomComplex& from, const HomComplex& to, const VertexMap& g) {
    if (!(from.source() == to.source())) throw ValidationError("Hom complexes have different sources");
    require_nondegenerate(from.target(), to.target(), g);
    CellMap m;
    std::vector<Block> eta(from.source().num_vertices());
    for (const auto& c : from.cells()) {
        for (std::size_t v = 0; v < eta.size(); ++v) {
            Block b = 0;
            for (Block rest = c.eta[v]; rest; rest &= rest - 1) b |= Block{1} << g.image[std::countr_zero(rest)];
            eta[v] = b;
        }
        auto idx = to.find(eta);
        if (!idx) throw std::logic_error("postcomposed cell missing from target Hom complex");
        m.image.push_back(*idx);
    }
    return m;
}

CellMap compose(const CellMap& a, const CellMap& b) {
    CellMap m;
    for (std::size_t x : a.image) m.image.push_back(b.image.at(x));
    return m;
}

bool is_order_preserving(const HomComplex& from, const HomComplex& to, const CellMap& m) {
    const Poset p = from.poset();
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y : p.covers[x]) {
            const auto& a = to.cells().at(m.image[x]).eta;
            const auto& b = to.cells().at(m.image[y]).eta;
            for (std::size_t v = 0; v < a.size(); ++v)
                if ((a[v] & ~b[v]) != 0) return false;
        }
    return true;
}

SimplicialComplex facet_simplex(const RidgeGraph& g, std::size_t facet) {
    return SimplicialComplex::from_facets({g.labels_of(facet)});
}

CellMap transport(const RidgeGraph& g, const std::vector<std::size_t>& path, const HomComplex& last,
                  const HomComplex& first) {
    if (g.kind != CellKind::simplex) throw ValidationError("transport needs a simplicial complex");
    const Projectivity p = compose_path(g, path);
    const auto& src = g.facets[p.source];
    const auto& dst = g.facets[p.target];
    const auto& first_table = first.source().vertices();
    const auto& last_table = last.source().vertices();
    if (first_table.size() != src.size() || last_table.size() != dst.size())
        throw ValidationError("fibre complexes do not match the path's end facets");
    VertexMap f;
    f.image.assign(src.size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto a = first_table.find(g.vertices.label(src[i]));
        auto b = last_table.find(g.vertices.label(dst[p.image[i]]));
        if (!a || !b) throw ValidationError("fibre complexes do not match the path's end facets");
        f.image[*a] = *b;
    }
    return induced_precompose(last, first, f);
}

SimplicialComplex order_complex(const Poset& p) {
    if (p.size() == 0) return {};
    std::vector<bool> has_lower(p.size(), false);
    for (const auto& c : p.covers)
        for (std::size_t y : c) has_lower[y] = true;
    std::vector<std::vector<Vertex>> chains;
    std::vector<Vertex> chain;
    std::function<void(std::size_t)> rec = [&](std::size_t x) {
        chain.push_back(static_cast<Vertex>(x));
        if (p.covers[x].empty()) chains.push_back(chain);
        for (std::size_t y : p.covers[x]) rec(y);
        chain.pop_back();
    };
    for (std::size_t x = 0; x < p.size(); ++x)
        if (!has_lower[x]) rec(x);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < p.size(); ++i) labels.push_back(std::to_string(i));
    return SimplicialComplex::from_indexed(labels, chains);
}

VertexMap order_complex_map(const CellMap& m) {
    VertexMap f;
    for (std::size_t x : m.image) f.image.push_back(static_cast<Vertex>(x));
    return f;
}

}  // namespace holonomy
