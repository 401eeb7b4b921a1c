#include "holonomy/complex.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace holonomy {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

int compare_runs(std::string_view a, std::string_view b) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = is_digit(a[i]);
        const bool db = is_digit(b[j]);
        if (da != db) return da ? -1 : 1;
        std::size_t ie = i;
        std::size_t je = j;
        if (da) {
            while (ie < a.size() && is_digit(a[ie])) ++ie;
            while (je < b.size() && is_digit(b[je])) ++je;
            std::string_view ra = a.substr(i, ie - i);
            std::string_view rb = b.substr(j, je - j);
            while (ra.size() > 1 && ra.front() == '0') ra.remove_prefix(1);
            while (rb.size() > 1 && rb.front() == '0') rb.remove_prefix(1);
            if (ra.size() != rb.size()) return ra.size() < rb.size() ? -1 : 1;
            if (int c = ra.compare(rb); c != 0) return c < 0 ? -1 : 1;
        } else {
            while (ie < a.size() && !is_digit(a[ie])) ++ie;
            while (je < b.size() && !is_digit(b[je])) ++je;
            if (int c = a.substr(i, ie - i).compare(b.substr(j, je - j)); c != 0)
                return c < 0 ? -1 : 1;
        }
        i = ie;
        j = je;
    }
    if (i < a.size()) return 1;
    if (j < b.size()) return -1;
    return 0;
}

std::string join_labels(const std::vector<std::string>& labels) {
    std::string out = "[";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ",";
        out += labels[i];
    }
    return out + "]";
}

// Re-indexes facets given over an arbitrary label list onto the sorted table
// of the labels actually used.
std::pair<VertexTable, std::vector<std::vector<Vertex>>> reindex(
    const std::vector<std::string>& labels, const std::vector<std::vector<Vertex>>& cells) {
    std::vector<bool> used(labels.size(), false);
    for (const auto& cell : cells)
        for (Vertex v : cell) {
            if (v >= labels.size()) throw ValidationError("vertex index out of range");
            used[v] = true;
        }
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (used[i]) kept.push_back(labels[i]);
    VertexTable table(kept);
    std::vector<Vertex> remap(labels.size(), 0);
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (used[i]) remap[i] = table.at(labels[i]);
    std::vector<std::vector<Vertex>> out;
    out.reserve(cells.size());
    for (const auto& cell : cells) {
        std::vector<Vertex> c;
        c.reserve(cell.size());
        for (Vertex v : cell) c.push_back(remap[v]);
        out.push_back(std::move(c));
    }
    return {std::move(table), std::move(out)};
}

std::vector<std::vector<Vertex>> index_cells(const std::vector<std::vector<std::string>>& cells,
                                             std::vector<std::string>& labels) {
    std::unordered_map<std::string, Vertex> seen;
    std::vector<std::vector<Vertex>> out;
    for (const auto& cell : cells) {
        std::vector<Vertex> c;
        for (const auto& l : cell) {
            auto [it, inserted] = seen.emplace(l, static_cast<Vertex>(labels.size()));
            if (inserted) labels.push_back(l);
            c.push_back(it->second);
        }
        out.push_back(std::move(c));
    }
    return out;
}

using EdgeSet = std::vector<std::pair<Vertex, Vertex>>;

EdgeSet cube_edges(const Cube& c) {
    EdgeSet edges;
    const std::size_t n = c.corners.size();
    for (std::size_t i = 0; i < n; ++i)
        for (int j = 0; j < c.dim; ++j) {
            const std::size_t nb = i ^ (std::size_t{1} << j);
            if (nb > i) edges.emplace_back(std::minmax(c.corners[i], c.corners[nb]));
        }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

bool label_less(std::string_view a, std::string_view b) {
    const int c = compare_runs(a, b);
    if (c != 0) return c < 0;
    return a < b;
}

std::size_t VertexSetHash::operator()(const VertexSet& s) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Vertex v : s) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

VertexTable::VertexTable(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end(),
              [](const std::string& a, const std::string& b) { return label_less(a, b); });
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!index_.emplace(labels_[i], static_cast<Vertex>(i)).second)
            throw ValidationError("duplicate vertex label '" + labels_[i] + "'");
    }
}

std::optional<Vertex> VertexTable::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vertex VertexTable::at(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw ValidationError("unknown vertex '" + std::string(label) + "'");
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facets) {
    if (facets.empty()) throw ValidationError("facet list is empty");
    std::vector<std::string> labels;
    auto cells = index_cells(facets, labels);
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (facets[i].empty()) throw ValidationError("facet " + std::to_string(i) + " is empty");
        std::set<std::string> distinct(facets[i].begin(), facets[i].end());
        if (distinct.size() != facets[i].size())
            throw ValidationError("facet " + join_labels(facets[i]) + " repeats a vertex");
    }
    return from_indexed(labels, cells);
}

SimplicialComplex SimplicialComplex::from_indexed(const std::vector<std::string>& labels,
                                                  const std::vector<std::vector<Vertex>>& facets) {
    SimplicialComplex k;
    auto [table, cells] = reindex(labels, facets);
    k.vertices_ = std::move(table);
    std::vector<VertexSet> sets;
    sets.reserve(cells.size());
    for (auto& c : cells) {
        if (c.empty()) throw ValidationError("empty facet");
        std::sort(c.begin(), c.end());
        if (std::adjacent_find(c.begin(), c.end()) != c.end())
            throw ValidationError("facet " + join_labels(k.labels_of(c)) + " repeats a vertex");
        sets.push_back(std::move(c));
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    // Absorb facets contained in larger ones.
    std::vector<std::size_t> order(sets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return sets[a].size() > sets[b].size();
    });
    std::vector<std::vector<std::size_t>> containing(k.vertices_.size());
    std::vector<bool> keep(sets.size(), false);
    for (std::size_t idx : order) {
        const auto& s = sets[idx];
        bool absorbed = false;
        for (std::size_t other : containing[s.front()]) {
            if (sets[other].size() > s.size() &&
                std::includes(sets[other].begin(), sets[other].end(), s.begin(), s.end())) {
                absorbed = true;
                break;
            }
        }
        if (absorbed) continue;
        keep[idx] = true;
        for (Vertex v : s) containing[v].push_back(idx);
    }
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (keep[i]) k.facets_.push_back(sets[i]);

    // Vertices used only by absorbed facets are still covered by the keepers.
    k.build_faces();
    return k;
}

void SimplicialComplex::build_faces() {
    std::size_t top = 0;
    for (const auto& f : facets_) top = std::max(top, f.size());
    if (top > 24) throw SizeLimitError("facet with more than 24 vertices");
    std::vector<std::unordered_set<VertexSet, VertexSetHash>> buckets(top);
    for (const auto& f : facets_) {
        const std::size_t n = f.size();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            VertexSet s;
            s.reserve(static_cast<std::size_t>(std::popcount(mask)));
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) s.push_back(f[i]);
            buckets[s.size() - 1].insert(std::move(s));
        }
    }
    faces_.assign(top, {});
    face_lookup_.assign(top, {});
    for (std::size_t d = 0; d < top; ++d) {
        faces_[d].assign(buckets[d].begin(), buckets[d].end());
        std::sort(faces_[d].begin(), faces_[d].end());
        for (std::size_t i = 0; i < faces_[d].size(); ++i) face_lookup_[d].emplace(faces_[d][i], i);
    }
}

bool SimplicialComplex::is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const VertexSet& f) {
        return static_cast<int>(f.size()) - 1 == dim();
    });
}

const std::vector<VertexSet>& SimplicialComplex::faces(int k) const {
    static const std::vector<VertexSet> none;
    if (k < 0 || k > dim()) return none;
    return faces_[static_cast<std::size_t>(k)];
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& level : faces_) f.push_back(level.size());
    return f;
}

std::size_t SimplicialComplex::num_faces() const {
    std::size_t n = 0;
    for (const auto& level : faces_) n += level.size();
    return n;
}

bool SimplicialComplex::contains(const VertexSet& face) const {
    return face_index(face).has_value();
}

std::optional<std::size_t> SimplicialComplex::face_index(const VertexSet& face) const {
    if (face.empty() || face.size() > faces_.size()) return std::nullopt;
    const auto& lookup = face_lookup_[face.size() - 1];
    auto it = lookup.find(face);
    if (it == lookup.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> SimplicialComplex::labels_of(const VertexSet& s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(label(v));
    return out;
}

VertexSet SimplicialComplex::vertex_set(const std::vector<std::string>& labels) const {
    VertexSet s;
    for (const auto& l : labels) s.push_back(vertices_.at(l));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw ValidationError("vertex list " + join_labels(labels) + " repeats a vertex");
    return s;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertices_.labels() == b.vertices_.labels() && a.facets_ == b.facets_;
}

// ---------------------------------------------------------------------------
// Cubes

VertexSet Cube::vertex_set() const {
    VertexSet s(corners.begin(), corners.end());
    std::sort(s.begin(), s.end());
    return s;
}

int Cube::corner_of(Vertex v) const {
    for (std::size_t i = 0; i < corners.size(); ++i)
        if (corners[i] == v) return static_cast<int>(i);
    return -1;
}

Cube cube_face(const Cube& cube, unsigned free_mask, unsigned fixed_bits) {
    std::vector<int> free_axes;
    for (int j = 0; j < cube.dim; ++j)
        if (free_mask & (1u << j)) free_axes.push_back(j);
    Cube face;
    face.dim = static_cast<int>(free_axes.size());
    const std::size_t n = std::size_t{1} << face.dim;
    face.corners.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        unsigned idx = fixed_bits & ~free_mask;
        for (std::size_t b = 0; b < free_axes.size(); ++b)
            if (t & (std::size_t{1} << b)) idx |= 1u << free_axes[b];
        face.corners.push_back(cube.corners[idx]);
    }
    return face;
}

CubicalComplex CubicalComplex::from_cubes(const std::vector<std::vector<std::string>>& cubes) {
    std::vector<std::string> labels;
    auto cells = index_cells(cubes, labels);
    return from_indexed(labels, cells);
}

CubicalComplex CubicalComplex::from_indexed(const std::vector<std::string>& labels,
                                            const std::vector<std::vector<Vertex>>& cubes) {
    if (cubes.empty()) throw ValidationError("cube list is empty");
    CubicalComplex k;
    auto [table, cells] = reindex(labels, cubes);
    k.vertices_ = std::move(table);
    const std::size_t n = cells.front().size();
    for (const auto& c : cells) {
        const auto cube_text = join_labels(k.labels_of(c));
        if (c.empty() || !std::has_single_bit(c.size()))
            throw ValidationError("cube " + cube_text + " has " + std::to_string(c.size()) +
                                  " corners, not a power of two");
        if (c.size() != n)
            throw ValidationError("cube " + cube_text + " has a different dimension (complex must be pure)");
        if (n > 64) throw SizeLimitError("cubes of dimension above 6 are not supported");
        std::vector<Vertex> sorted = c;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ValidationError("cube " + cube_text + " repeats a corner");
    }
    k.dim_ = std::countr_zero(n);
    for (auto& c : cells) k.cubes_.push_back(Cube{k.dim_, std::move(c)});
    std::sort(k.cubes_.begin(), k.cubes_.end(),
              [](const Cube& a, const Cube& b) { return a.vertex_set() < b.vertex_set(); });
    for (std::size_t i = 1; i < k.cubes_.size(); ++i)
        if (k.cubes_[i - 1].vertex_set() == k.cubes_[i].vertex_set())
            throw ValidationError("cube " + join_labels(k.labels_of(k.cubes_[i].corners)) +
                                  " is listed twice");
    k.build_and_validate();
    return k;
}

void CubicalComplex::build_and_validate() {
    const int k = dim_;
    const unsigned full = (1u << k) - 1;

    // Derive every face, keeping the first realisation and checking that all
    // realisations of the same vertex set carry the same edges.
    std::vector<std::map<VertexSet, std::pair<Cube, EdgeSet>>> found(static_cast<std::size_t>(k) + 1);
    for (const auto& top : cubes_) {
        for (unsigned free = 0; free <= full; ++free) {
            const unsigned fixed_space = full & ~free;
            for (unsigned fixed = fixed_space;; fixed = (fixed - 1) & fixed_space) {
                Cube face = cube_face(top, free, fixed);
                auto vs = face.vertex_set();
                auto edges = cube_edges(face);
                auto& level = found[static_cast<std::size_t>(face.dim)];
                auto it = level.find(vs);
                if (it == level.end()) {
                    level.emplace(std::move(vs), std::make_pair(std::move(face), std::move(edges)));
                } else if (it->second.second != edges) {
                    throw ValidationError("faces on vertices " + join_labels(labels_of(face.corners)) +
                                          " carry incompatible cube structures (cube " +
                                          join_labels(labels_of(top.corners)) + ")");
                }
                if (fixed == 0) break;
            }
        }
    }
    faces_.assign(static_cast<std::size_t>(k) + 1, {});
    face_lookup_.assign(static_cast<std::size_t>(k) + 1, {});
    std::vector<std::size_t> offset(static_cast<std::size_t>(k) + 2, 0);
    for (int d = 0; d <= k; ++d) {
        auto& level = faces_[static_cast<std::size_t>(d)];
        for (auto& [vs, entry] : found[static_cast<std::size_t>(d)]) {
            face_lookup_[static_cast<std::size_t>(d)].emplace(vs, level.size());
            level.push_back(std::move(entry.first));
        }
        offset[static_cast<std::size_t>(d) + 1] = offset[static_cast<std::size_t>(d)] + level.size();
    }

    // Per top cube: global ids of its faces, addressed by (free, fixed).
    auto global_id = [&](const Cube& face) {
        const auto d = static_cast<std::size_t>(face.dim);
        return offset[d] + face_lookup_[d].at(face.vertex_set());
    };
    std::vector<std::vector<std::size_t>> cubes_at_vertex(vertices_.size());
    for (std::size_t c = 0; c < cubes_.size(); ++c)
        for (Vertex v : cubes_[c].corners) cubes_at_vertex[v].push_back(c);

    std::vector<std::unordered_set<std::size_t>> faces_of_cube(cubes_.size());
    struct LocalFace {
        unsigned free, fixed;
        std::size_t id;
    };
    std::unordered_map<std::uint64_t, std::size_t> joins;
    for (std::size_t c = 0; c < cubes_.size(); ++c) {
        const auto& top = cubes_[c];
        std::vector<LocalFace> local;
        for (unsigned free = 0; free <= full; ++free) {
            const unsigned fixed_space = full & ~free;
            for (unsigned fixed = fixed_space;; fixed = (fixed - 1) & fixed_space) {
                local.push_back({free, fixed, global_id(cube_face(top, free, fixed))});
                if (fixed == 0) break;
            }
        }
        for (const auto& f : local) faces_of_cube[c].insert(f.id);
        // Semilattice: the join of two faces must not depend on the top cube
        // in which it is computed.
        for (std::size_t a = 0; a < local.size(); ++a)
            for (std::size_t b = a + 1; b < local.size(); ++b) {
                const auto& x = local[a];
                const auto& y = local[b];
                const unsigned free = x.free | y.free | ((x.fixed ^ y.fixed) & ~(x.free | y.free));
                const unsigned fixed = x.fixed & ~free & full;
                const std::size_t join = global_id(cube_face(top, free, fixed));
                const auto lo = std::min(x.id, y.id);
                const auto hi = std::max(x.id, y.id);
                const std::uint64_t key = (static_cast<std::uint64_t>(lo) << 32) | hi;
                auto [it, inserted] = joins.emplace(key, join);
                if (!inserted && it->second != join)
                    throw ValidationError("semilattice violation: two faces of cube " +
                                          join_labels(labels_of(top.corners)) +
                                          " have no least upper bound");
            }
    }

    // Lower intervals must be cube face posets: any face whose vertices lie
    // in a top cube must be a face of that cube.
    for (int d = 0; d <= k; ++d)
        for (const auto& face : faces_[static_cast<std::size_t>(d)]) {
            const auto vs = face.vertex_set();
            const std::size_t id = global_id(face);
            for (std::size_t c : cubes_at_vertex[vs.front()]) {
                const auto cvs = cubes_[c].vertex_set();
                if (std::includes(cvs.begin(), cvs.end(), vs.begin(), vs.end()) &&
                    !faces_of_cube[c].count(id))
                    throw ValidationError("face " + join_labels(labels_of(face.corners)) +
                                          " sits inside cube " +
                                          join_labels(labels_of(cubes_[c].corners)) +
                                          " without being one of its faces");
            }
        }
}

const std::vector<Cube>& CubicalComplex::faces(int k) const {
    static const std::vector<Cube> none;
    if (k < 0 || k > dim_) return none;
    return faces_[static_cast<std::size_t>(k)];
}

std::vector<std::size_t> CubicalComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& level : faces_) f.push_back(level.size());
    return f;
}

std::optional<std::size_t> CubicalComplex::cube_index(const VertexSet& vs) const {
    auto it = std::lower_bound(cubes_.begin(), cubes_.end(), vs,
                               [](const Cube& c, const VertexSet& s) { return c.vertex_set() < s; });
    if (it == cubes_.end() || it->vertex_set() != vs) return std::nullopt;
    return static_cast<std::size_t>(it - cubes_.begin());
}

std::optional<std::size_t> CubicalComplex::face_index(const VertexSet& vs) const {
    if (vs.empty() || !std::has_single_bit(vs.size())) return std::nullopt;
    const auto d = static_cast<std::size_t>(std::countr_zero(vs.size()));
    if (d >= face_lookup_.size()) return std::nullopt;
    auto it = face_lookup_[d].find(vs);
    if (it == face_lookup_[d].end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> CubicalComplex::labels_of(const std::vector<Vertex>& corners) const {
    std::vector<std::string> out;
    for (Vertex v : corners) out.push_back(label(v));
    return out;
}

// ---------------------------------------------------------------------------
// Posets and skeleta

int Poset::height() const {
    int h = 0;
    for (int r : rank) h = std::max(h, r + 1);
    return h;
}

std::vector<std::size_t> Poset::rank_counts() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(height()), 0);
    for (int r : rank) ++counts[static_cast<std::size_t>(r)];
    return counts;
}

FacePoset face_poset(const SimplicialComplex& k) {
    FacePoset fp;
    std::vector<std::size_t> offset;
    for (int d = 0; d <= k.dim(); ++d) {
        offset.push_back(fp.elements.size());
        for (const auto& f : k.faces(d)) {
            fp.elements.push_back(f);
            fp.poset.rank.push_back(d);
        }
    }
    fp.poset.covers.assign(fp.elements.size(), {});
    for (std::size_t i = 0; i < fp.elements.size(); ++i) {
        const auto& f = fp.elements[i];
        if (f.size() < 2) continue;
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            VertexSet sub;
            for (std::size_t j = 0; j < f.size(); ++j)
                if (j != drop) sub.push_back(f[j]);
            const auto d = static_cast<std::size_t>(sub.size() - 1);
            fp.poset.covers[offset[d] + *k.face_index(sub)].push_back(i);
        }
    }
    for (auto& c : fp.poset.covers) std::sort(c.begin(), c.end());
    return fp;
}

FacePoset face_poset(const CubicalComplex& k) {
    FacePoset fp;
    std::vector<std::size_t> offset;
    for (int d = 0; d <= k.dim(); ++d) {
        offset.push_back(fp.elements.size());
        for (const auto& f : k.faces(d)) {
            fp.elements.push_back(f.vertex_set());
            fp.poset.rank.push_back(d);
        }
    }
    fp.poset.covers.assign(fp.elements.size(), {});
    for (int d = 1; d <= k.dim(); ++d) {
        const auto& level = k.faces(d);
        for (std::size_t i = 0; i < level.size(); ++i) {
            const unsigned full = (1u << d) - 1;
            for (int j = 0; j < d; ++j)
                for (unsigned side = 0; side < 2; ++side) {
                    Cube sub = cube_face(level[i], full & ~(1u << j), side << j);
                    const auto sd = static_cast<std::size_t>(d - 1);
                    fp.poset.covers[offset[sd] + *k.face_index(sub.vertex_set())].push_back(
                        offset[static_cast<std::size_t>(d)] + i);
                }
        }
    }
    for (auto& c : fp.poset.covers) std::sort(c.begin(), c.end());
    return fp;
}

SimplicialComplex skeleton(const SimplicialComplex& k, int dim) {
    if (dim < 0 || dim > k.dim())
        throw ValidationError("skeleton dimension " + std::to_string(dim) + " outside [0," +
                              std::to_string(k.dim()) + "]");
    std::vector<std::vector<Vertex>> facets(k.faces(dim).begin(), k.faces(dim).end());
    for (const auto& f : k.facets())
        if (static_cast<int>(f.size()) - 1 < dim) facets.push_back(f);
    return SimplicialComplex::from_indexed(k.vertices().labels(), facets);
}

CubicalComplex skeleton(const CubicalComplex& k, int dim) {
    if (dim < 0 || dim > k.dim())
        throw ValidationError("skeleton dimension " + std::to_string(dim) + " outside [0," +
                              std::to_string(k.dim()) + "]");
    std::vector<std::vector<Vertex>> cubes;
    for (const auto& c : k.faces(dim)) cubes.push_back(c.corners);
    return CubicalComplex::from_indexed(k.vertices().labels(), cubes);
}

// ---------------------------------------------------------------------------
// Maps

VertexMap resolve_map(const VertexTable& source, const VertexTable& target,
                      const std::map<std::string, std::string>& labels) {
    VertexMap f;
    f.image.resize(source.size());
    std::vector<bool> seen(source.size(), false);
    for (const auto& [from, to] : labels) {
        const Vertex s = source.at(from);
        f.image[s] = target.at(to);
        seen[s] = true;
    }
    for (std::size_t v = 0; v < source.size(); ++v)
        if (!seen[v])
            throw ValidationError("vertex '" + source.label(static_cast<Vertex>(v)) +
                                  "' has no image");
    return f;
}

std::map<std::string, std::string> labels_of(const VertexTable& source, const VertexTable& target,
                                             const VertexMap& f) {
    std::map<std::string, std::string> out;
    for (std::size_t v = 0; v < f.image.size(); ++v)
        out.emplace(source.label(static_cast<Vertex>(v)), target.label(f.image[v]));
    return out;
}

bool is_simplicial(const SimplicialComplex& source, const SimplicialComplex& target,
                   const VertexMap& f) {
    if (f.image.size() != source.num_vertices()) return false;
    for (const auto& facet : source.facets()) {
        VertexSet img;
        for (Vertex v : facet) img.push_back(f.image[v]);
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        if (!target.contains(img)) return false;
    }
    return true;
}

bool is_nondegenerate(const SimplicialComplex& source, const SimplicialComplex& target,
                      const VertexMap& f) {
    if (f.image.size() != source.num_vertices())
        throw ValidationError("vertex map does not cover every source vertex");
    if (!is_simplicial(source, target, f)) throw ValidationError("vertex map is not simplicial");
    for (const auto& facet : source.facets()) {
        VertexSet img;
        for (Vertex v : facet) img.push_back(f.image[v]);
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
    }
    return true;
}

bool is_nondegenerate(const CubicalComplex& source, const CubicalComplex& target,
                      const VertexMap& f) {
    if (f.image.size() != source.num_vertices())
        throw ValidationError("vertex map does not cover every source vertex");
    if (source.dim() != target.dim()) return false;
    for (const auto& cube : source.cubes()) {
        VertexSet img;
        for (Vertex v : cube.corners) img.push_back(f.image[v]);
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
        auto idx = target.cube_index(img);
        if (!idx) return false;
        const Cube& dst = target.cubes()[*idx];
        for (std::size_t i = 0; i < cube.corners.size(); ++i)
            for (int j = 0; j < cube.dim; ++j) {
                const int a = dst.corner_of(f.image[cube.corners[i]]);
                const int b = dst.corner_of(f.image[cube.corners[i ^ (std::size_t{1} << j)]]);
                if (!std::has_single_bit(static_cast<unsigned>(a ^ b))) return false;
            }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Graph helpers

bool Graph::adjacent(Vertex a, Vertex b) const {
    const auto& n = adjacency.at(a);
    return std::binary_search(n.begin(), n.end(), b);
}

Graph one_skeleton_graph(const SimplicialComplex& k) {
    Graph g;
    g.adjacency.assign(k.num_vertices(), {});
    for (const auto& e : k.faces(1)) {
        g.adjacency[e[0]].push_back(e[1]);
        g.adjacency[e[1]].push_back(e[0]);
    }
    for (auto& n : g.adjacency) std::sort(n.begin(), n.end());
    return g;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    // Bron-Kerbosch with pivoting on sorted vectors.
    std::function<void(VertexSet&, VertexSet, VertexSet)> expand = [&](VertexSet& r, VertexSet p,
                                                                        VertexSet x) {
        if (p.empty() && x.empty()) {
            VertexSet clique = r;
            std::sort(clique.begin(), clique.end());
            out.push_back(std::move(clique));
            return;
        }
        Vertex pivot = p.empty() ? x.front() : p.front();
        std::size_t best = 0;
        for (const auto* set : {&p, &x})
            for (Vertex u : *set) {
                std::size_t cnt = 0;
                for (Vertex w : p) cnt += g.adjacent(u, w);
                if (cnt > best) {
                    best = cnt;
                    pivot = u;
                }
            }
        VertexSet candidates;
        for (Vertex v : p)
            if (!g.adjacent(pivot, v)) candidates.push_back(v);
        for (Vertex v : candidates) {
            const auto& nb = g.adjacency[v];
            VertexSet p2, x2;
            std::set_intersection(p.begin(), p.end(), nb.begin(), nb.end(), std::back_inserter(p2));
            std::set_intersection(x.begin(), x.end(), nb.begin(), nb.end(), std::back_inserter(x2));
            r.push_back(v);
            expand(r, std::move(p2), std::move(x2));
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.insert(std::upper_bound(x.begin(), x.end(), v), v);
        }
    };
    VertexSet r;
    VertexSet p(g.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<Vertex>(i);
    expand(r, p, {});
    std::sort(out.begin(), out.end());
    return out;
}

bool is_flag(const SimplicialComplex& k) {
    if (k.empty()) return true;
    for (const auto& clique : maximal_cliques(one_skeleton_graph(k)))
        if (!k.contains(clique)) return false;
    return true;
}

SimplicialComplex glue(const SimplicialComplex& k1, const SimplicialComplex& k2,
                       const std::map<std::string, std::string>& identification) {
    std::vector<std::optional<Vertex>> forward(k1.num_vertices());
    std::vector<std::optional<Vertex>> backward(k2.num_vertices());
    for (const auto& [a, b] : identification) {
        const Vertex u = k1.vertices().at(a);
        const Vertex v = k2.vertices().at(b);
        if (backward[v])
            throw ValidationError("identification is not injective at '" + b + "'");
        forward[u] = v;
        backward[v] = u;
    }
    // The identified vertex sets must span isomorphic induced subcomplexes.
    auto check = [](const SimplicialComplex& from, const SimplicialComplex& to,
                    const std::vector<std::optional<Vertex>>& map, const char* side) {
        for (int d = 0; d <= from.dim(); ++d)
            for (const auto& f : from.faces(d)) {
                VertexSet img;
                bool inside = true;
                for (Vertex v : f) {
                    if (!map[v]) {
                        inside = false;
                        break;
                    }
                    img.push_back(*map[v]);
                }
                if (!inside) continue;
                std::sort(img.begin(), img.end());
                if (!to.contains(img))
                    throw ValidationError(std::string("identified parts are not isomorphic: face ") +
                                          join_labels(from.labels_of(f)) + " of the " + side +
                                          " complex has no counterpart");
            }
    };
    check(k1, k2, forward, "first");
    check(k2, k1, backward, "second");

    std::set<std::string> used(k1.vertices().labels().begin(), k1.vertices().labels().end());
    std::vector<std::string> name2(k2.num_vertices());
    for (std::size_t v = 0; v < k2.num_vertices(); ++v) {
        if (backward[v]) {
            name2[v] = k1.label(*backward[v]);
            continue;
        }
        std::string name = k2.label(static_cast<Vertex>(v));
        while (used.count(name)) name += "'";
        used.insert(name);
        name2[v] = name;
    }
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : k1.facets()) facets.push_back(k1.labels_of(f));
    for (const auto& f : k2.facets()) {
        std::vector<std::string> labels;
        for (Vertex v : f) labels.push_back(name2[v]);
        facets.push_back(std::move(labels));
    }
    return SimplicialComplex::from_facets(facets);
}

}  // namespace holonomy
