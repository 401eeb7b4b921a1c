#include "holonomy/cubical.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

namespace holonomy {

int SignedPermMatrix::entry(int row, int col) const {
    return perm.at(col) == row ? sign.at(col) : 0;
}

std::vector<std::vector<int>> SignedPermMatrix::rows() const {
    std::vector<std::vector<int>> out(perm.size(), std::vector<int>(perm.size(), 0));
    for (std::size_t i = 0; i < perm.size(); ++i) out[perm[i]][i] = sign[i];
    return out;
}

SignedPermMatrix SignedPermMatrix::identity(int k) {
    SignedPermMatrix m;
    for (int i = 0; i < k; ++i) {
        m.perm.push_back(i);
        m.sign.push_back(1);
    }
    return m;
}

SignedPermMatrix SignedPermMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const int k = static_cast<int>(rows.size());
    SignedPermMatrix m;
    m.perm.assign(k, -1);
    m.sign.assign(k, 0);
    std::vector<bool> row_used(k, false);
    for (int r = 0; r < k; ++r) {
        if (static_cast<int>(rows[r].size()) != k) throw ValidationError("matrix is not square");
        for (int c = 0; c < k; ++c) {
            const int v = rows[r][c];
            if (v == 0) continue;
            if ((v != 1 && v != -1) || m.perm[c] != -1 || row_used[r])
                throw ValidationError("not a signed permutation matrix");
            m.perm[c] = r;
            m.sign[c] = v;
            row_used[r] = true;
        }
    }
    for (int c = 0; c < k; ++c)
        if (m.perm[c] == -1) throw ValidationError("not a signed permutation matrix");
    return m;
}

SignedPermMatrix operator*(const SignedPermMatrix& a, const SignedPermMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("matrix sizes differ");
    SignedPermMatrix m;
    m.perm.resize(b.perm.size());
    m.sign.resize(b.perm.size());
    for (std::size_t i = 0; i < b.perm.size(); ++i) {
        m.perm[i] = a.perm[b.perm[i]];
        m.sign[i] = a.sign[b.perm[i]] * b.sign[i];
    }
    return m;
}

SignedPermMatrix signed_matrix(const Perm& corner_map) {
    const std::size_t n = corner_map.size();
    if (n == 0 || !std::has_single_bit(n)) throw ValidationError("corner map size is not a power of two");
    const int k = std::countr_zero(n);
    SignedPermMatrix m;
    const unsigned c0 = corner_map[0];
    std::vector<unsigned> step(k);
    for (int i = 0; i < k; ++i) {
        const unsigned diff = corner_map[std::size_t{1} << i] ^ c0;
        if (!std::has_single_bit(diff)) throw ValidationError("corner map is not a cube isomorphism");
        const int j = std::countr_zero(diff);
        step[i] = diff;
        m.perm.push_back(j);
        m.sign.push_back(((c0 >> j) & 1u) ? -1 : 1);
    }
    for (std::size_t x = 0; x < n; ++x) {
        unsigned expect = c0;
        for (int i = 0; i < k; ++i)
            if (x & (std::size_t{1} << i)) expect ^= step[i];
        if (corner_map[x] != expect) throw ValidationError("corner map is not a cube isomorphism");
    }
    std::vector<int> seen = m.perm;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw ValidationError("corner map is not a cube isomorphism");
    return m;
}

SignedPermMatrix signed_matrix(const RidgeGraph& g, const Projectivity& p) {
    if (g.kind != CellKind::cube) throw ValidationError("signed matrices need a cubical complex");
    return signed_matrix(p.image);
}

int parity(const SignedPermMatrix& m) {
    int n = 0;
    for (int s : m.sign) n += s < 0;
    return n & 1;
}

int flip_parity(const RidgeGraph& g, std::size_t a, std::size_t b) {
    return parity(signed_matrix(g, flip(g, a, b)));
}

namespace {

/// Parity label of every directed ridge-graph edge, aligned with adjacency.
std::vector<std::vector<int>> edge_parities(const RidgeGraph& g) {
    if (g.kind != CellKind::cube) throw ValidationError("parity invariants need a cubical complex");
    std::vector<std::vector<int>> out(g.size());
    for (std::size_t a = 0; a < g.size(); ++a)
        for (const auto& e : g.adjacency[a]) out[a].push_back(parity(signed_matrix(e.flip)));
    return out;
}

}  // namespace

int invariant_I(const RidgeGraph& g) {
    const auto par = edge_parities(g);
    std::vector<int> colour(g.size(), -1);
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            const auto x = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < g.adjacency[x].size(); ++i) {
                const auto y = g.adjacency[x][i].to;
                const int want = colour[x] ^ par[x][i];
                if (colour[y] == -1) {
                    colour[y] = want;
                    queue.push_back(y);
                } else if (colour[y] != want) {
                    return 1;
                }
            }
        }
    }
    return 0;
}

int invariant_I(const CubicalComplex& k) { return invariant_I(ridge_graph(k)); }

std::size_t ClosedChain::distinct_cubes() const {
    std::set<std::size_t> s(facets.begin(), facets.end());
    return s.size();
}

namespace {

ClosedChain local_Z_with(const RidgeGraph& g, const std::vector<std::vector<int>>& par, std::size_t sigma) {
    // BFS on the parity double cover from (sigma, 0) to (sigma, 1).
    const std::size_t n = g.size();
    const std::size_t none = 2 * n;
    std::vector<std::size_t> prev(2 * n, none);
    std::vector<bool> seen(2 * n, false);
    const std::size_t start = 2 * sigma;
    const std::size_t goal = 2 * sigma + 1;
    seen[start] = true;
    std::deque<std::size_t> queue{start};
    while (!queue.empty() && !seen[goal]) {
        const auto state = queue.front();
        queue.pop_front();
        const std::size_t x = state / 2;
        const int p = static_cast<int>(state % 2);
        for (std::size_t i = 0; i < g.adjacency[x].size(); ++i) {
            const std::size_t next = 2 * g.adjacency[x][i].to + static_cast<std::size_t>(p ^ par[x][i]);
            if (seen[next]) continue;
            seen[next] = true;
            prev[next] = state;
            queue.push_back(next);
        }
    }
    ClosedChain out;
    if (!seen[goal]) return out;
    for (std::size_t s = goal; s != none; s = prev[s]) out.facets.push_back(s / 2);
    std::reverse(out.facets.begin(), out.facets.end());
    out.length = out.facets.size() - 1;
    return out;
}

}  // namespace

ClosedChain local_Z(const RidgeGraph& g, std::size_t sigma) {
    if (sigma >= g.size()) throw ValidationError("base is not a top cube");
    return local_Z_with(g, edge_parities(g), sigma);
}

std::string CurvatureReport::cc_text() const {
    return z_chain ? "1/" + std::to_string(*z_chain) : "0";
}

bool CurvatureReport::curvature_exceeds(const CurvatureReport& other) const {
    if (!z_chain) return false;
    if (!other.z_chain) return true;
    return *z_chain < *other.z_chain;
}

CurvatureReport curvature_CC(const RidgeGraph& g) {
    const auto par = edge_parities(g);
    CurvatureReport r;
    for (std::size_t s = 0; s < g.size(); ++s) {
        ClosedChain c = local_Z_with(g, par, s);
        if (c.length && (!r.z_chain || *c.length < *r.z_chain)) {
            r.z_chain = c.length;
            r.witness_distinct = c.distinct_cubes();
            r.witness = std::move(c.facets);
        }
    }
    r.invariant = r.z_chain ? 1 : 0;
    return r;
}

CurvatureReport curvature_CC(const CubicalComplex& k) { return curvature_CC(ridge_graph(k)); }

std::optional<std::size_t> subcomplex_Z(const CubicalComplex& k) {
    const RidgeGraph g = ridge_graph(k);
    const std::size_t n = g.size();
    if (n > kSubcomplexZLimit)
        throw SizeLimitError("exact subcomplex Z is limited to " + std::to_string(kSubcomplexZLimit) +
                             " top cubes");
    const auto par = edge_parities(g);
    std::optional<std::size_t> best;
    const std::uint32_t total = std::uint32_t{1} << n;
    std::vector<int> colour(n);
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (best && size >= *best) continue;
        // Connected with an inconsistent parity colouring?
        std::fill(colour.begin(), colour.end(), -1);
        const std::size_t s = static_cast<std::size_t>(std::countr_zero(mask));
        colour[s] = 0;
        std::size_t reached = 1;
        bool odd = false;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            const auto x = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < g.adjacency[x].size(); ++i) {
                const auto y = g.adjacency[x][i].to;
                if (!(mask & (std::uint32_t{1} << y))) continue;
                const int want = colour[x] ^ par[x][i];
                if (colour[y] == -1) {
                    colour[y] = want;
                    ++reached;
                    queue.push_back(y);
                } else if (colour[y] != want) {
                    odd = true;
                }
            }
        }
        if (odd && reached == size) best = size;
    }
    return best;
}

EmbedVerdict embed_obstruction(const CubicalComplex& k, const CubicalComplex& l) {
    if (k.dim() != l.dim()) throw ValidationError("complexes have different dimensions");
    EmbedVerdict v;
    v.source = curvature_CC(k);
    v.target = curvature_CC(l);
    v.obstructed = v.source.curvature_exceeds(v.target);
    return v;
}

CubicalComplex bubble_move(const CubicalComplex& k, const std::vector<std::vector<std::string>>& ball,
                           const std::map<std::string, unsigned>& embed) {
    const int d = k.dim();
    const unsigned big_corners = 1u << (d + 1);
    if (ball.empty()) throw ValidationError("bubble move needs at least one cube");

    // Ball cubes of K.
    std::vector<bool> in_ball(k.cubes().size(), false);
    std::set<Vertex> ball_vertices;
    for (const auto& labels : ball) {
        VertexSet vs;
        for (const auto& l : labels) {
            auto v = k.vertices().find(l);
            if (!v) throw ValidationError("unknown vertex " + l);
            vs.push_back(*v);
        }
        std::sort(vs.begin(), vs.end());
        auto idx = k.cube_index(vs);
        if (!idx) throw ValidationError("bubble cell is not a top cube");
        if (in_ball[*idx]) throw ValidationError("bubble cell listed twice");
        in_ball[*idx] = true;
        ball_vertices.insert(vs.begin(), vs.end());
    }

    // Corner assignment, injective and defined exactly on the ball.
    std::vector<std::optional<Vertex>> corner_owner(big_corners);
    std::map<Vertex, unsigned> corner_of;
    for (const auto& [label, corner] : embed) {
        auto v = k.vertices().find(label);
        if (!v || !ball_vertices.count(*v)) throw ValidationError("embedding names " + label + ", not a ball vertex");
        if (corner >= big_corners) throw ValidationError("corner index out of range for " + label);
        if (corner_owner[corner]) throw ValidationError("embedding is not injective");
        corner_owner[corner] = *v;
        corner_of[*v] = corner;
    }
    for (Vertex v : ball_vertices)
        if (!corner_of.count(v)) throw ValidationError("embedding misses vertex " + k.label(v));

    // Boundary facets of I^{d+1}: fix axis a to value s.
    const unsigned full = big_corners - 1;
    Cube big{d + 1, {}};
    for (unsigned i = 0; i < big_corners; ++i) big.corners.push_back(i);
    struct BigFacet {
        Cube cube;
        unsigned mask;  // corners as a bitmask over I^{d+1}
    };
    std::vector<BigFacet> boundary;
    for (int a = 0; a <= d; ++a)
        for (unsigned s = 0; s < 2; ++s) {
            Cube f = cube_face(big, full & ~(1u << a), s << a);
            unsigned mask = 0;
            for (Vertex c : f.corners) mask |= 1u << c;
            boundary.push_back({std::move(f), mask});
        }

    std::vector<bool> used(boundary.size(), false);
    for (std::size_t c = 0; c < k.cubes().size(); ++c) {
        if (!in_ball[c]) continue;
        const Cube& cube = k.cubes()[c];
        unsigned mask = 0;
        for (Vertex v : cube.corners) mask |= 1u << corner_of[v];
        auto it = std::find_if(boundary.begin(), boundary.end(), [&](const BigFacet& f) { return f.mask == mask; });
        if (it == boundary.end()) throw ValidationError("bubble cell does not land on a facet of the cube boundary");
        // Cube edges must go to cube edges.
        for (std::size_t x = 0; x < cube.corners.size(); ++x)
            for (int j = 0; j < d; ++j) {
                const unsigned a = corner_of[cube.corners[x]];
                const unsigned b = corner_of[cube.corners[x ^ (std::size_t{1} << j)]];
                if (!std::has_single_bit(a ^ b)) throw ValidationError("embedding does not preserve cube edges");
            }
        used[static_cast<std::size_t>(it - boundary.begin())] = true;
    }
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; }))
        throw ValidationError("bubble covers the whole cube boundary");

    // The rest of K may meet the ball only inside the shared boundary: every
    // face of an outside cube spanned by ball vertices must be a face of the
    // boundary lying both in a used and in a complementary facet.
    const unsigned kfull = (1u << d) - 1;
    for (std::size_t c = 0; c < k.cubes().size(); ++c) {
        if (in_ball[c]) continue;
        const Cube& cube = k.cubes()[c];
        for (unsigned free = 0; free <= kfull; ++free)
            for (unsigned fixed = 0; fixed <= kfull; ++fixed) {
                if (fixed & free) continue;
                const Cube face = cube_face(cube, free, fixed);
                unsigned mask = 0;
                bool inside = true;
                for (Vertex v : face.corners) {
                    auto it = corner_of.find(v);
                    if (it == corner_of.end()) {
                        inside = false;
                        break;
                    }
                    mask |= 1u << it->second;
                }
                if (!inside) continue;
                unsigned lo = full, hi = 0;
                for (Vertex v : face.corners) {
                    lo &= corner_of[v];
                    hi |= corner_of[v];
                }
                if ((std::size_t{1} << std::popcount(lo ^ hi)) != face.corners.size())
                    throw ValidationError("embedding does not send outside faces to cube faces");
                bool in_used = false, in_rest = false;
                for (std::size_t f = 0; f < boundary.size(); ++f)
                    if ((boundary[f].mask & mask) == mask) (used[f] ? in_used : in_rest) = true;
                if (!in_used || !in_rest)
                    throw ValidationError("cube " + [&] {
                        std::string t;
                        for (const auto& l : k.labels_of(cube.corners)) t += (t.empty() ? "" : ",") + l;
                        return t;
                    }() + " meets the bubble outside its boundary");
            }
    }

    // Rebuild: outside cubes plus the complementary facets, with fresh labels
    // for corners outside the image.
    std::vector<std::string> labels = k.vertices().labels();
    std::set<std::string> taken(labels.begin(), labels.end());
    std::vector<Vertex> corner_vertex(big_corners);
    for (unsigned c = 0; c < big_corners; ++c) {
        if (corner_owner[c]) {
            corner_vertex[c] = *corner_owner[c];
            continue;
        }
        std::string name = "bub" + std::to_string(c);
        while (taken.count(name)) name += "'";
        taken.insert(name);
        corner_vertex[c] = static_cast<Vertex>(labels.size());
        labels.push_back(name);
    }
    std::vector<std::vector<Vertex>> cells;
    for (std::size_t c = 0; c < k.cubes().size(); ++c)
        if (!in_ball[c]) cells.push_back(k.cubes()[c].corners);
    for (std::size_t f = 0; f < boundary.size(); ++f) {
        if (used[f]) continue;
        std::vector<Vertex> cell;
        for (Vertex c : boundary[f].cube.corners) cell.push_back(corner_vertex[c]);
        cells.push_back(std::move(cell));
    }
    return CubicalComplex::from_indexed(labels, cells);
}

}  // namespace holonomy
