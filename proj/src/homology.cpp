#include "holonomy/homology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace holonomy {

namespace {

int permutation_sign(std::vector<Vertex>& v) {
    // Insertion sort counting transpositions; lists are short.
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    return sign;
}

SparseMatrix augmentation(std::size_t n0) {
    SparseMatrix m;
    m.rows = 1;
    m.columns.assign(n0, SparseColumn{{0u, 1}});
    return m;
}

}  // namespace

ChainComplex chain_complex_of(const SimplicialComplex& k) {
    ChainComplex c;
    if (k.empty()) return c;
    for (int q = 0; q <= k.dim(); ++q) c.sizes.push_back(k.faces(q).size());
    c.boundary.push_back(augmentation(c.sizes[0]));
    for (int q = 1; q <= k.dim(); ++q) {
        SparseMatrix m;
        m.rows = c.sizes[q - 1];
        for (const auto& s : k.faces(q)) {
            SparseColumn col;
            VertexSet face(s.size() - 1);
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::copy(s.begin(), s.begin() + static_cast<long>(i), face.begin());
                std::copy(s.begin() + static_cast<long>(i) + 1, s.end(), face.begin() + static_cast<long>(i));
                col.emplace_back(static_cast<std::uint32_t>(*k.face_index(face)), (i % 2) ? -1 : 1);
            }
            std::sort(col.begin(), col.end());
            m.columns.push_back(std::move(col));
        }
        c.boundary.push_back(std::move(m));
    }
    return c;
}

ChainComplex cellular_chain_complex(const HomComplex& h) {
    ChainComplex c;
    if (h.empty()) return c;
    const int top = h.dim();
    c.sizes.assign(static_cast<std::size_t>(top + 1), 0);
    std::vector<std::size_t> local(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) local[i] = c.sizes[static_cast<std::size_t>(h.cells()[i].dim)]++;
    c.boundary.push_back(augmentation(c.sizes[0]));
    for (int q = 1; q <= top; ++q) {
        SparseMatrix m;
        m.rows = c.sizes[static_cast<std::size_t>(q - 1)];
        c.boundary.push_back(std::move(m));
    }
    std::vector<Block> eta;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const auto& cell = h.cells()[i];
        if (cell.dim == 0) continue;
        SparseColumn col;
        eta = cell.eta;
        int prefix = 0;
        for (std::size_t v = 0; v < eta.size(); ++v) {
            const Block b = cell.eta[v];
            const int size = std::popcount(b);
            if (size >= 2) {
                int j = 0;
                for (Block rest = b; rest; rest &= rest - 1, ++j) {
                    eta[v] = b & ~(rest & -rest);
                    const int sign = ((prefix + j) % 2) ? -1 : 1;
                    col.emplace_back(static_cast<std::uint32_t>(local[*h.find(eta)]), sign);
                }
                eta[v] = b;
            }
            prefix += size - 1;
        }
        std::sort(col.begin(), col.end());
        c.boundary[static_cast<std::size_t>(cell.dim)].columns.push_back(std::move(col));
    }
    return c;
}

bool boundary_squares_to_zero(const ChainComplex& c) {
    for (std::size_t q = 1; q < c.boundary.size(); ++q) {
        const auto& outer = c.boundary[q - 1];
        for (const auto& col : c.boundary[q].columns) {
            std::vector<long long> acc(outer.rows, 0);
            for (const auto& [r, v] : col)
                for (const auto& [r2, v2] : outer.columns[r]) acc[r2] += static_cast<long long>(v) * v2;
            if (std::any_of(acc.begin(), acc.end(), [](long long x) { return x != 0; })) return false;
        }
    }
    return true;
}

bool BettiProfile::torsion_free() const {
    return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
}

std::vector<int> BettiProfile::support() const {
    std::vector<int> out;
    for (std::size_t q = 0; q < reduced_betti.size(); ++q)
        if (reduced_betti[q] != 0 || !torsion[q].empty()) out.push_back(static_cast<int>(q));
    return out;
}

bool operator==(const BettiProfile& a, const BettiProfile& b) {
    if (a.empty != b.empty) return false;
    const std::size_t n = std::max(a.reduced_betti.size(), b.reduced_betti.size());
    static const std::vector<mpz_class> none;
    for (std::size_t q = 0; q < n; ++q) {
        const long x = q < a.reduced_betti.size() ? a.reduced_betti[q] : 0;
        const long y = q < b.reduced_betti.size() ? b.reduced_betti[q] : 0;
        const auto& s = q < a.torsion.size() ? a.torsion[q] : none;
        const auto& t = q < b.torsion.size() ? b.torsion[q] : none;
        if (x != y || s != t) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Dense Smith normal form over GMP integers, optionally tracking transforms
// L * A * R = D.

namespace {

using Dense = std::vector<std::vector<mpz_class>>;

Dense identity_matrix(std::size_t n) {
    Dense m(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

struct Smith {
    Dense d;
    std::size_t rank = 0;
    bool track = false;
    Dense l, linv, r, rinv;

    std::size_t rows() const { return d.size(); }
    std::size_t cols() const { return d.empty() ? 0 : d[0].size(); }

    // row_i += c * row_j
    void add_row(std::size_t i, std::size_t j, const mpz_class& c) {
        for (auto k = 0u; k < cols(); ++k) d[i][k] += c * d[j][k];
        if (!track) return;
        for (auto k = 0u; k < rows(); ++k) l[i][k] += c * l[j][k];
        for (auto k = 0u; k < rows(); ++k) linv[k][j] -= c * linv[k][i];
    }
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(d[i], d[j]);
        if (!track) return;
        std::swap(l[i], l[j]);
        for (auto k = 0u; k < rows(); ++k) std::swap(linv[k][i], linv[k][j]);
    }
    void negate_row(std::size_t i) {
        for (auto& x : d[i]) x = -x;
        if (!track) return;
        for (auto& x : l[i]) x = -x;
        for (auto k = 0u; k < rows(); ++k) linv[k][i] = -linv[k][i];
    }
    // col_j += c * col_i
    void add_col(std::size_t j, std::size_t i, const mpz_class& c) {
        for (auto k = 0u; k < rows(); ++k) d[k][j] += c * d[k][i];
        if (!track) return;
        for (auto k = 0u; k < cols(); ++k) r[k][j] += c * r[k][i];
        for (auto k = 0u; k < cols(); ++k) rinv[i][k] -= c * rinv[j][k];
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto k = 0u; k < rows(); ++k) std::swap(d[k][i], d[k][j]);
        if (!track) return;
        for (auto k = 0u; k < cols(); ++k) std::swap(r[k][i], r[k][j]);
        std::swap(rinv[i], rinv[j]);
    }

    void run() {
        const std::size_t m = rows(), n = cols();
        if (track) {
            l = linv = identity_matrix(m);
            r = rinv = identity_matrix(n);
        }
        std::size_t t = 0;
        while (t < m && t < n) {
            // Smallest nonzero entry of the remaining block as pivot.
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (d[i][j] != 0 && (pi == m || abs(d[i][j]) < abs(d[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == m) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            while (true) {
                bool changed = false;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (d[i][t] == 0) continue;
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), d[i][t].get_mpz_t(), d[t][t].get_mpz_t());
                    add_row(i, t, -q);
                    if (d[i][t] != 0) {
                        swap_rows(t, i);
                        changed = true;
                    }
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (d[t][j] == 0) continue;
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), d[t][j].get_mpz_t(), d[t][t].get_mpz_t());
                    add_col(j, t, -q);
                    if (d[t][j] != 0) {
                        swap_cols(t, j);
                        changed = true;
                    }
                }
                if (changed) continue;
                // Pivot must divide the rest of the block.
                bool fixed = false;
                for (std::size_t i = t + 1; i < m && !fixed; ++i)
                    for (std::size_t j = t + 1; j < n; ++j)
                        if (d[i][j] % d[t][t] != 0) {
                            add_row(t, i, 1);
                            fixed = true;
                            break;
                        }
                if (!fixed) break;
            }
            if (d[t][t] < 0) negate_row(t);
            ++t;
        }
        rank = t;
    }
};

// ---------------------------------------------------------------------------
// Sparse elimination on unit pivots.

struct Overflow {};

inline long long checked_sub_mul(long long a, long long f, long long b) {
    long long p, r;
    if (__builtin_mul_overflow(f, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
    return r;
}
inline mpz_class checked_sub_mul(const mpz_class& a, const mpz_class& f, const mpz_class& b) { return a - f * b; }

inline mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }
inline mpz_class to_mpz(const mpz_class& v) { return v; }

inline bool is_unit(long long v) { return v == 1 || v == -1; }
inline bool is_unit(const mpz_class& v) { return v == 1 || v == -1; }

template <class T>
SmithSummary eliminate(const SparseMatrix& input) {
    using Entry = std::pair<std::uint32_t, T>;
    const std::size_t nrows = input.rows, ncols = input.cols();
    std::vector<std::vector<Entry>> cols(ncols);
    std::vector<std::vector<std::uint32_t>> row_cols(nrows);
    std::vector<std::uint32_t> row_count(nrows, 0);
    for (std::size_t c = 0; c < ncols; ++c)
        for (const auto& [r, v] : input.columns[c]) {
            cols[c].emplace_back(r, T(v));
            row_cols[r].push_back(static_cast<std::uint32_t>(c));
            ++row_count[r];
        }
    std::vector<char> col_dead(ncols, 0);
    std::vector<std::uint32_t> stamp(ncols, 0);
    std::uint32_t epoch = 0;
    SmithSummary out;
    std::vector<Entry> merged;

    auto pivot_on = [&](std::size_t c, std::size_t at) {
        const std::uint32_t r = cols[c][at].first;
        const T pv = cols[c][at].second;
        ++epoch;
        stamp[c] = epoch;
        for (std::uint32_t c2 : row_cols[r]) {
            if (col_dead[c2] || stamp[c2] == epoch) continue;
            stamp[c2] = epoch;
            auto& other = cols[c2];
            auto it = std::lower_bound(other.begin(), other.end(), r,
                                       [](const Entry& e, std::uint32_t row) { return e.first < row; });
            if (it == other.end() || it->first != r) continue;
            const T f = it->second * pv;  // pv = +-1, so pv^{-1} = pv
            merged.clear();
            auto a = other.begin();
            auto b = cols[c].begin();
            while (a != other.end() || b != cols[c].end()) {
                if (b == cols[c].end() || (a != other.end() && a->first < b->first)) {
                    merged.push_back(std::move(*a++));
                } else if (a == other.end() || b->first < a->first) {
                    merged.emplace_back(b->first, checked_sub_mul(T(0), f, b->second));
                    row_cols[b->first].push_back(c2);
                    ++row_count[b->first];
                    ++b;
                } else {
                    T v = checked_sub_mul(a->second, f, b->second);
                    if (v != 0) {
                        merged.emplace_back(a->first, std::move(v));
                    } else {
                        --row_count[a->first];
                    }
                    ++a;
                    ++b;
                }
            }
            other.swap(merged);
        }
        for (const auto& e : cols[c]) --row_count[e.first];
        row_cols[r].clear();
        cols[c].clear();
        col_dead[c] = 1;
        ++out.rank;
    };

    std::vector<std::size_t> order(ncols);
    bool progress = true;
    while (progress) {
        progress = false;
        order.clear();
        for (std::size_t c = 0; c < ncols; ++c)
            if (!col_dead[c] && !cols[c].empty()) order.push_back(c);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return cols[a].size() < cols[b].size(); });
        for (std::size_t c : order) {
            if (col_dead[c] || cols[c].empty()) continue;
            std::size_t best = cols[c].size();
            for (std::size_t i = 0; i < cols[c].size(); ++i)
                if (is_unit(cols[c][i].second) &&
                    (best == cols[c].size() || row_count[cols[c][i].first] < row_count[cols[c][best].first]))
                    best = i;
            if (best == cols[c].size()) continue;
            pivot_on(c, best);
            progress = true;
        }
    }

    // Dense Smith normal form of the remainder.
    std::vector<std::size_t> rest_cols;
    std::vector<std::int64_t> row_pos(nrows, -1);
    std::size_t rest_rows = 0;
    for (std::size_t c = 0; c < ncols; ++c) {
        if (col_dead[c] || cols[c].empty()) continue;
        rest_cols.push_back(c);
        for (const auto& e : cols[c])
            if (row_pos[e.first] < 0) row_pos[e.first] = static_cast<std::int64_t>(rest_rows++);
    }
    if (rest_cols.empty()) return out;
    Smith s;
    s.d.assign(rest_rows, std::vector<mpz_class>(rest_cols.size(), 0));
    for (std::size_t j = 0; j < rest_cols.size(); ++j)
        for (const auto& e : cols[rest_cols[j]]) s.d[static_cast<std::size_t>(row_pos[e.first])][j] = to_mpz(e.second);
    s.run();
    out.rank += s.rank;
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.d[i][i] != 1) out.torsion.push_back(s.d[i][i]);
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

}  // namespace

SmithSummary smith_summary(const SparseMatrix& m) {
    try {
        return eliminate<long long>(m);
    } catch (const Overflow&) {
        return eliminate<mpz_class>(m);
    }
}

BettiProfile betti(const ChainComplex& c) {
    BettiProfile b;
    if (c.empty()) {
        b.empty = true;
        return b;
    }
    const std::size_t top = c.sizes.size();
    std::vector<SmithSummary> s;
    for (const auto& m : c.boundary) s.push_back(smith_summary(m));
    for (std::size_t q = 0; q < top; ++q) {
        const std::size_t next_rank = q + 1 < top ? s[q + 1].rank : 0;
        b.reduced_betti.push_back(static_cast<long>(c.sizes[q]) - static_cast<long>(s[q].rank) -
                                  static_cast<long>(next_rank));
        b.torsion.push_back(q + 1 < top ? s[q + 1].torsion : std::vector<mpz_class>{});
    }
    return b;
}

BettiProfile betti(const SimplicialComplex& k) { return betti(chain_complex_of(k)); }
BettiProfile betti(const HomComplex& h) { return betti(cellular_chain_complex(h)); }

std::vector<std::size_t> ranks_mod2(const ChainComplex& c) {
    std::vector<std::size_t> out;
    for (const auto& m : c.boundary) {
        if (m.rows * m.cols() > (std::size_t{1} << 32))
            throw SizeLimitError("mod-2 rank is limited to 2^32 matrix entries");
        const std::size_t words = (m.rows + 63) / 64;
        std::vector<std::vector<std::uint64_t>> vecs;
        for (const auto& col : m.columns) {
            std::vector<std::uint64_t> v(words, 0);
            for (const auto& [r, x] : col)
                if (x % 2 != 0) v[r / 64] ^= std::uint64_t{1} << (r % 64);
            vecs.push_back(std::move(v));
        }
        std::size_t rank = 0;
        for (std::size_t bit = 0; bit < m.rows && rank < vecs.size(); ++bit) {
            const std::size_t w = bit / 64;
            const std::uint64_t mask = std::uint64_t{1} << (bit % 64);
            std::size_t p = rank;
            while (p < vecs.size() && !(vecs[p][w] & mask)) ++p;
            if (p == vecs.size()) continue;
            std::swap(vecs[p], vecs[rank]);
            for (std::size_t i = rank + 1; i < vecs.size(); ++i)
                if (vecs[i][w] & mask)
                    for (std::size_t k = w; k < words; ++k) vecs[i][k] ^= vecs[rank][k];
            ++rank;
        }
        out.push_back(rank);
    }
    return out;
}

std::vector<long> reduced_betti_mod2(const ChainComplex& c) {
    const auto r = ranks_mod2(c);
    std::vector<long> out;
    for (std::size_t q = 0; q < c.sizes.size(); ++q)
        out.push_back(static_cast<long>(c.sizes[q]) - static_cast<long>(r[q]) -
                      static_cast<long>(q + 1 < r.size() ? r[q + 1] : 0));
    return out;
}

bool homology_connectivity(const BettiProfile& b, int k) {
    if (b.empty) return false;
    for (int q = 0; q <= k && q < static_cast<int>(b.reduced_betti.size()); ++q)
        if (b.reduced_betti[q] != 0 || !b.torsion[q].empty()) return false;
    return true;
}

bool homology_connectivity(const SimplicialComplex& k, int degree) { return homology_connectivity(betti(k), degree); }

// ---------------------------------------------------------------------------
// Homology bases and induced maps.

namespace {

Dense to_dense(const SparseMatrix& m) {
    Dense d(m.rows, std::vector<mpz_class>(m.cols(), 0));
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& [r, v] : m.columns[c]) d[r][c] = v;
    return d;
}

/// Free part of H_q with explicit generators and a coordinate map.
struct FreeHomology {
    std::size_t n = 0;        // number of q-cells
    std::size_t kernel_start = 0;
    Dense rinv;               // from the SNF of the outgoing boundary
    std::size_t image_rank = 0;
    Dense l2;                 // from the SNF of the incoming boundary in kernel coordinates
    std::vector<std::vector<mpz_class>> generators;

    std::vector<mpz_class> coordinates(const std::vector<mpz_class>& cycle) const {
        const std::size_t z = n - kernel_start;
        std::vector<mpz_class> k(z, 0);
        for (std::size_t i = 0; i < z; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (cycle[j] != 0) k[i] += rinv[kernel_start + i][j] * cycle[j];
        std::vector<mpz_class> out;
        for (std::size_t i = image_rank; i < z; ++i) {
            mpz_class s = 0;
            for (std::size_t j = 0; j < z; ++j) s += l2[i][j] * k[j];
            out.push_back(s);
        }
        return out;
    }
};

FreeHomology free_homology(const ChainComplex& c, int q) {
    FreeHomology h;
    const auto uq = static_cast<std::size_t>(q);
    h.n = c.sizes.at(uq);
    Smith out;
    out.track = true;
    out.d = to_dense(c.boundary[uq]);
    out.run();
    h.kernel_start = out.rank;
    h.rinv = std::move(out.rinv);
    const Dense& r = out.r;
    const std::size_t z = h.n - h.kernel_start;

    // Incoming boundaries in kernel coordinates.
    Smith in;
    in.track = true;
    const std::size_t m = uq + 1 < c.boundary.size() ? c.boundary[uq + 1].cols() : 0;
    in.d.assign(z, std::vector<mpz_class>(m, 0));
    if (m > 0) {
        const auto bd = to_dense(c.boundary[uq + 1]);
        for (std::size_t i = 0; i < z; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t t = 0; t < h.n; ++t)
                    if (bd[t][j] != 0) in.d[i][j] += h.rinv[h.kernel_start + i][t] * bd[t][j];
    }
    in.run();
    h.image_rank = in.rank;
    h.l2 = std::move(in.l);
    // Generators: kernel basis times l2^{-1}, columns image_rank.. .
    for (std::size_t g = h.image_rank; g < z; ++g) {
        std::vector<mpz_class> v(h.n, 0);
        for (std::size_t i = 0; i < z; ++i) {
            if (in.linv[i][g] == 0) continue;
            for (std::size_t t = 0; t < h.n; ++t) v[t] += r[t][h.kernel_start + i] * in.linv[i][g];
        }
        h.generators.push_back(std::move(v));
    }
    return h;
}

}  // namespace

IntMatrix induced_homology_map(const SimplicialComplex& source, const SimplicialComplex& target,
                               const VertexMap& phi, int q) {
    if (!is_simplicial(source, target, phi)) throw ValidationError("map is not simplicial");
    if (q < 0) throw ValidationError("negative degree");
    const ChainComplex cs = chain_complex_of(source);
    const ChainComplex ct = chain_complex_of(target);
    if (q > cs.top()) return IntMatrix{};
    const FreeHomology hs = free_homology(cs, q);
    if (q > ct.top()) return IntMatrix(0, std::vector<mpz_class>(hs.generators.size()));
    const FreeHomology ht = free_homology(ct, q);
    const std::size_t rows = ht.generators.size();
    IntMatrix out(rows, std::vector<mpz_class>(hs.generators.size(), 0));
    const auto& faces = source.faces(q);
    for (std::size_t g = 0; g < hs.generators.size(); ++g) {
        std::vector<mpz_class> image(ht.n, 0);
        for (std::size_t i = 0; i < faces.size(); ++i) {
            if (hs.generators[g][i] == 0) continue;
            std::vector<Vertex> img;
            for (Vertex v : faces[i]) img.push_back(phi.image[v]);
            const int sign = permutation_sign(img);
            if (std::adjacent_find(img.begin(), img.end()) != img.end()) continue;
            image[*target.face_index(img)] += sign * hs.generators[g][i];
        }
        const auto coords = ht.coordinates(image);
        for (std::size_t r = 0; r < rows; ++r) out[r][g] = coords[r];
    }
    return out;
}

mpz_class degree(const SimplicialComplex& source, const SimplicialComplex& target, const VertexMap& phi, int q) {
    const IntMatrix m = induced_homology_map(source, target, phi, q);
    if (m.size() != 1 || m[0].size() != 1) throw ValidationError("degree needs rank-one homology on both sides");
    return m[0][0];
}

IntMatrix induced_homology_map(const HomComplex& from, const HomComplex& to, const CellMap& m, int q) {
    return induced_homology_map(order_complex(from.poset()), order_complex(to.poset()), order_complex_map(m), q);
}

}  // namespace holonomy
