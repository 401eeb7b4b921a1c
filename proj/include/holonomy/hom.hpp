#pragma once

// Hom(K, L): cells are multivalued vertex maps eta assigning each vertex of K
// a nonempty set of vertices of L, such that
//   (1) eta(u) and eta(v) are disjoint for every edge {u, v} of K, and
//   (2) for every simplex of K, every choice of one vertex from each block
//       eta(v) spans a simplex of L (the join of the blocks lies in L).
// The cell c_eta is the product of the simplices on the blocks, so its
// dimension is sum (|eta(v)| - 1) and its faces are obtained by shrinking
// blocks.  Blocks are bitmasks over the vertex indices of L (|V(L)| <= 64).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "holonomy/complex.hpp"
#include "holonomy/groupoid.hpp"

namespace holonomy {

using Block = std::uint64_t;

struct HomCell {
    std::vector<Block> eta;  // indexed by vertex of K
    int dim = 0;
};

struct HomLimits {
    /// Budget on |V(K)| * log2 |V(L)|.
    double search_bits = 40.0;
    /// Maximum number of cells; HOLONOMY_MAX_CELLS overrides the default.
    std::size_t max_cells = 500000;

    static HomLimits from_environment();
};

class HomComplex {
public:
    const SimplicialComplex& source() const { return source_; }
    const SimplicialComplex& target() const { return target_; }

    /// Cells ordered by dimension, then by enumeration order.
    const std::vector<HomCell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    int dim() const;
    std::vector<std::size_t> f_vector() const;
    std::optional<std::size_t> find(const std::vector<Block>& eta) const;

    /// Covering relations: eta < eta' when eta' grows one block by one vertex.
    Poset poset() const;

    /// Label form of a cell: source vertex label -> sorted target labels.
    std::map<std::string, std::vector<std::string>> labels_of(std::size_t cell) const;

    friend HomComplex hom_complex(const SimplicialComplex&, const SimplicialComplex&, const HomLimits&);

private:
    struct EtaHash {
        std::size_t operator()(const std::vector<Block>& eta) const noexcept;
    };

    SimplicialComplex source_;
    SimplicialComplex target_;
    std::vector<HomCell> cells_;
    std::unordered_map<std::vector<Block>, std::size_t, EtaHash> index_;
};

/// Complete cell enumeration by backtracking over the vertices of K in index
/// order, candidate blocks by size then lexicographically.  Throws
/// SizeLimitError when a limit binds.
HomComplex hom_complex(const SimplicialComplex& k, const SimplicialComplex& l,
                       const HomLimits& limits = HomLimits::from_environment());

/// All non-degenerate simplicial maps K -> L (the 0-cells), in the same order.
std::vector<VertexMap> hom0(const SimplicialComplex& k, const SimplicialComplex& l);
/// The first non-degenerate map K -> L in that order, if any.
std::optional<VertexMap> first_hom0(const SimplicialComplex& k, const SimplicialComplex& l);
bool hom0_exists(const SimplicialComplex& k, const SimplicialComplex& l);

/// Cell-to-cell map between two Hom complexes.
struct CellMap {
    std::vector<std::size_t> image;
    friend bool operator==(const CellMap&, const CellMap&) = default;
};

/// f : K -> K' non-degenerate gives Hom(K', L) -> Hom(K, L), eta -> eta o f.
/// `from` must be Hom(K', L) and `to` Hom(K, L).  Throws ValidationError if f
/// is degenerate.
CellMap induced_precompose(const HomComplex& from, const HomComplex& to, const VertexMap& f);
/// g : L -> L' non-degenerate gives Hom(K, L) -> Hom(K, L'), eta -> g o eta.
CellMap induced_postcompose(const HomComplex& from, const HomComplex& to, const VertexMap& g);
/// Composition: first a, then b.
CellMap compose(const CellMap& a, const CellMap& b);
bool is_order_preserving(const HomComplex& from, const HomComplex& to, const CellMap& m);

/// The full simplex on the vertices of a facet, as its own complex.
SimplicialComplex facet_simplex(const RidgeGraph& g, std::size_t facet);

/// Parallel transport along a facet path p = (s_0, ..., s_n) of K: the cellular
/// isomorphism Hom(s_n, L) -> Hom(s_0, L), eta -> eta o p, where p is the
/// composed projectivity.  `last` and `first` are the two fibres.
CellMap transport(const RidgeGraph& g, const std::vector<std::size_t>& path, const HomComplex& last,
                  const HomComplex& first);

/// Order complex of a poset: vertices are element indices (labels "0", "1",
/// ...), facets the maximal chains.
SimplicialComplex order_complex(const Poset& p);

/// Simplicial map between order complexes induced by a cell map.
VertexMap order_complex_map(const CellMap& m);

}  // namespace holonomy
