#pragma once

// Integer homology of simplicial complexes and Hom complexes.
//
// Chain complexes are augmented: boundary[0] is the augmentation C_0 -> Z,
// so every reported Betti number is reduced.  Ranks and torsion come from a
// sparse elimination on unit pivots followed by a dense Smith normal form of
// whatever is left; entries never overflow (machine integers are abandoned
// for GMP integers as soon as an operation would overflow).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "holonomy/complex.hpp"
#include "holonomy/hom.hpp"

namespace holonomy {

using SparseColumn = std::vector<std::pair<std::uint32_t, int>>;  // (row, value), sorted by row

struct SparseMatrix {
    std::size_t rows = 0;
    std::vector<SparseColumn> columns;

    std::size_t cols() const { return columns.size(); }
};

struct ChainComplex {
    std::vector<std::size_t> sizes;       // number of q-cells, q = 0..top
    std::vector<SparseMatrix> boundary;  // boundary[q] : C_q -> C_{q-1}; boundary[0] is the augmentation

    bool empty() const { return sizes.empty(); }
    int top() const { return static_cast<int>(sizes.size()) - 1; }
};

/// Simplices of each dimension in the order of SimplicialComplex::faces,
/// oriented by increasing vertex index.
ChainComplex chain_complex_of(const SimplicialComplex& k);
/// Cellular chains of Hom(K, L): cells of each dimension in the order of
/// HomComplex::cells, each oriented as the product of its block simplices
/// taken in source-vertex order.
ChainComplex cellular_chain_complex(const HomComplex& h);

bool boundary_squares_to_zero(const ChainComplex& c);

struct BettiProfile {
    bool empty = false;                          // the empty complex (reduced H_{-1} = Z)
    std::vector<long> reduced_betti;             // degrees 0..top
    std::vector<std::vector<mpz_class>> torsion;  // invariant factors > 1 per degree

    bool torsion_free() const;
    /// Degrees with nonzero reduced Betti number or torsion.
    std::vector<int> support() const;
    /// Equal homology; trailing degrees with no homology are ignored.
    friend bool operator==(const BettiProfile&, const BettiProfile&);
};

/// Rank and invariant factors greater than one of an integer matrix.
struct SmithSummary {
    std::size_t rank = 0;
    std::vector<mpz_class> torsion;
};
SmithSummary smith_summary(const SparseMatrix& m);

BettiProfile betti(const ChainComplex& c);
BettiProfile betti(const SimplicialComplex& k);
/// Homology of a Hom complex from its cellular chains.
BettiProfile betti(const HomComplex& h);

/// Ranks of every boundary matrix over GF(2), and the reduced mod-2 Betti
/// numbers they give.
std::vector<std::size_t> ranks_mod2(const ChainComplex& c);
std::vector<long> reduced_betti_mod2(const ChainComplex& c);

/// Homological surrogate for k-connectivity: non-empty and reduced homology
/// vanishing (including torsion) through degree k.  Necessary, not
/// sufficient: the fundamental group is not examined.
bool homology_connectivity(const BettiProfile& b, int k);
bool homology_connectivity(const SimplicialComplex& k, int degree);

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Matrix of H_q(phi) on the free parts, in the bases produced by the dense
/// Smith normal form of each side (rows: target generators, columns: source
/// generators).  Throws ValidationError if phi is not simplicial.
IntMatrix induced_homology_map(const SimplicialComplex& source, const SimplicialComplex& target,
                               const VertexMap& phi, int q);

/// Degree of a self-map of a homology sphere: the single entry of the induced
/// matrix in the top reduced degree.  Throws ValidationError otherwise.
mpz_class degree(const SimplicialComplex& source, const SimplicialComplex& target, const VertexMap& phi,
                 int q);

/// Homology map of a cellular map between Hom complexes, through the order
/// complexes of their cell posets.
IntMatrix induced_homology_map(const HomComplex& from, const HomComplex& to, const CellMap& m, int q);

}  // namespace holonomy
