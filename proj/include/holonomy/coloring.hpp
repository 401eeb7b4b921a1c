#pragma once

// Chromatic numbers of complexes (through the 1-skeleton), test-family
// chromatic numbers, detection of Phi_d-complexes and vertex collapsibility.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holonomy/complex.hpp"
#include "holonomy/groupoid.hpp"

namespace holonomy {

struct ColoringCertificate {
    int value = 0;
    /// colour[v] in 1..value; a non-degenerate map to the simplex on value vertices.
    std::vector<int> colour;
    /// A largest clique of the 1-skeleton (the lower bound).
    VertexSet clique;
    bool clique_tight() const { return static_cast<int>(clique.size()) == value; }
};

/// Exact chromatic number: saturation-order branch and bound with a clique
/// lower bound.
ColoringCertificate chi(const Graph& g);
ColoringCertificate chi(const SimplicialComplex& k);

/// Least m with a non-degenerate map K -> Delta^{[m]}, found by searching
/// Hom_0 directly (independent of the graph search above).
int chi_by_hom0(const SimplicialComplex& k);

struct FamilyResult {
    std::optional<double> value;       // empty means infinity
    std::optional<std::size_t> index;  // test complex achieving it
    std::optional<VertexMap> witness;
};

/// Infimum of weights[i] over the test complexes T_i admitting a
/// non-degenerate map K -> T_i.
FamilyResult chi_family(const SimplicialComplex& k, const std::vector<SimplicialComplex>& tests,
                        const std::vector<double>& weights);

struct PhiVerdict {
    bool is_phi = false;
    VertexSet sigma;
    Perm tau;                              // omega restricted to sigma, as a position map
    std::optional<std::size_t> base;       // facet index of sigma
    std::vector<std::size_t> evidence;     // closed facet chain with projectivity tau
    std::string reason;
};

/// Throws ValidationError if omega is not a simplicial involution, gamma is
/// not pure of dimension >= 1, or sigma is not a facet.
PhiVerdict is_phi_complex(const SimplicialComplex& gamma, const VertexMap& omega, const VertexSet& sigma);

struct CollapseStep {
    VertexSet facet;  // facet removed
    Vertex vertex;    // its free vertex
};

struct CollapseResult {
    bool collapsible = false;
    std::vector<CollapseStep> sequence;
};

/// Searches for a sequence of elementary vertex collapses reducing a pure
/// complex to one facet: each step removes a facet F with a vertex v lying in
/// no other facet, provided F \ {v} stays inside another facet.  Exhaustive
/// (memoised over facet subsets); refuses complexes with more than 64 facets.
CollapseResult vertex_collapsible(const SimplicialComplex& k);

}  // namespace holonomy
