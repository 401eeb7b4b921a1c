#pragma once

// The groupoid of flips between adjacent facets of a pure complex and its
// vertex groups (groups of projectivities).
//
// A projectivity between facets a and b is stored as a position map: entry i
// is the position, inside b's vertex list, of the image of a's i-th vertex.
// For simplicial facets the vertex list is the sorted vertex set; for cubes it
// is the stored corner array, so positions are binary cube coordinates.
//
// Composition follows the left-to-right convention (x)(f*g) = g(f(x)):
// compose(f, g) first applies f, then g.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holonomy/complex.hpp"

namespace holonomy {

using Perm = std::vector<std::uint8_t>;

enum class CellKind { simplex, cube };

struct RidgeEdge {
    std::size_t to = 0;
    VertexSet ridge;
    Perm flip;  // position map from this facet to `to`
};

struct RidgeGraph {
    CellKind kind = CellKind::simplex;
    int dim = 0;
    VertexTable vertices;
    std::vector<std::vector<Vertex>> facets;
    std::vector<std::vector<RidgeEdge>> adjacency;  // sorted by `to`
    std::vector<std::size_t> component;
    std::map<VertexSet, std::size_t> lookup;

    std::size_t size() const { return facets.size(); }
    std::size_t num_edges() const;
    std::optional<std::size_t> facet_index(const VertexSet& vs) const;
    /// Facet index from labels; throws ValidationError if not a facet.
    std::size_t facet_at(const std::vector<std::string>& labels) const;
    const RidgeEdge* edge(std::size_t a, std::size_t b) const;
    std::vector<std::string> labels_of(std::size_t facet) const;
};

/// Facet adjacency through shared ridges.  Throws ValidationError for
/// non-pure or 0-dimensional input.
RidgeGraph ridge_graph(const SimplicialComplex& k);
RidgeGraph ridge_graph(const CubicalComplex& k);

struct Projectivity {
    std::size_t source = 0;
    std::size_t target = 0;
    Perm image;

    friend bool operator==(const Projectivity&, const Projectivity&) = default;
};

Projectivity identity_projectivity(const RidgeGraph& g, std::size_t facet);
/// The unique isomorphism a -> b fixing the shared ridge point-wise.
Projectivity flip(const RidgeGraph& g, std::size_t a, std::size_t b);
/// f * g: apply f, then g.  Throws std::invalid_argument if not composable.
Projectivity compose(const Projectivity& f, const Projectivity& g);
Projectivity inverse(const Projectivity& p);
Projectivity compose_path(const RidgeGraph& g, const std::vector<std::size_t>& path);
/// Vertex-label form of a projectivity.
std::map<std::string, std::string> vertex_map(const RidgeGraph& g, const Projectivity& p);

Perm identity_perm(std::size_t n);
Perm compose_perm(const Perm& first, const Perm& second);
Perm inverse_perm(const Perm& p);
int element_order(const Perm& p);
/// All elements of the group generated by `generators`, sorted.
std::vector<Perm> close_group(const std::vector<Perm>& generators, std::size_t degree);

/// Order, sorted multiset of element orders and commutativity: enough to
/// tell apart the small groups that occur here.
struct GroupSummary {
    std::size_t order = 0;
    std::vector<int> element_orders;
    bool abelian = true;

    friend bool operator==(const GroupSummary&, const GroupSummary&) = default;
};

struct HolonomyGroup {
    std::size_t base = 0;
    std::vector<Projectivity> generators;
    std::vector<std::vector<std::size_t>> generator_loops;  // facet paths realising each generator
    std::vector<Perm> elements;                           // sorted, includes the identity

    std::size_t order() const { return elements.size(); }
    bool contains(const Perm& p) const;
    GroupSummary summary() const;
};

/// Generators come from the fundamental cycles of the BFS spanning tree of
/// the base facet's component (neighbours visited in facet order).
HolonomyGroup holonomy_group(const RidgeGraph& g, std::size_t base);

/// BFS tree paths from a base facet: parent pointers and the projectivity
/// base -> facet along the tree.
struct SpanningTree {
    std::size_t base = 0;
    std::vector<std::optional<std::size_t>> parent;
    std::vector<std::optional<Projectivity>> to_facet;
    std::vector<std::size_t> order;  // BFS visiting order

    std::vector<std::size_t> path_to(std::size_t facet) const;
};
SpanningTree bfs_tree(const RidgeGraph& g, std::size_t base);

struct HolonomyEmbedding {
    std::size_t target_base = 0;
    std::vector<Perm> generator_images;  // automorphisms of the image facet
    bool contained = true;
};

/// Transfers the holonomy generators at `base` along a non-degenerate map of
/// pure complexes of equal dimension and checks that they land in the target
/// holonomy group.  Throws ValidationError if the map is degenerate on the
/// base facet or a facet image is not a facet.
HolonomyEmbedding induced_holonomy_map(const RidgeGraph& source, const RidgeGraph& target,
                                       const VertexMap& f, std::size_t base);

}  // namespace holonomy
