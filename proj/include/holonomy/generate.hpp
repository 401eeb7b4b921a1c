#pragma once

// Standard complex families.  Complete graphs and simplices use the vertex
// labels 1..n; cycles, paths and cubes are labelled from 0.

#include <cstdint>
#include <map>
#include <string>

#include "holonomy/complex.hpp"

namespace holonomy::generate {

SimplicialComplex complete_graph(int n);
SimplicialComplex cycle(int n);
/// Path graph with m vertices 0..m-1.
SimplicialComplex path(int m);
/// The d-simplex on vertices 1..d+1.
SimplicialComplex simplex(int d);
/// Boundary of the d-simplex (a (d-1)-sphere), vertices 1..d+1.
SimplicialComplex simplex_boundary(int d);
/// Clique complex of the 1-skeleton of g.
SimplicialComplex clique_complex(const SimplicialComplex& g);

/// k-skeleton of the standard cubulation of I^d; vertex i is the corner with
/// binary coordinates i.
CubicalComplex cube_skeleton(int d, int k);
/// m squares glued edge to edge in a cycle (an annulus); with `twist` the
/// closing edge is glued reversed (a Moebius band).
CubicalComplex square_ring(int m, bool twist);

/// A random tree-like d-complex: starting from a d-simplex, each new facet
/// cones a fresh vertex over a ridge of an existing facet.
SimplicialComplex random_tree_like(int facets, int d, std::uint64_t seed);

/// Dispatcher used by the CLI: family name plus integer parameters (random
/// families read "seed").
Complex by_name(const std::string& family, const std::map<std::string, int>& params);

}  // namespace holonomy::generate
