#pragma once

// Abstract simplicial and cubical complexes given by their top cells.
//
// Vertices are stored as dense indices into a label table.  The table is
// sorted by natural label order (digit runs compare numerically), so the
// vertex index order is the canonical tie-breaker for every enumeration in
// the library.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

namespace holonomy {

using Vertex = std::uint32_t;
/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

/// Input violates a structural precondition (exit code 2 in the CLI).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Computation refused because a documented size guard was exceeded
/// (exit code 3 in the CLI).
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Natural ordering of labels: "a2" < "a10", "9" < "10".
bool label_less(std::string_view a, std::string_view b);

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept;
};

/// Sorted label table shared by both complex kinds.
class VertexTable {
public:
    VertexTable() = default;
    explicit VertexTable(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(Vertex v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<Vertex> find(std::string_view label) const;
    Vertex at(std::string_view label) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> index_;
};

class SimplicialComplex {
public:
    /// The empty complex (no vertices, no faces).
    SimplicialComplex() = default;

    /// Builds the downward closure of the given facets.  Contained facets are
    /// absorbed.  Throws ValidationError on an empty list, an empty facet or
    /// a repeated vertex inside a facet.
    static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);

    /// Same, with facets given as indices into `labels` (which need not be
    /// sorted; they are re-indexed).  Vertices listed in `labels` but used by
    /// no facet are dropped.
    static SimplicialComplex from_indexed(const std::vector<std::string>& labels,
                                          const std::vector<std::vector<Vertex>>& facets);

    const VertexTable& vertices() const { return vertices_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    const std::string& label(Vertex v) const { return vertices_.label(v); }
    bool empty() const { return facets_.empty(); }

    const std::vector<VertexSet>& facets() const { return facets_; }
    int dim() const { return static_cast<int>(faces_.size()) - 1; }
    bool is_pure() const;

    /// All k-faces in lexicographic order.
    const std::vector<VertexSet>& faces(int k) const;
    std::vector<std::size_t> f_vector() const;
    std::size_t num_faces() const;
    bool contains(const VertexSet& face) const;
    /// Position of a face inside faces(face.size()-1).
    std::optional<std::size_t> face_index(const VertexSet& face) const;

    /// Labels of a vertex set, in index order.
    std::vector<std::string> labels_of(const VertexSet& s) const;
    /// Vertex set from labels; throws ValidationError on unknown labels.
    VertexSet vertex_set(const std::vector<std::string>& labels) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

private:
    void build_faces();

    VertexTable vertices_;
    std::vector<VertexSet> facets_;
    std::vector<std::vector<VertexSet>> faces_;
    std::vector<std::unordered_map<VertexSet, std::size_t, VertexSetHash>> face_lookup_;
};

/// A k-cube cell.  corners[i] sits at binary coordinate i = sum b_j 2^j, so
/// corners whose indices differ in exactly one bit span an edge.
struct Cube {
    int dim = 0;
    std::vector<Vertex> corners;

    VertexSet vertex_set() const;
    /// Index of a vertex among the corners, or -1.
    int corner_of(Vertex v) const;
};

class CubicalComplex {
public:
    CubicalComplex() = default;

    /// Validates vertex-determinedness, the cube-poset condition on lower
    /// intervals and the semilattice condition; throws ValidationError with a
    /// message naming the offending cube otherwise.
    static CubicalComplex from_cubes(const std::vector<std::vector<std::string>>& cubes);
    static CubicalComplex from_indexed(const std::vector<std::string>& labels,
                                       const std::vector<std::vector<Vertex>>& cubes);

    const VertexTable& vertices() const { return vertices_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    const std::string& label(Vertex v) const { return vertices_.label(v); }

    int dim() const { return dim_; }
    /// Top cubes, sorted by vertex set; corner order is the stored frame.
    const std::vector<Cube>& cubes() const { return cubes_; }
    /// All k-dimensional faces, sorted by vertex set.
    const std::vector<Cube>& faces(int k) const;
    std::vector<std::size_t> f_vector() const;
    std::optional<std::size_t> cube_index(const VertexSet& vertex_set) const;
    std::optional<std::size_t> face_index(const VertexSet& vertex_set) const;
    std::vector<std::string> labels_of(const std::vector<Vertex>& corners) const;

private:
    void build_and_validate();

    VertexTable vertices_;
    int dim_ = 0;
    std::vector<Cube> cubes_;
    std::vector<std::vector<Cube>> faces_;
    std::vector<std::unordered_map<VertexSet, std::size_t, VertexSetHash>> face_lookup_;
};

using Complex = std::variant<SimplicialComplex, CubicalComplex>;

/// Faces of a single cube obtained by fixing coordinates.  `free_mask` marks
/// the coordinates that still vary; corners are listed in increasing order of
/// the free coordinates.
Cube cube_face(const Cube& cube, unsigned free_mask, unsigned fixed_bits);

/// Graded containment poset given by upward cover lists.
struct Poset {
    std::vector<std::vector<std::size_t>> covers;  // covers[x] = elements covering x
    std::vector<int> rank;

    std::size_t size() const { return covers.size(); }
    /// Number of ranks present (length of the longest chain).
    int height() const;
    std::vector<std::size_t> rank_counts() const;
};

struct FacePoset {
    std::vector<VertexSet> elements;
    Poset poset;
};

FacePoset face_poset(const SimplicialComplex& k);
FacePoset face_poset(const CubicalComplex& k);

SimplicialComplex skeleton(const SimplicialComplex& k, int dim);
CubicalComplex skeleton(const CubicalComplex& k, int dim);

/// Total vertex function between two complexes.
struct VertexMap {
    std::vector<Vertex> image;
};

/// Resolves a label-to-label map; throws ValidationError if a source vertex
/// has no image or a label is unknown.
VertexMap resolve_map(const VertexTable& source, const VertexTable& target,
                      const std::map<std::string, std::string>& labels);
std::map<std::string, std::string> labels_of(const VertexTable& source, const VertexTable& target,
                                             const VertexMap& f);

bool is_simplicial(const SimplicialComplex& source, const SimplicialComplex& target,
                   const VertexMap& f);
/// Injective on every simplex (checked on facets).  Throws ValidationError if
/// f is not a simplicial map.
bool is_nondegenerate(const SimplicialComplex& source, const SimplicialComplex& target,
                      const VertexMap& f);
/// Cubical analogue: every top cube maps bijectively onto the corners of a
/// top cube of the target, preserving cube edges.
bool is_nondegenerate(const CubicalComplex& source, const CubicalComplex& target,
                      const VertexMap& f);

bool is_flag(const SimplicialComplex& k);

/// Pushout of k1 and k2 along a partial injection V(k1) -> V(k2).  Vertices of
/// k2 keep their labels unless they clash with a k1 label, in which case a
/// prime is appended.
SimplicialComplex glue(const SimplicialComplex& k1, const SimplicialComplex& k2,
                       const std::map<std::string, std::string>& identification);

/// Undirected simple graph on vertex indices (the 1-skeleton view).
struct Graph {
    std::vector<std::vector<Vertex>> adjacency;  // sorted neighbour lists

    std::size_t size() const { return adjacency.size(); }
    bool adjacent(Vertex a, Vertex b) const;
};

Graph one_skeleton_graph(const SimplicialComplex& k);
/// All maximal cliques, each sorted, in lexicographic order.
std::vector<VertexSet> maximal_cliques(const Graph& g);

}  // namespace holonomy
