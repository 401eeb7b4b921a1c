#pragma once

// Signed-permutation form of cubical projectivities and the invariants built
// on its parity: I(K), the local and global closed-chain lengths Z, the
// combinatorial curvature CC(K), the embedding obstruction and bubble moves.
//
// Each stored cube's corner order fixes a frame: axis j pairs the {bit j = 0}
// facet with the {bit j = 1} facet.  The parity of a flip is taken relative to
// the stored frames of its two cubes.  Only loop parities are intrinsic, but
// since parity is a homomorphism to Z/2 the parity of a loop is the sum of
// its flip parities, whatever frames are stored.
//
// The even-parity subgroup BC_k^even is exactly the kernel of the parity
// homomorphism, so "the holonomy group lies in BC_k^even" is equivalent to
// "every generator has parity 0", and I(K) reduces to 2-colouring the ridge
// graph with parity-labelled edges.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holonomy/complex.hpp"
#include "holonomy/groupoid.hpp"

namespace holonomy {

/// Signed k x k permutation matrix: column i has its single nonzero entry
/// sign[i] in row perm[i].
struct SignedPermMatrix {
    std::vector<int> perm;
    std::vector<int> sign;

    int size() const { return static_cast<int>(perm.size()); }
    int entry(int row, int col) const;
    std::vector<std::vector<int>> rows() const;

    static SignedPermMatrix identity(int k);
    /// Throws ValidationError unless `rows` is a signed permutation matrix.
    static SignedPermMatrix from_rows(const std::vector<std::vector<int>>& rows);

    friend SignedPermMatrix operator*(const SignedPermMatrix& a, const SignedPermMatrix& b);
    friend bool operator==(const SignedPermMatrix&, const SignedPermMatrix&) = default;
};

/// Matrix of a cube isomorphism given as a corner position map.  Throws
/// ValidationError if the map is not a cube isomorphism.
SignedPermMatrix signed_matrix(const Perm& corner_map);
SignedPermMatrix signed_matrix(const RidgeGraph& g, const Projectivity& p);

/// Number of -1 entries mod 2.
int parity(const SignedPermMatrix& m);

/// Parity of the flip a -> b relative to the stored frames.
int flip_parity(const RidgeGraph& g, std::size_t a, std::size_t b);

int invariant_I(const RidgeGraph& g);
int invariant_I(const CubicalComplex& k);

/// Shortest closed facet chain through a cube with odd holonomy.
struct ClosedChain {
    std::optional<std::size_t> length;  // number of flips; empty means infinity
    std::vector<std::size_t> facets;    // witness chain, first == last
    std::size_t distinct_cubes() const;
};

ClosedChain local_Z(const RidgeGraph& g, std::size_t sigma);

struct CurvatureReport {
    int invariant = 0;
    std::optional<std::size_t> z_chain;
    std::vector<std::size_t> witness;
    std::size_t witness_distinct = 0;

    /// "1/m", or "0" when no odd chain exists.
    std::string cc_text() const;
    /// CC(K) > CC(other) as rationals 1/Z.
    bool curvature_exceeds(const CurvatureReport& other) const;
};

CurvatureReport curvature_CC(const RidgeGraph& g);
CurvatureReport curvature_CC(const CubicalComplex& k);

/// Exact minimum number of top cubes of a sub-complex with I = 1, by
/// enumeration of top-cube subsets.  Refuses (SizeLimitError) above
/// kSubcomplexZLimit top cubes.
inline constexpr std::size_t kSubcomplexZLimit = 20;
std::optional<std::size_t> subcomplex_Z(const CubicalComplex& k);

struct EmbedVerdict {
    bool obstructed = false;
    CurvatureReport source;
    CurvatureReport target;
};

/// Necessary condition for a cubical immersion K -> L: CC(K) <= CC(L).
/// "obstructed" certifies that no immersion exists; otherwise inconclusive.
EmbedVerdict embed_obstruction(const CubicalComplex& k, const CubicalComplex& l);

/// Replaces the top cubes `ball` (vertex-label lists) by the complementary
/// facets of the boundary of the (k+1)-cube.  `embed` sends every vertex of
/// the ball to a corner index of I^{k+1}; corners outside the image become
/// fresh vertices.  Throws ValidationError if the identification is not an
/// isomorphism onto boundary facets or if the rest of K meets the ball
/// outside the boundary shared by the two complementary balls.
CubicalComplex bubble_move(const CubicalComplex& k, const std::vector<std::vector<std::string>>& ball,
                           const std::map<std::string, unsigned>& embed);

}  // namespace holonomy
