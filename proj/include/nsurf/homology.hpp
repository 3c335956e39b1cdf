#pragma once

// First homology of closed triangulations via a dual presentation reduced
// by Smith normal form.

#include "nsurf/ints.hpp"
#include "nsurf/skeleton.hpp"

#include <string>
#include <vector>

namespace nsurf {

/// A finitely generated abelian group: Z^rank + Z/d1 + ... with each
/// d_i > 1 and d_i | d_{i+1}.
struct AbelianGroup {
    int rank = 0;
    std::vector<Int> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup& o) const = default;

    /// "0", "Z", "Z/4", "Z + Z/2 + Z/6", ...
    std::string str() const;
};

/// Smith normal form diagonal of an integer matrix (non-zero invariant
/// factors, each dividing the next).  Exposed for testing.
std::vector<Int> smith_invariant_factors(std::vector<IntVec> m);

/// H1 of a closed triangulation.
///
/// Presentation: take a spanning tree of the dual graph (nodes = tetrahedra,
/// arcs = internal face classes); generators are the face classes outside
/// the tree; each edge class contributes one relation obtained by walking
/// around the edge and recording signed crossings of generator faces.
///
/// Throws std::domain_error if the triangulation has boundary.
AbelianGroup first_homology(const Triangulation& tri);

}  // namespace nsurf
