#pragma once

// Geometric meaning of admissible coordinate vectors: projection/extension
// between quad-octagon and standard almost normal coordinates, joint
// conversion, Euler characteristic, cell-complex reconstruction and
// component classification.

#include "nsurf/coords.hpp"
#include "nsurf/ints.hpp"
#include "nsurf/skeleton.hpp"
#include "nsurf/triangulation.hpp"

#include <utility>
#include <vector>

namespace nsurf {

/// pi: drop the triangle coordinates of an AN_STD vector, leaving QUAD_OCT.
CoordVector project(const CoordVector& vec);

/// epsilon: the link-minimal standard extension of a QUAD_OCT vector.
///
/// For every vertex link, the matching equation across an internal face
/// determines the difference of the two adjacent triangle coordinates from
/// the quad/octagon data (an arrow label K with t(source) - t(target) = K,
/// source being the lexicographically smaller corner slot).  Values are
/// propagated over a spanning tree of each link (root: the link's least
/// corner slot), the remaining arrows are verified (cocycle condition),
/// and each link is shifted so its minimum triangle coordinate is 0.
///
/// Accepts any non-negative vector satisfying the QUAD_OCT matching
/// equations; constraint groups are not required.  Integer input yields
/// integer output.  Throws std::invalid_argument on negative input or a
/// wrong coordinate system, std::domain_error when the matching equations
/// fail (cocycle failure).
CoordVector extend_to_standard(const CoordVector& vec, const Triangulation& tri);

/// j = q - k per tetrahedron and type.  Requires q and k not both non-zero
/// in any position pair (std::invalid_argument otherwise - the map would
/// lose information).
CoordVector to_joint(const CoordVector& vec);

/// Positive entries become quadrilaterals, negative ones octagons (k = -j).
CoordVector from_joint(const CoordVector& vec);

/// The AN_STD representative of a vector in any system: STD is padded with
/// zero octagons, AN_STD returned unchanged, QUAD embedded with zero
/// octagons, and the quad-octagon family extended minimally (JOINT via
/// from_joint, then epsilon).
CoordVector an_std_form(const CoordVector& vec, const Triangulation& tri);

/// Euler characteristic as a linear functional of an AN_STD vector:
/// chi = V - E + F with F the total disc count, V the sum of edge weights
/// w(e) over edge classes, and E the number of normal arcs counted once
/// per face class.  Throws std::invalid_argument on negative entries or a
/// wrong system.
Int euler_characteristic(const CoordVector& vec, const Triangulation& tri);

/// Edge weight w(e) per edge class: how often the surface crosses the
/// edge, computed from the primary slot's disc counts (the octagon of the
/// edge's own quad type crosses twice).
IntVec edge_weights(const CoordVector& vec, const Triangulation& tri);

/// The all-triangle vector of one vertex link, in STD or AN_STD form.
CoordVector vertex_link_vector(const Skeleton& sk, int vertex_class, CoordSystem system);

enum class DiscKind { Triangle, Quad, Octagon };

/// One materialized normal/octagon disc: triangles are typed by their cut
/// corner (0..3), quads and octagons by type (1..3); copy indices order
/// parallel copies from the corner-0 pair side (triangles: from their
/// corner).
struct Disc {
    int tet = 0;
    DiscKind kind = DiscKind::Triangle;
    int type = 0;
    long long copy = 0;
};

/// The reconstructed surface as a cell complex: discs (2-cells), boundary
/// arcs glued in pairs across internal faces (1-cells), and edge-crossing
/// points (0-cells) identified through the arc gluings.
struct CellComplex {
    Triangulation tri;
    CoordVector vec;  // AN_STD source vector
    std::vector<Disc> discs;

    struct Arc {
        int disc = 0;
        int face = 0;    // face of the disc's tetrahedron
        int corner = 0;  // corner of that face the arc cuts
    };
    std::vector<Arc> arcs;
    std::vector<std::pair<int, int>> glued_arcs;  // internal-face pairs
    std::vector<int> free_arcs;                   // boundary-face arcs

    struct Crossing {
        int disc = 0;
        int edge = 0;  // edge of the disc's tetrahedron
        int sub = 0;   // 0/1 for the two crossings of an octagon's doubled edge
    };
    std::vector<Crossing> crossings;
    std::vector<int> crossing_rep;  // 0-cell class representative per crossing
    std::vector<int> disc_component;
    int component_count = 0;
};

/// Materialize an admissible AN_STD vector: instantiate discs, order the
/// parallel arcs on every face by distance from their cut corner
/// (triangle copies nearest the corner, then the single quad/octagon
/// stack), glue equal-length arc lists across internal face classes, and
/// identify edge crossings.  Throws std::invalid_argument when the vector
/// is inadmissible and std::domain_error when the surface is too large to
/// materialize.
CellComplex build_cell_complex(const CoordVector& vec, const Triangulation& tri);

enum class SurfaceClass { Empty, VertexLink, NormalSphere, AlmostNormalSphere, Torus, Other };
std::string surface_class_name(SurfaceClass c);

struct ComponentSummary {
    CoordVector vector;  // AN_STD
    Int chi = 0;         // cell-complex count V - E + F
    Int octagons = 0;
    bool is_vertex_link = false;
    SurfaceClass cls = SurfaceClass::Other;
};

/// Per-component summaries (vectors sum to the input vector) plus the
/// total edge weights of the input.  Components are ordered by their
/// least disc.
struct SurfaceReport {
    std::vector<ComponentSummary> components;
    IntVec total_edge_weights;
};

SurfaceReport components(const CellComplex& complex);

}  // namespace nsurf
