#pragma once

// Skeleton of a triangulation: identification classes of faces, edges and
// vertices, boundary flags, vertex links, orientability.

#include "nsurf/tetra.hpp"
#include "nsurf/triangulation.hpp"

#include <array>
#include <utility>
#include <vector>

namespace nsurf {

/// A (tetrahedron, index) slot; index meaning depends on context (face 0-3,
/// edge 0-5, corner 0-3).
using Slot = std::pair<int, int>;

struct FaceClass {
    std::vector<Slot> slots;  // lexicographically sorted; size 2 (internal) or 1 (boundary)
    bool boundary = false;
};

struct EdgeClass {
    std::vector<Slot> slots;  // (tet, edge) slots, lexicographically sorted
    bool boundary = false;    // true iff some incident face slot is boundary
};

struct VertexClass {
    std::vector<Slot> slots;  // (tet, corner) slots, lexicographically sorted
    bool boundary = false;    // true iff the link is a disc
};

/// The triangulated link of a vertex class: one triangle per corner slot,
/// adjacencies dual to the face gluings around the vertex.
struct LinkSurface {
    std::vector<Slot> triangles;  // corner slots, sorted; triangle i <-> slots[i]
    /// Edge adjacencies: entries ((i, f), (j, g)) meaning side f of link
    /// triangle i is glued to side g of link triangle j, where the side of a
    /// link triangle is named by the tetrahedron face it lies in.
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> adjacencies;
    int boundary_edges = 0;  // link-triangle sides on boundary faces
    int euler = 0;           // V - E + F of the link surface
    bool connected = true;
    bool is_sphere() const { return connected && boundary_edges == 0 && euler == 2; }
    bool is_disc() const { return connected && boundary_edges > 0 && euler == 1; }
};

class Skeleton {
public:
    const Triangulation& tri() const { return tri_; }

    int face_class_count() const { return static_cast<int>(faces_.size()); }
    int edge_class_count() const { return static_cast<int>(edges_.size()); }
    int vertex_class_count() const { return static_cast<int>(vertices_.size()); }

    const std::vector<FaceClass>& faces() const { return faces_; }
    const std::vector<EdgeClass>& edges() const { return edges_; }
    const std::vector<VertexClass>& vertices() const { return vertices_; }

    const FaceClass& face_class(int idx) const { return faces_.at(idx); }
    const EdgeClass& edge_class(int idx) const { return edges_.at(idx); }
    const VertexClass& vertex_class(int idx) const { return vertices_.at(idx); }

    int face_class_of(int tet, int face) const { return face_of_[tet * 4 + face]; }
    int edge_class_of(int tet, int edge) const { return edge_of_[tet * 6 + edge]; }
    int vertex_class_of(int tet, int corner) const { return vertex_of_[tet * 4 + corner]; }

    bool closed() const { return closed_; }
    const LinkSurface& link(int vertex_class) const { return links_.at(vertex_class); }

private:
    friend Skeleton build_skeleton(const Triangulation& tri);
    Triangulation tri_{0};
    std::vector<FaceClass> faces_;
    std::vector<EdgeClass> edges_;
    std::vector<VertexClass> vertices_;
    std::vector<int> face_of_, edge_of_, vertex_of_;
    std::vector<LinkSurface> links_;
    bool closed_ = false;
};

/// Compute identification classes, boundary flags and vertex links.
/// Class numbering is deterministic: classes are ordered by their
/// lexicographically least slot.
///
/// Throws std::domain_error if the gluings identify an edge with itself in
/// reverse, or if some vertex link is not a sphere or a disc (the
/// triangulation would not be a compact 3-manifold).
Skeleton build_skeleton(const Triangulation& tri);

/// One step of a walk around an internal edge class: while inside
/// tetrahedron `tet` the walk runs along edge {lower, upper} (as corner
/// labels of that tetrahedron), entering through face `entry` and leaving
/// through face `exit`.
struct EdgeVisit {
    int tet;
    int lower, upper;  // edge endpoints; `upper` tracks a fixed end of the edge class
    int entry, exit;   // the two faces of `tet` containing the edge
};

/// Walk once around an internal edge class and return the visits in cycle
/// order, one per slot of the class.
///
/// Conventions (fixed so that equation signs are reproducible): the walk
/// starts at the lexicographically least slot of the class, the `upper` end
/// starts as the smaller corner label there, and the first exit is through
/// the lower-indexed of the two faces containing the starting edge.
///
/// Throws std::domain_error if the class touches the boundary.
std::vector<EdgeVisit> walk_edge_cycle(const Skeleton& sk, int edge_class);

/// The link of one vertex class (skeleton built internally).
/// Throws std::out_of_range on a bad index.
LinkSurface vertex_link(const Triangulation& tri, int vertex_class);

/// True iff the tetrahedra can be coherently oriented: every gluing
/// permutation must be odd (orientation-reversing on the shared face) under
/// some assignment of orientations, decided by 2-colouring the gluing graph.
bool is_orientable(const Triangulation& tri);

}  // namespace nsurf
