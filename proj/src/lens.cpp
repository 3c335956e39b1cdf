#include "nsurf/lens.hpp"

#include "nsurf/skeleton.hpp"
#include "nsurf/tetra.hpp"

#include <array>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace nsurf {

namespace {

// Boundary state of a layered solid torus under construction.
//
// Invariant maintained by the construction: the two boundary faces are
// always faces 0 and 1 of the most recently added tetrahedron (`tet`).
// Their edges fall into three classes on the boundary torus:
//   * the literal edge {2,3} of `tet`, shared by both faces (one physical
//     slot) — this class always carries the largest ("sum") meridian weight;
//   * two classes with one edge in face 0 (from {12, 13}) and one in face 1
//     (from {02, 03}).
// For the latter, `ends_a`/`ends_b` give the edge's ordered corner pairs in
// faces 0 and 1; the ordering encodes the identification (position k of
// ends_a matches position k of ends_b along the edge class).
struct BoundaryEdge {
    bool shared = false;
    std::array<int, 2> ends_a{};  // edge in face 0 (or the shared edge)
    std::array<int, 2> ends_b{};  // edge in face 1 (or the shared edge)
    long weight = 0;
};

struct TorusBoundary {
    int tet = 0;
    std::array<BoundaryEdge, 3> edges;

    BoundaryEdge& with_weight(long w) {
        for (auto& e : edges)
            if (e.weight == w) return e;
        throw std::logic_error("torus boundary: no edge of weight " + std::to_string(w));
    }
};

// One-tetrahedron layered solid torus: glue face 3 onto face 2 via the
// corner map 0->3, 1->0, 2->1, 3->2.  Boundary faces 0 and 1; meridian
// weights of the boundary edge classes are 1, 2, 3 with the shared top edge
// {2,3} carrying 3.  (Weights calibrated once against exact first-homology
// computations of the three possible closures of this solid torus.)
TorusBoundary base_lst(Triangulation& tri) {
    tri = Triangulation(1);
    tri.glue(0, 3, Gluing{0, 2, Perm4(3, 0, 1, 2)});
    TorusBoundary tb;
    tb.tet = 0;
    tb.edges[0] = BoundaryEdge{false, {1, 2}, {3, 0}, 1};  // class {01,03,12}
    tb.edges[1] = BoundaryEdge{false, {1, 3}, {2, 0}, 2};  // class {02,13}
    tb.edges[2] = BoundaryEdge{true, {2, 3}, {2, 3}, 3};   // shared top edge
    return tb;
}

// Map an old boundary-edge appearance to its slot on the new boundary after
// layering with gluing maps pa ((new,3)->(old,0)) and pb ((new,2)->(old,1)).
// `in_face_a` says which old boundary face the appearance lies in.
std::array<int, 2> pull_back(const Perm4& inv, const std::array<int, 2>& ends) {
    return {inv[ends[0]], inv[ends[1]]};
}

bool new_side_is_face0(const std::array<int, 2>& e) {
    // Edges {1,2},{1,3} of the new tetrahedron lie in its face 0;
    // {0,2},{0,3} lie in face 1.
    return e[0] != 0 && e[1] != 0;
}

// Layer a fresh tetrahedron over the (non-shared) boundary edge class `met`.
// The new tetrahedron's bottom faces 3 and 2 are glued over the old boundary
// faces 0 and 1 with its edge {0,1} lying along the buried edge.
void layer_over(Triangulation& tri, TorusBoundary& tb, long bury_weight) {
    BoundaryEdge& e = tb.with_weight(bury_weight);
    if (e.shared) throw std::logic_error("layering over the shared edge is never needed");

    const int old_tet = tb.tet;
    const int u = tri.size();
    {
        // Rebuild the triangulation with one more tetrahedron.
        Triangulation bigger(u + 1, tri.name());
        for (int i = 0; i < u; ++i)
            for (int f = 0; f < 4; ++f)
                if (const auto& g = tri.gluing(i, f); g && !bigger.gluing(i, f))
                    bigger.glue(i, f, *g);
        tri = std::move(bigger);
    }

    const int ta = third_corner(0, e.ends_a[0], e.ends_a[1]);  // face 0 = {1,2,3}
    const int tbb = third_corner(1, e.ends_b[0], e.ends_b[1]);  // face 1 = {0,2,3}
    const Perm4 pa(e.ends_a[0], e.ends_a[1], ta, 0);   // (u,3) -> (old,0)
    const Perm4 pb(e.ends_b[0], e.ends_b[1], 1, tbb);  // (u,2) -> (old,1)
    tri.glue(u, 3, Gluing{old_tet, 0, pa});
    tri.glue(u, 2, Gluing{old_tet, 1, pb});

    const Perm4 pa_inv = pa.inverse();
    const Perm4 pb_inv = pb.inverse();

    TorusBoundary next;
    next.tet = u;
    int k = 0;
    long other[2], wsum = 0;
    for (const auto& old_edge : tb.edges) {
        if (old_edge.weight == e.weight) continue;
        other[k] = old_edge.weight;
        wsum += old_edge.weight;

        const auto na = pull_back(pa_inv, old_edge.ends_a);
        const auto nb = pull_back(pb_inv, old_edge.ends_b);
        BoundaryEdge ne;
        ne.weight = old_edge.weight;
        // The two pulled-back slots must land in different new boundary
        // faces (the construction keeps the torus in standard form).
        if (new_side_is_face0(na) == new_side_is_face0(nb))
            throw std::logic_error("layering lost the standard torus form");
        ne.ends_a = new_side_is_face0(na) ? na : nb;
        ne.ends_b = new_side_is_face0(na) ? nb : na;
        next.edges[k++] = ne;
    }
    // New shared top edge {2,3}: the other diagonal of the square whose
    // diagonal was the buried edge.
    const long diff = std::abs(other[0] - other[1]);
    next.edges[2] = BoundaryEdge{true, {2, 3}, {2, 3}, (e.weight == wsum) ? diff : wsum};
    tb = next;
}

// Close the torus by folding boundary face 0 onto boundary face 1 across
// the edge class `fold_weight` (which stays fixed pointwise in the fold).
void fold_over(Triangulation& tri, TorusBoundary& tb, long fold_weight) {
    const BoundaryEdge& e = tb.with_weight(fold_weight);
    Perm4 p;
    if (e.shared) {
        // ends {2,3} fixed; third corners 1 (face 0) -> 0 (face 1).
        p = Perm4(1, 0, 2, 3);
    } else {
        std::array<int, 4> img{};
        img[e.ends_a[0]] = e.ends_b[0];
        img[e.ends_a[1]] = e.ends_b[1];
        img[third_corner(0, e.ends_a[0], e.ends_a[1])] =
            third_corner(1, e.ends_b[0], e.ends_b[1]);
        img[0] = 1;
        p = Perm4(img[0], img[1], img[2], img[3]);
    }
    tri.glue(tb.tet, 0, Gluing{tb.tet, 1, p});
}

// Grow the layered solid torus with boundary weights {x, y, x+y},
// 1 <= x < y, gcd(x,y) = 1.
TorusBoundary build_lst(Triangulation& tri, long x, long y) {
    assert(0 < x && x < y && std::gcd(x, y) == 1);
    if (x == 1 && y == 2) return base_lst(tri);
    TorusBoundary tb = build_lst(tri, std::min(x, y - x), std::max(x, y - x));
    // Current weights {x, y-x, y}; burying the (y-x)-edge raises the top
    // weight to x + y.
    layer_over(tri, tb, y - x);
    return tb;
}

}  // namespace

Triangulation make_layered_lens_space(long p, long q) {
    if (p < 1 || q < 0 || (p == 1 && q != 0) || (p > 1 && (q < 1 || q >= p)) ||
        std::gcd(p, q) != 1)
        throw std::invalid_argument("make_layered_lens_space: need gcd(p,q)=1 with 0<q<p, or (1,0)");

    Triangulation tri;
    TorusBoundary tb;
    if (p <= 3) {
        // Folding over the sum-weight edge of LST(a, b, a+b) yields order
        // |a-b|; these three are the cases the generic path cannot reach.
        tb = build_lst(tri, 1, p + 1);  // weights {1, p+1, p+2}
        fold_over(tri, tb, p + 2);
    } else {
        // Fold over the a-edge of LST(a, b, a+b): kills the slope of order
        // a + 2b, i.e. builds L(a+2b, b).  Pick a = p - 2q~, b = q~.
        const long qt = std::min(q, p - q);
        const long a = p - 2 * qt;
        tb = build_lst(tri, std::min(a, qt), std::max(a, qt));
        fold_over(tri, tb, a);
    }
    tri.set_name("L(" + std::to_string(p) + "," + std::to_string(q) + ")");

    // The construction is validated like any parsed input; a failure here
    // would be a programming error, not a data error.
    build_skeleton(tri);
    return tri;
}

}  // namespace nsurf
