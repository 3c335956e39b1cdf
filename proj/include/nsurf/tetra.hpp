#pragma once

// Fixed combinatorial conventions inside a single tetrahedron.
//
// Corners are labelled 0..3.  Face f is the face opposite corner f.  The six
// edges are numbered by their corner pairs in lexicographic order:
//
//     edge 0 = {0,1}   edge 1 = {0,2}   edge 2 = {0,3}
//     edge 3 = {1,2}   edge 4 = {1,3}   edge 5 = {2,3}
//
// so edge e and edge 5-e are opposite.  Disc types per tetrahedron:
//
//   * triangle type v (v = 0..3) cuts off corner v;
//   * quadrilateral type m (m = 1..3) separates the corner pairs
//       m=1: {0,1} | {2,3},   m=2: {0,2} | {1,3},   m=3: {0,3} | {1,2};
//     quad m is disjoint from edges m-1 and 5-(m-1) and meets the other
//     four edges once each;
//   * octagon type m (m = 1..3) uses the same pairing but meets edges m-1
//     and 5-(m-1) twice each and the other four once each.

#include <array>
#include <cassert>

namespace nsurf {

/// Corner pair of edge e, lexicographically ordered.
constexpr std::array<std::array<int, 2>, 6> kEdgeCorners = {{
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
}};

/// Edge index for an (unordered) corner pair.
inline int edge_index(int a, int b) {
    assert(a != b);
    if (a > b) std::swap(a, b);
    if (a == 0) return b - 1;        // {0,1},{0,2},{0,3} -> 0,1,2
    if (a == 1) return b + 1;        // {1,2},{1,3}       -> 3,4
    return 5;                        // {2,3}             -> 5
}

/// Quad/octagon type (1..3) whose corner pairing puts a and b together.
/// Equals the type of the quad that does NOT meet edge {a,b}.
inline int pair_quad(int a, int b) {
    assert(a != b);
    // {0,1}/{2,3} -> 1,  {0,2}/{1,3} -> 2,  {0,3}/{1,2} -> 3
    if ((a == 0 && b == 1) || (a == 1 && b == 0) || (a == 2 && b == 3) || (a == 3 && b == 2)) return 1;
    if ((a == 0 && b == 2) || (a == 2 && b == 0) || (a == 1 && b == 3) || (a == 3 && b == 1)) return 2;
    return 3;
}

/// The corner paired with v under quad/octagon type m.
inline int pair_partner(int m, int v) {
    for (int u = 0; u < 4; ++u)
        if (u != v && pair_quad(u, v) == m) return u;
    assert(false);
    return -1;
}

/// The three corners on face f (all corners except f), ascending.
inline std::array<int, 3> face_corners(int f) {
    std::array<int, 3> c{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != f) c[k++] = v;
    return c;
}

/// The corner of face f not on edge {a,b} (requires {a,b} ⊂ face f).
inline int third_corner(int f, int a, int b) {
    for (int v = 0; v < 4; ++v)
        if (v != f && v != a && v != b) return v;
    assert(false);
    return -1;
}

/// The two faces containing edge {a,b}: the faces opposite the other two
/// corners, ascending.
inline std::array<int, 2> edge_faces(int a, int b) {
    std::array<int, 2> fs{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != a && v != b) fs[k++] = v;
    return fs;
}

}  // namespace nsurf
