#pragma once

// Generator for closed lens-space triangulations built from layered solid
// tori.
//
// A layered solid torus is grown from a one-tetrahedron base by repeatedly
// layering a new tetrahedron across a boundary edge; the meridian weights of
// the three boundary edges follow the continued-fraction expansion of p/q.
// Folding the two boundary faces together over a chosen edge closes the
// manifold into a lens space.  Every generated triangulation passes skeleton
// validation, and the homology tests pin H1 = Z/p.

#include "nsurf/triangulation.hpp"

namespace nsurf {

/// Build a closed orientable triangulation of the lens space L(p,q)
/// (up to the homeomorphism L(p,q) = L(p,p-q)).
///
/// Accepts gcd(p,q) = 1 with 0 <= q < p, or the degenerate (1,0) giving the
/// 3-sphere.  Throws std::invalid_argument otherwise.
Triangulation make_layered_lens_space(long p, long q);

}  // namespace nsurf
