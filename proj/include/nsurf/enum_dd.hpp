#pragma once

// Extreme-ray enumeration for the admissible cones of normal and almost
// normal surface coordinates: the filtered double description method, a
// brute-force oracle for small instances, and the final octagon partition.

#include "nsurf/coords.hpp"
#include "nsurf/ints.hpp"

#include <cstdint>
#include <vector>

namespace nsurf {

/// Per-hyperplane statistics of a double description run.
struct DDStageStats {
    int stage = 0;              // hyperplane (row) index
    long long rays_in = 0;      // rays entering the stage
    long long rays_kept = 0;    // rays surviving keep + combine + strip
    long long pairs_tested = 0; // opposite-side pairs examined
    long long millis = 0;       // wall clock for the stage
};

/// A primitive integer ray (gcd of entries 1) with a zero-position bitmask
/// for the combinatorial adjacency test.  In the non-negative systems all
/// entries are >= 0; JOINT rays keep the sign of q - k.
struct Ray {
    IntVec entries;
    std::vector<std::uint64_t> zero_mask;

    static Ray make(IntVec v);
    bool operator==(const Ray& o) const { return entries == o.entries; }
};

/// Result of an enumeration: deduplicated rays in lexicographic order plus
/// per-stage statistics (timings vary run to run; everything else is
/// deterministic).
struct RaySet {
    CoordSystem system = CoordSystem::STD;
    int dim = 0;
    std::vector<Ray> rays;
    std::vector<DDStageStats> stats;
};

/// Filtered double description (Motzkin et al. + Letscher filtering):
/// start from the unit rays of the non-negative orthant; for each equation
/// keep on-hyperplane rays and combine adjacent opposite-side pairs (u,v)
/// into the minimal integer combination (h.u)v - (h.v)u; strip rays
/// violating the per-tetrahedron constraint groups after every stage.  The
/// global octagon (star) condition is NOT applied here; apply_star_filter
/// handles it afterwards.  Equations are processed in provenance order.
///
/// JOINT is enumerated through quad-octagon space: a quad-octagon run
/// filtered on the same per-tetrahedron groups (they are the pullbacks of
/// the JOINT groups under j = q - k), with the output mapped through
/// j = q - k.
///
/// Throws std::invalid_argument on dimension mismatch between matrix and
/// constraint metadata.
RaySet enumerate_vertex_rays(const EquationSystem& eqs);

/// All integer vectors with entries in [0,bound] (JOINT: [-1,bound]) lying
/// in the kernel and satisfying the per-tetrahedron constraint groups (the
/// global octagon condition is deliberately not imposed, mirroring
/// enumerate_vertex_rays).  Lexicographically sorted.
/// Implemented by per-tetrahedron block enumeration with a meet-in-the-
/// middle join; throws std::domain_error when the pruned iteration space
/// exceeds the guard.
std::vector<IntVec> brute_force_admissible(const EquationSystem& eqs, int bound);

/// The octagon partition applied after enumeration: almost-normal rays
/// have exactly one non-zero octagon coordinate equal to 1; normal rays
/// are octagon-free; everything else is reported as rejected (octagon
/// coordinate > 1 after primitive scaling), never silently dropped.
/// Requires an AN_STD or QUAD_OCT ray set.
struct StarPartition {
    std::vector<Ray> normal;
    std::vector<Ray> almost_normal;
    std::vector<Ray> rejected;
};
StarPartition apply_star_filter(const RaySet& rays);

}  // namespace nsurf
