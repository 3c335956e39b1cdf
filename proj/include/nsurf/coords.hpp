#pragma once

// Coordinate systems for normal and octagonal almost normal surfaces, their
// matching equations and admissibility conditions.
//
// Five systems are supported; per-tetrahedron column layouts:
//
//   STD      7n   t0 t1 t2 t3 q1 q2 q3
//   QUAD     3n   q1 q2 q3
//   AN_STD  10n   t0 t1 t2 t3 q1 q2 q3 k1 k2 k3
//   QUAD_OCT 6n   q1 q2 q3 k1 k2 k3
//   JOINT    3n   j1 j2 j3            (j = q - k)
//
// t = triangles by cut-off corner, q = quadrilaterals by type, k = octagons
// by type (see tetra.hpp for the type conventions).

#include "nsurf/ints.hpp"
#include "nsurf/skeleton.hpp"
#include "nsurf/triangulation.hpp"

#include <string>
#include <vector>

namespace nsurf {

enum class CoordSystem { STD, QUAD, AN_STD, QUAD_OCT, JOINT };

/// Dimension of one tetrahedron block.
int block_size(CoordSystem system);
/// Total coordinate dimension for n tetrahedra.
int dimension(CoordSystem system, int n);
/// "std", "quad", "an-std", "quad-oct", "joint" (the CLI spellings).
std::string system_name(CoordSystem system);
/// Inverse of system_name; throws std::invalid_argument on unknown names.
CoordSystem system_from_name(const std::string& name);

/// Column index helpers (t by corner 0..3, q/k/j by type 1..3).
int col_t(CoordSystem system, int tet, int corner);
int col_q(CoordSystem system, int tet, int type);
int col_k(CoordSystem system, int tet, int type);
int col_j(int tet, int type);

/// An integer vector tagged with its coordinate system.
struct CoordVector {
    CoordSystem system = CoordSystem::STD;
    IntVec entries;

    bool zero() const {
        for (const Int& x : entries)
            if (x != 0) return false;
        return true;
    }
};

/// Where a matching equation comes from: STD/AN_STD rows arise from an
/// (internal face class, edge of that face) pair; QUAD/QUAD_OCT/JOINT rows
/// from an internal edge class.
struct RowProvenance {
    int face_class = -1;  // -1 for edge-based rows
    int edge_class = -1;
    std::string str() const;
};

/// The matching equations of a triangulation in one coordinate system,
/// together with the constraint metadata needed for admissibility and for
/// filtered enumeration.
struct EquationSystem {
    CoordSystem system = CoordSystem::STD;
    Triangulation tri;
    int dim = 0;
    std::vector<IntVec> rows;
    std::vector<RowProvenance> provenance;
    /// Per-tetrahedron groups over which at most one entry may be non-zero.
    std::vector<std::vector<int>> constraint_groups;
    /// All octagon positions (AN_STD / QUAD_OCT only, else empty).
    std::vector<int> global_octagon_group;

    /// Evaluate row r at v (dimensions must match).
    Int eval_row(int r, const IntVec& v) const;
    /// True iff every row evaluates to zero at v.
    bool in_kernel(const IntVec& v) const;
};

/// Build the matching equations.
///
/// STD/AN_STD: one row per (internal face class, edge of the face); the
/// equation equates the arcs cutting the same corner on both sides of the
/// face.  Closed triangulations get exactly 6n rows.
///
/// QUAD/QUAD_OCT: one row per internal edge class, built by walking once
/// around the edge and adding +1 for each disc type rising across the
/// entered face and -1 for each falling one; coefficients accumulate when a
/// tetrahedron meets the edge several times.  Octagon coefficients are the
/// negated quadrilateral coefficients of the same type (an octagon rises
/// where the same-type quad falls).  Closed triangulations get exactly
/// n + v rows.
///
/// JOINT: the QUAD matrix re-tagged (j = q - k satisfies the same
/// equations).
EquationSystem matching_matrix(const Triangulation& tri, CoordSystem system);

/// Only the constraint metadata (groups + global octagon group) of
/// matching_matrix, without building rows.
void constraint_sets(int n, CoordSystem system,
                     std::vector<std::vector<int>>& groups,
                     std::vector<int>& global_octagon_group);

/// Admissibility verdict for a coordinate vector.
struct AdmissibilityVerdict {
    enum Kind { AdmissibleNormal, AdmissibleAlmostNormal, Inadmissible };
    Kind kind = Inadmissible;
    std::string reason;  // set iff Inadmissible

    bool admissible() const { return kind != Inadmissible; }
};

/// Apply the admissibility conditions of vec's system: non-negativity
/// (JOINT: at most one negative entry, equal to -1), matching equations,
/// constraint groups, and the octagon/negative-count trichotomy separating
/// normal from almost normal.
///
/// Throws std::invalid_argument on dimension mismatch.
AdmissibilityVerdict check_admissible(const CoordVector& vec, const Triangulation& tri);

}  // namespace nsurf
