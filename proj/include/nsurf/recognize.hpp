#pragma once

// 3-sphere recognition, restricted to the certificate search that works on
// 0-efficient one-vertex triangulations: an orientability/homology gate,
// 0-efficiency verification in standard coordinates, and the quad-octagon
// almost-normal-sphere search.  The connected-sum decomposition needed for
// arbitrary input is out of scope; the pipeline reports Inconclusive
// instead of guessing.

#include "nsurf/coords.hpp"
#include "nsurf/homology.hpp"
#include "nsurf/triangulation.hpp"

#include <optional>
#include <string>

namespace nsurf {

/// Is every embedded normal 2-sphere a vertex link?  Enumerates standard
/// (7n) vertex rays - quadrilateral coordinates may lose vertex surfaces -
/// reconstructs each primitive ray and reports the first ray with a
/// non-vertex-link normal sphere component as witness.
/// Throws std::domain_error on a boundary triangulation.
struct ZeroEfficiencyResult {
    bool zero_efficient = false;
    std::optional<CoordVector> witness;  // STD vector of the offending ray
};
ZeroEfficiencyResult verify_zero_efficiency(const Triangulation& tri);

/// Search the quad-octagon vertex rays for an octagonal almost normal
/// 2-sphere: apply the octagon partition, extend each almost-normal ray to
/// standard coordinates, reconstruct, and return the first connected chi=2
/// single-octagon component as a QUAD_OCT vector.
/// Throws std::domain_error on a boundary triangulation.
std::optional<CoordVector> find_almost_normal_sphere(const Triangulation& tri);

struct RecognitionOutcome {
    enum Verdict { Sphere, NotSphere, Inconclusive };
    Verdict verdict = Inconclusive;
    std::string reason;  // set for NotSphere / Inconclusive

    /// The almost normal sphere certificate (QUAD_OCT), absent when the
    /// verdict came from the multi-vertex shortcut or is not Sphere.
    std::optional<CoordVector> certificate;
    bool multi_vertex_shortcut = false;

    // Gate diagnostics, filled as far as the pipeline ran.
    bool orientable = false;
    AbelianGroup h1;
    std::optional<bool> zero_efficient;
    int vertex_count = 0;
};

/// The recognition pipeline for closed triangulations:
/// (1) orientable and trivial first homology, else NotSphere;
/// (2) 0-efficiency, else Inconclusive (decomposition out of scope);
/// (3) more than one vertex, then Sphere (shortcut);
/// (4) almost normal sphere certificate found, then Sphere, else NotSphere.
/// Sphere certificates are re-verified (admissible; reconstruction is
/// connected, chi=2, exactly one octagon).
/// Throws std::domain_error on a boundary triangulation.
RecognitionOutcome recognize_sphere(const Triangulation& tri);

}  // namespace nsurf
