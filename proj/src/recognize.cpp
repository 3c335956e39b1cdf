#include "nsurf/recognize.hpp"

#include "nsurf/enum_dd.hpp"
#include "nsurf/skeleton.hpp"
#include "nsurf/surface.hpp"

#include <stdexcept>

namespace nsurf {

namespace {

void require_closed(const Triangulation& tri, const char* who) {
    if (!tri.is_closed())
        throw std::domain_error(std::string(who) + ": requires a closed triangulation");
}

/// Lift a STD vector to AN_STD (zero octagons).
CoordVector lift_std(const CoordVector& vec) {
    const int n = static_cast<int>(vec.entries.size()) / 7;
    CoordVector out;
    out.system = CoordSystem::AN_STD;
    out.entries.assign(dimension(out.system, n), Int(0));
    for (int i = 0; i < n; ++i) {
        for (int v = 0; v < 4; ++v)
            out.entries[col_t(out.system, i, v)] = vec.entries[col_t(CoordSystem::STD, i, v)];
        for (int m = 1; m <= 3; ++m)
            out.entries[col_q(out.system, i, m)] = vec.entries[col_q(CoordSystem::STD, i, m)];
    }
    return out;
}

}  // namespace

ZeroEfficiencyResult verify_zero_efficiency(const Triangulation& tri) {
    require_closed(tri, "verify_zero_efficiency");
    const EquationSystem eqs = matching_matrix(tri, CoordSystem::STD);
    const RaySet rays = enumerate_vertex_rays(eqs);
    for (const Ray& r : rays.rays) {
        CoordVector vec;
        vec.system = CoordSystem::STD;
        vec.entries = r.entries;
        const CellComplex cx = build_cell_complex(lift_std(vec), tri);
        const SurfaceReport report = components(cx);
        for (const ComponentSummary& c : report.components) {
            if (c.cls == SurfaceClass::NormalSphere) {
                ZeroEfficiencyResult res;
                res.zero_efficient = false;
                res.witness = vec;
                return res;
            }
        }
    }
    return {true, std::nullopt};
}

std::optional<CoordVector> find_almost_normal_sphere(const Triangulation& tri) {
    require_closed(tri, "find_almost_normal_sphere");
    const EquationSystem eqs = matching_matrix(tri, CoordSystem::QUAD_OCT);
    const RaySet rays = enumerate_vertex_rays(eqs);
    const StarPartition part = apply_star_filter(rays);
    for (const Ray& r : part.almost_normal) {
        CoordVector vec;
        vec.system = CoordSystem::QUAD_OCT;
        vec.entries = r.entries;
        const CoordVector extended = extend_to_standard(vec, tri);
        const CellComplex cx = build_cell_complex(extended, tri);
        const SurfaceReport report = components(cx);
        for (const ComponentSummary& c : report.components)
            if (c.cls == SurfaceClass::AlmostNormalSphere) return project(c.vector);
    }
    return std::nullopt;
}

RecognitionOutcome recognize_sphere(const Triangulation& tri) {
    require_closed(tri, "recognize_sphere");
    RecognitionOutcome out;

    const Skeleton sk = build_skeleton(tri);
    out.vertex_count = sk.vertex_class_count();
    out.orientable = is_orientable(tri);
    out.h1 = first_homology(tri);

    if (!out.orientable) {
        out.verdict = RecognitionOutcome::NotSphere;
        out.reason = "not orientable";
        return out;
    }
    if (!out.h1.trivial()) {
        out.verdict = RecognitionOutcome::NotSphere;
        out.reason = "first homology is " + out.h1.str() + ", not trivial";
        return out;
    }

    const ZeroEfficiencyResult ze = verify_zero_efficiency(tri);
    out.zero_efficient = ze.zero_efficient;
    if (!ze.zero_efficient) {
        out.verdict = RecognitionOutcome::Inconclusive;
        out.reason =
            "triangulation is not 0-efficient; the connected-sum decomposition step is out of "
            "scope - crush the witness sphere and retry externally";
        return out;
    }

    if (out.vertex_count > 1) {
        out.verdict = RecognitionOutcome::Sphere;
        out.multi_vertex_shortcut = true;
        return out;
    }

    const std::optional<CoordVector> cert = find_almost_normal_sphere(tri);
    if (cert) {
        // Re-verify the certificate before trusting it.
        const AdmissibilityVerdict v = check_admissible(*cert, tri);
        if (v.kind != AdmissibilityVerdict::AdmissibleAlmostNormal)
            throw std::logic_error("recognize_sphere: certificate fails admissibility re-check");
        const CellComplex cx = build_cell_complex(extend_to_standard(*cert, tri), tri);
        const SurfaceReport report = components(cx);
        bool ok = false;
        for (const ComponentSummary& c : report.components)
            ok = ok || c.cls == SurfaceClass::AlmostNormalSphere;
        if (!ok) throw std::logic_error("recognize_sphere: certificate fails reconstruction re-check");
        out.verdict = RecognitionOutcome::Sphere;
        out.certificate = cert;
        return out;
    }

    out.verdict = RecognitionOutcome::NotSphere;
    out.reason = "0-efficient one-vertex triangulation admits no octagonal almost normal 2-sphere";
    return out;
}

}  // namespace nsurf
