// Acceptance gate: end-to-end checks of the library against its contract,
// one PASS/FAIL line per criterion, nonzero exit when anything fails.
// Budgets and tolerances are pinned here in code; timings are wall clock.

#include "nsurf/coords.hpp"
#include "nsurf/enum_dd.hpp"
#include "nsurf/homology.hpp"
#include "nsurf/lens.hpp"
#include "nsurf/recognize.hpp"
#include "nsurf/skeleton.hpp"
#include "nsurf/surface.hpp"
#include "nsurf/tetra.hpp"
#include "nsurf/triangulation.hpp"

#include "support/decompose.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace nsurf;

namespace {

// ---------------------------------------------------------------- plumbing

struct Criterion {
    std::vector<std::string> errors;

    void check(bool ok, const std::string& msg) {
        if (!ok) errors.push_back(msg);
    }
};

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

std::filesystem::path fixture_dir() { return std::filesystem::path(NSURF_FIXTURE_DIR); }

Triangulation fixture(const std::string& name) {
    return load_triangulation((fixture_dir() / (name + ".tri")).string());
}

/// Every bundled .tri fixture, smallest first.
std::vector<Triangulation> all_fixtures() {
    std::vector<Triangulation> out;
    for (const auto& entry : std::filesystem::directory_iterator(fixture_dir()))
        if (entry.path().extension() == ".tri")
            out.push_back(load_triangulation(entry.path().string()));
    std::sort(out.begin(), out.end(), [](const Triangulation& a, const Triangulation& b) {
        return a.size() != b.size() ? a.size() < b.size() : a.name() < b.name();
    });
    return out;
}

const std::vector<CoordSystem> kAllSystems = {CoordSystem::STD, CoordSystem::QUAD,
                                              CoordSystem::AN_STD, CoordSystem::QUAD_OCT,
                                              CoordSystem::JOINT};

std::string vec_str(const IntVec& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ")";
    return out.str();
}

CoordVector cv(CoordSystem system, IntVec entries) { return CoordVector{system, std::move(entries)}; }

// Shared between criteria 3-6: rays and bound-4 oracle of every small
// fixture in every system, computed once inside criterion 3's budget.
struct SmallFixtureData {
    Triangulation tri;
    std::map<CoordSystem, EquationSystem> eqs;
    std::map<CoordSystem, RaySet> rays;
    std::map<CoordSystem, std::vector<IntVec>> oracle;
};
std::vector<SmallFixtureData> g_small;
constexpr int kOracleBound = 4;
constexpr long kJointCoeffCap = 12;  // coefficient cap for mixed-sign decompositions

// ---------------------------------------------------------------- criteria

// One-tetrahedron 3-sphere worked example: skeleton counts, reduced
// equations, the bound-3 joint lattice points, both reconstructions, and
// the recognition verdict.
void crit1(Criterion& c) {
    const Triangulation tri = fixture("s3_one_tet");
    const Skeleton sk = build_skeleton(tri);
    c.check(sk.vertex_class_count() == 1,
            "expected 1 vertex class, got " + std::to_string(sk.vertex_class_count()));
    c.check(sk.edge_class_count() == 2,
            "expected 2 edge classes, got " + std::to_string(sk.edge_class_count()));

    for (CoordSystem sys : {CoordSystem::QUAD, CoordSystem::QUAD_OCT, CoordSystem::JOINT}) {
        const EquationSystem eqs = matching_matrix(tri, sys);
        c.check(eqs.rows.size() == 2, system_name(sys) + ": expected 2 rows, got " +
                                          std::to_string(eqs.rows.size()));
        for (std::size_t r = 0; r < eqs.rows.size(); ++r) {
            const IntVec& row = eqs.rows[r];
            const Int a = row[0];
            bool reduced = a != 0 && row[1] == -a && row[2] == 0;
            if (sys == CoordSystem::QUAD_OCT)
                reduced = reduced && row[3] == -a && row[4] == a && row[5] == 0;
            c.check(reduced, system_name(sys) + " row " + std::to_string(r) +
                                 " does not reduce to q1=q2: " + vec_str(row));
        }
    }

    const std::vector<IntVec> joint =
        brute_force_admissible(matching_matrix(tri, CoordSystem::JOINT), 3);
    std::vector<IntVec> expected;
    for (int k = -1; k <= 3; ++k) expected.push_back(IntVec{0, 0, Int(k)});
    c.check(joint == expected,
            "bound-3 joint points differ from {(0,0,k) : -1 <= k <= 3}, got " +
                std::to_string(joint.size()) + " points");

    struct Expect {
        IntVec j;
        Int chi;
        Int octs;
    };
    for (const Expect& e : {Expect{{0, 0, 1}, 0, 0}, Expect{{0, 0, -1}, 2, 1}}) {
        const CoordVector lift = an_std_form(cv(CoordSystem::JOINT, e.j), tri);
        const SurfaceReport rep = components(build_cell_complex(lift, tri));
        c.check(rep.components.size() == 1,
                vec_str(e.j) + ": expected a connected surface, got " +
                    std::to_string(rep.components.size()) + " components");
        if (rep.components.size() == 1) {
            c.check(rep.components[0].chi == e.chi,
                    vec_str(e.j) + ": chi " + rep.components[0].chi.str() + " != " + e.chi.str());
            c.check(rep.components[0].octagons == e.octs,
                    vec_str(e.j) + ": octagon count " + rep.components[0].octagons.str());
        }
    }

    c.check(recognize_sphere(tri).verdict == RecognitionOutcome::Sphere,
            "recognize_sphere did not return Sphere");
}

// Row-count identities on every closed fixture.
void crit2(Criterion& c) {
    int lens_count = 0;
    for (const Triangulation& tri : all_fixtures()) {
        const Skeleton sk = build_skeleton(tri);
        if (!sk.closed()) continue;
        if (tri.name().rfind("l", 0) == 0 && tri.name() != "s3_one_tet") ++lens_count;
        const int n = tri.size();
        const int v = sk.vertex_class_count();
        for (CoordSystem sys : kAllSystems) {
            const std::size_t rows = matching_matrix(tri, sys).rows.size();
            const std::size_t want =
                (sys == CoordSystem::STD || sys == CoordSystem::AN_STD)
                    ? static_cast<std::size_t>(6 * n)
                    : static_cast<std::size_t>(n + v);
            c.check(rows == want, tri.name() + " " + system_name(sys) + ": " +
                                      std::to_string(rows) + " rows, expected " +
                                      std::to_string(want));
        }
    }
    c.check(lens_count >= 3,
            "need at least 3 closed lens-space fixtures, found " + std::to_string(lens_count));
}

// Enumeration vs the exhaustive bound-4 lattice oracle on every fixture
// with at most two tetrahedra, in all five systems: every oracle vector is
// a non-negative integer combination of the enumerated rays, every ray
// inside the oracle box occurs as an oracle vector, and every ray is
// extremal (outside the cone of each pair of other rays).
void crit3(Criterion& c) {
    g_small.clear();
    for (const Triangulation& tri : all_fixtures()) {
        if (tri.size() > 2) continue;
        SmallFixtureData data;
        data.tri = tri;
        for (CoordSystem sys : kAllSystems) {
            data.eqs.emplace(sys, matching_matrix(tri, sys));
            data.rays.emplace(sys, enumerate_vertex_rays(data.eqs.at(sys)));
            data.oracle.emplace(sys, brute_force_admissible(data.eqs.at(sys), kOracleBound));
        }
        g_small.push_back(std::move(data));
    }
    c.check(!g_small.empty(), "no fixtures with at most 2 tetrahedra found");

    for (const SmallFixtureData& data : g_small) {
        for (CoordSystem sys : kAllSystems) {
            const std::string tag = data.tri.name() + " " + system_name(sys) + ": ";
            const std::vector<Ray>& rays = data.rays.at(sys).rays;
            const std::vector<IntVec>& oracle = data.oracle.at(sys);
            std::vector<IntVec> ray_vecs;
            for (const Ray& r : rays) ray_vecs.push_back(r.entries);

            for (const IntVec& v : oracle) {
                const bool ok = sys == CoordSystem::JOINT
                                    ? nsurf_test::is_integer_combination_capped(v, ray_vecs,
                                                                                kJointCoeffCap)
                                    : nsurf_test::is_nonneg_integer_combination(v, ray_vecs);
                if (!ok) {
                    c.check(false, tag + "oracle vector " + vec_str(v) +
                                       " is not a combination of the rays");
                    break;  // one witness per system keeps the report short
                }
            }

            const Int lo = sys == CoordSystem::JOINT ? Int(-1) : Int(0);
            for (const IntVec& r : ray_vecs) {
                bool in_box = true;
                for (const Int& x : r) in_box = in_box && lo <= x && x <= kOracleBound;
                if (!in_box) continue;  // outside the oracle's window, nothing to compare
                c.check(std::binary_search(oracle.begin(), oracle.end(), r),
                        tag + "ray " + vec_str(r) + " missing from the oracle");
            }

            for (std::size_t i = 0; i < ray_vecs.size(); ++i)
                for (std::size_t s = 0; s < ray_vecs.size(); ++s)
                    for (std::size_t t = s + 1; t < ray_vecs.size(); ++t) {
                        if (s == i || t == i) continue;
                        if (nsurf_test::in_pair_cone(ray_vecs[i], ray_vecs[s], ray_vecs[t]))
                            c.check(false, tag + "ray " + vec_str(ray_vecs[i]) +
                                               " lies in the cone of two other rays");
                    }
        }
    }
}

// Extension/projection contract over the quad-octagon oracle vectors of
// criterion 3.
void crit4(Criterion& c) {
    c.check(!g_small.empty(), "criterion 3 data unavailable");
    for (const SmallFixtureData& data : g_small) {
        const Triangulation& tri = data.tri;
        const std::string tag = tri.name() + ": ";
        const Skeleton sk = build_skeleton(tri);
        const EquationSystem& an_std = data.eqs.at(CoordSystem::AN_STD);
        const std::vector<IntVec>& oracle = data.oracle.at(CoordSystem::QUAD_OCT);

        std::vector<CoordVector> lifts;
        for (const IntVec& u : oracle) {
            const CoordVector x = extend_to_standard(cv(CoordSystem::QUAD_OCT, u), tri);
            lifts.push_back(x);

            c.check(project(x).entries == u, tag + "pi(eps(u)) != u for u = " + vec_str(u));
            c.check(an_std.in_kernel(x.entries),
                    tag + "eps(u) violates the standard matching equations, u = " + vec_str(u));

            for (int vc = 0; vc < sk.vertex_class_count(); ++vc) {
                Int min_t = -1;
                for (const auto& [tet, corner] : sk.vertex_class(vc).slots) {
                    const Int t = x.entries[col_t(CoordSystem::AN_STD, tet, corner)];
                    if (min_t < 0 || t < min_t) min_t = t;
                }
                c.check(min_t == 0, tag + "eps(u) is not link-minimal at vertex class " +
                                        std::to_string(vc) + ", u = " + vec_str(u));
            }

            for (int lambda = 0; lambda <= 3; ++lambda) {
                IntVec su = u, sx = x.entries;
                for (Int& e : su) e *= lambda;
                for (Int& e : sx) e *= lambda;
                if (extend_to_standard(cv(CoordSystem::QUAD_OCT, su), tri).entries != sx)
                    c.check(false, tag + "eps(" + std::to_string(lambda) + "u) != " +
                                       std::to_string(lambda) + " eps(u), u = " + vec_str(u));
            }
        }

        // eps(u+w) - eps(u) - eps(w) must be a non-positive combination of
        // vertex-link vectors: zero on quad/octagon columns, per-link
        // constant <= 0 on triangle columns.
        bool defect_ok = true;
        for (std::size_t a = 0; a < oracle.size() && defect_ok; ++a)
            for (std::size_t b = a; b < oracle.size() && defect_ok; ++b) {
                IntVec sum = oracle[a];
                for (std::size_t p = 0; p < sum.size(); ++p) sum[p] += oracle[b][p];
                const IntVec lift =
                    extend_to_standard(cv(CoordSystem::QUAD_OCT, sum), tri).entries;
                IntVec defect = lift;
                for (std::size_t p = 0; p < defect.size(); ++p)
                    defect[p] -= lifts[a].entries[p] + lifts[b].entries[p];

                for (int tet = 0; tet < tri.size(); ++tet)
                    for (int type = 1; type <= 3; ++type)
                        if (defect[col_q(CoordSystem::AN_STD, tet, type)] != 0 ||
                            defect[col_k(CoordSystem::AN_STD, tet, type)] != 0)
                            defect_ok = false;
                for (int vc = 0; vc < sk.vertex_class_count() && defect_ok; ++vc) {
                    std::optional<Int> coeff;
                    for (const auto& [tet, corner] : sk.vertex_class(vc).slots) {
                        const Int t = defect[col_t(CoordSystem::AN_STD, tet, corner)];
                        if (!coeff) coeff = t;
                        if (*coeff != t || t > 0) defect_ok = false;
                    }
                }
                if (!defect_ok)
                    c.check(false, tag + "eps(u+w)-eps(u)-eps(w) is not a non-positive "
                                         "link combination for u = " +
                                       vec_str(oracle[a]) + ", w = " + vec_str(oracle[b]));
            }
    }
}

// Euler characteristic double-entry: the linear functional must equal the
// cell-complex count V - E + F, per component and in total, on every
// reconstructible oracle vector and on the worked-example surfaces.
void crit5(Criterion& c) {
    c.check(!g_small.empty(), "criterion 3 data unavailable");
    long long reconstructed = 0;
    for (const SmallFixtureData& data : g_small) {
        const Triangulation& tri = data.tri;
        for (CoordSystem sys : kAllSystems) {
            for (const IntVec& v : data.oracle.at(sys)) {
                const CoordVector lift = an_std_form(cv(sys, v), tri);
                if (!check_admissible(lift, tri).admissible())
                    continue;  // e.g. octagons in two tetrahedra: no surface to build
                const SurfaceReport rep = components(build_cell_complex(lift, tri));
                ++reconstructed;
                Int total = 0;
                bool per_component = true;
                for (const ComponentSummary& comp : rep.components) {
                    total += comp.chi;
                    per_component =
                        per_component && euler_characteristic(comp.vector, tri) == comp.chi;
                }
                const std::string tag =
                    tri.name() + " " + system_name(sys) + " " + vec_str(v) + ": ";
                c.check(per_component, tag + "component linear chi != cell-complex chi");
                c.check(euler_characteristic(lift, tri) == total,
                        tag + "total linear chi " + euler_characteristic(lift, tri).str() +
                            " != summed cell-complex chi " + total.str());
                if (!per_component) return;  // avoid flooding the report
            }
        }
    }
    c.check(reconstructed > 0, "no oracle vector was reconstructible");
}

// Joint bijection and verdict agreement on the criterion-3 oracles.
void crit6(Criterion& c) {
    c.check(!g_small.empty(), "criterion 3 data unavailable");
    for (const SmallFixtureData& data : g_small) {
        const Triangulation& tri = data.tri;
        const std::string tag = tri.name() + ": ";
        for (const IntVec& v : data.oracle.at(CoordSystem::QUAD_OCT)) {
            const CoordVector qo = cv(CoordSystem::QUAD_OCT, v);
            const CoordVector j = to_joint(qo);
            c.check(from_joint(j).entries == v,
                    tag + "from_joint(to_joint(v)) != v for v = " + vec_str(v));
            c.check(check_admissible(qo, tri).kind == check_admissible(j, tri).kind,
                    tag + "quad-octagon and joint verdicts disagree for v = " + vec_str(v));
        }
        for (const IntVec& v : data.oracle.at(CoordSystem::JOINT)) {
            const CoordVector j = cv(CoordSystem::JOINT, v);
            c.check(to_joint(from_joint(j)).entries == v,
                    tag + "to_joint(from_joint(j)) != j for j = " + vec_str(v));
            c.check(check_admissible(from_joint(j), tri).kind == check_admissible(j, tri).kind,
                    tag + "joint and quad-octagon verdicts disagree for j = " + vec_str(v));
        }
    }
}

// Homology gate: known first homology groups plus the lens-space verdict.
void crit7(Criterion& c) {
    const AbelianGroup s3 = first_homology(fixture("s3_one_tet"));
    c.check(s3.trivial(), "H1 of the one-tetrahedron sphere is " + s3.str());
    const std::vector<std::pair<std::string, Int>> lens = {
        {"l2_1", 2}, {"l3_1", 3}, {"l4_1", 4}, {"l7_2", 7}};
    for (const auto& [name, p] : lens) {
        const AbelianGroup h = first_homology(fixture(name));
        c.check(h.rank == 0 && h.torsion == IntVec{p},
                name + ": H1 is " + h.str() + ", expected Z/" + p.str());
    }
    c.check(recognize_sphere(fixture("l4_1")).verdict == RecognitionOutcome::NotSphere,
            "recognize_sphere(l4_1) is not NotSphere");
}

// Performance direction on the largest bundled fixture: quad-octagon
// enumeration must not be slower than standard almost-normal enumeration,
// with the ambient dimensions recorded as 6n and 10n.  The speedup ratio is
// printed for inspection; its magnitude is machine-dependent and never
// asserted.
void crit8(Criterion& c) {
    const std::vector<Triangulation> all = all_fixtures();
    c.check(!all.empty(), "no fixtures found");
    if (all.empty()) return;
    const Triangulation& tri = all.back();
    const int n = tri.size();
    c.check(n >= 8, "largest fixture " + tri.name() + " has only " + std::to_string(n) +
                        " tetrahedra, need >= 8");

    auto timed = [&](CoordSystem sys, double& ms) {
        const double t0 = now_ms();
        const EquationSystem eqs = matching_matrix(tri, sys);
        const RaySet rays = enumerate_vertex_rays(eqs);
        ms = now_ms() - t0;
        return std::make_pair(eqs.dim, rays.rays.size());
    };
    double an_std_ms = 0, quad_oct_ms = 0;
    const auto [an_dim, an_rays] = timed(CoordSystem::AN_STD, an_std_ms);
    const auto [qo_dim, qo_rays] = timed(CoordSystem::QUAD_OCT, quad_oct_ms);

    c.check(an_dim == 10 * n, "AN_STD dimension " + std::to_string(an_dim) + " != 10n");
    c.check(qo_dim == 6 * n, "QUAD_OCT dimension " + std::to_string(qo_dim) + " != 6n");
    c.check(quad_oct_ms <= an_std_ms,
            "quad-octagon enumeration (" + std::to_string(quad_oct_ms) +
                " ms) was slower than standard almost-normal (" + std::to_string(an_std_ms) +
                " ms)");
    std::printf("        bench %s (n=%d): AN_STD %.1f ms (%zu rays, dim %d), "
                "QUAD_OCT %.1f ms (%zu rays, dim %d), speedup %.2fx\n",
                tri.name().c_str(), n, an_std_ms, an_rays, an_dim, quad_oct_ms, qo_rays, qo_dim,
                quad_oct_ms > 0 ? an_std_ms / quad_oct_ms : 0.0);
}

}  // namespace

int main() {
    struct Entry {
        const char* label;
        void (*run)(Criterion&);
        double budget_ms;  // 0 = untimed ("exact" criteria without a budget)
    };
    const std::vector<Entry> entries = {
        {"worked-example reproduction (one-tetrahedron sphere)", crit1, 1000},
        {"equation-count identities on closed fixtures", crit2, 1000},
        {"enumeration vs exhaustive oracle (n <= 2, all systems)", crit3, 60000},
        {"extension/projection contract", crit4, 0},
        {"Euler characteristic double-entry", crit5, 0},
        {"joint bijection and verdict agreement", crit6, 0},
        {"homology gate", crit7, 5000},
        {"performance direction on the largest fixture", crit8, 600000},
    };

    std::printf("acceptance gate, fixtures at %s\n", fixture_dir().string().c_str());
    int failures = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        Criterion c;
        const double t0 = now_ms();
        try {
            entries[i].run(c);
        } catch (const std::exception& e) {
            c.check(false, std::string("exception: ") + e.what());
        }
        const double ms = now_ms() - t0;
        if (entries[i].budget_ms > 0 && ms >= entries[i].budget_ms)
            c.check(false, "runtime " + std::to_string(ms) + " ms exceeds the " +
                               std::to_string(entries[i].budget_ms) + " ms budget");
        const bool pass = c.errors.empty();
        failures += pass ? 0 : 1;
        std::printf("criterion %zu: %s  [%s] (%.0f ms)\n", i + 1, entries[i].label,
                    pass ? "PASS" : "FAIL", ms);
        for (const std::string& err : c.errors) std::printf("        - %s\n", err.c_str());
    }
    std::printf("%d of %zu criteria failed\n", failures, entries.size());
    return failures == 0 ? 0 : 1;
}
