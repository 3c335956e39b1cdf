#include "nsurf/surface.hpp"

#include "nsurf/enum_dd.hpp"
#include "support/fixtures.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace nsurf;

namespace {

CoordVector cv(CoordSystem system, IntVec entries) {
    CoordVector v;
    v.system = system;
    v.entries = std::move(entries);
    return v;
}

}  // namespace

TEST_CASE("projection drops triangles; extension restores them minimally") {
    const Triangulation tri = nsurf_test::s3_one_tet();

    // The central quad surface: q3 = 1 extends with triangles (0,1,1,0).
    const CoordVector q3 = cv(CoordSystem::QUAD_OCT, {0, 0, 1, 0, 0, 0});
    const CoordVector eq3 = extend_to_standard(q3, tri);
    CHECK(eq3.system == CoordSystem::AN_STD);
    CHECK(eq3.entries == IntVec{0, 1, 1, 0, 0, 0, 1, 0, 0, 0});

    // The octagon surface: k3 = 1 extends with triangles (1,0,0,1).
    const CoordVector k3 = cv(CoordSystem::QUAD_OCT, {0, 0, 0, 0, 0, 1});
    const CoordVector ek3 = extend_to_standard(k3, tri);
    CHECK(ek3.entries == IntVec{1, 0, 0, 1, 0, 0, 0, 0, 0, 1});

    // pi inverts epsilon, scaling commutes, and the zero vector is fixed.
    for (const CoordVector* v : {&q3, &k3}) {
        const CoordVector ext = extend_to_standard(*v, tri);
        CHECK(project(ext).entries == v->entries);
        for (int lambda = 0; lambda <= 3; ++lambda) {
            IntVec scaled = v->entries;
            for (Int& x : scaled) x *= lambda;
            IntVec expect = ext.entries;
            for (Int& x : expect) x *= lambda;
            CHECK(extend_to_standard(cv(CoordSystem::QUAD_OCT, scaled), tri).entries ==
                  expect);
        }
    }
    CHECK(extend_to_standard(cv(CoordSystem::QUAD_OCT, IntVec(6, Int(0))), tri)
              .entries == IntVec(10, Int(0)));

    // Wrong system / negative input / equation failure.
    CHECK_THROWS_AS(extend_to_standard(cv(CoordSystem::QUAD, {0, 0, 1}), tri),
                    std::invalid_argument);
    CHECK_THROWS_AS(extend_to_standard(cv(CoordSystem::QUAD_OCT, {0, 0, -1, 0, 0, 0}), tri),
                    std::invalid_argument);
    CHECK_THROWS_AS(extend_to_standard(cv(CoordSystem::QUAD_OCT, {1, 0, 0, 0, 0, 0}), tri),
                    std::domain_error);

    CHECK(project(cv(CoordSystem::AN_STD, {5, 6, 7, 8, 1, 2, 3, 4, 5, 6})).entries ==
          IntVec{1, 2, 3, 4, 5, 6});
    // Projection is defined on AN_STD only; other systems are rejected.
    CHECK_THROWS_AS(project(cv(CoordSystem::STD, {5, 6, 7, 8, 1, 2, 3})), std::invalid_argument);
    CHECK_THROWS_AS(project(cv(CoordSystem::QUAD, {1, 2, 3})), std::invalid_argument);
}

TEST_CASE("joint conversion is a bijection on admissible data") {
    const CoordVector qo = cv(CoordSystem::QUAD_OCT, {2, 0, 0, 0, 3, 0});
    const CoordVector j = to_joint(qo);
    CHECK(j.system == CoordSystem::JOINT);
    CHECK(j.entries == IntVec{2, -3, 0});
    CHECK(from_joint(j).entries == qo.entries);

    // Octagons alongside quads of the same type cannot be encoded.
    CHECK_THROWS_AS(to_joint(cv(CoordSystem::QUAD_OCT, {1, 0, 0, 1, 0, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(to_joint(cv(CoordSystem::QUAD, {1, 0, 0})), std::invalid_argument);

    // from_joint . to_joint is the identity on every joint vector.
    const CoordVector back = from_joint(to_joint(cv(CoordSystem::QUAD_OCT, {0, 1, 0, 0, 0, 2})));
    CHECK(back.entries == IntVec{0, 1, 0, 0, 0, 2});
}

TEST_CASE("standard forms of any system agree") {
    const Triangulation tri = nsurf_test::s3_one_tet();
    const IntVec expect = {1, 0, 0, 1, 0, 0, 0, 0, 0, 1};
    CHECK(an_std_form(cv(CoordSystem::QUAD_OCT, {0, 0, 0, 0, 0, 1}), tri).entries == expect);
    CHECK(an_std_form(cv(CoordSystem::JOINT, {0, 0, -1}), tri).entries == expect);
    CHECK(an_std_form(cv(CoordSystem::AN_STD, expect), tri).entries == expect);
    CHECK(an_std_form(cv(CoordSystem::QUAD, {0, 0, 1}), tri).entries ==
          IntVec{0, 1, 1, 0, 0, 0, 1, 0, 0, 0});
    CHECK(an_std_form(cv(CoordSystem::STD, {0, 1, 1, 0, 0, 0, 1}), tri).entries ==
          IntVec{0, 1, 1, 0, 0, 0, 1, 0, 0, 0});
}

TEST_CASE("edge weights and linear Euler characteristic, frozen") {
    const Triangulation tri = nsurf_test::s3_one_tet();
    const CoordVector link = cv(CoordSystem::AN_STD, {1, 1, 1, 1, 0, 0, 0, 0, 0, 0});
    const CoordVector quad = cv(CoordSystem::AN_STD, {0, 1, 1, 0, 0, 0, 1, 0, 0, 0});
    const CoordVector oct = cv(CoordSystem::AN_STD, {1, 0, 0, 1, 0, 0, 0, 0, 0, 1});

    CHECK(edge_weights(link, tri) == IntVec{2, 2});
    CHECK(edge_weights(quad, tri) == IntVec{2, 0});
    CHECK(edge_weights(oct, tri) == IntVec{2, 4});  // the octagon doubles its edge

    CHECK(euler_characteristic(link, tri) == 2);
    CHECK(euler_characteristic(quad, tri) == 0);
    CHECK(euler_characteristic(oct, tri) == 2);

    // Linearity over sums that stay admissible: parallel link copies.
    const CoordVector two_links = cv(CoordSystem::AN_STD, {2, 2, 2, 2, 0, 0, 0, 0, 0, 0});
    CHECK(euler_characteristic(two_links, tri) == 4);

    CHECK_THROWS_AS(euler_characteristic(cv(CoordSystem::QUAD, {0, 0, 1}), tri),
                    std::invalid_argument);
}

TEST_CASE("vertex link vectors") {
    const Triangulation tri = nsurf_test::s3_one_tet();
    const Skeleton sk = build_skeleton(tri);
    const CoordVector link = vertex_link_vector(sk, 0, CoordSystem::AN_STD);
    CHECK(link.entries == IntVec{1, 1, 1, 1, 0, 0, 0, 0, 0, 0});
    const CoordVector link_std = vertex_link_vector(sk, 0, CoordSystem::STD);
    CHECK(link_std.entries == IntVec{1, 1, 1, 1, 0, 0, 0});

    const Triangulation ball = nsurf_test::ball_one_tet();
    const Skeleton bsk = build_skeleton(ball);
    // Corners 2 and 3 are identified: their class's link uses both corners.
    Int total = 0;
    for (int vc = 0; vc < bsk.vertex_class_count(); ++vc) {
        const CoordVector lv = vertex_link_vector(bsk, vc, CoordSystem::AN_STD);
        for (int c = 0; c < 4; ++c) total += lv.entries[c];
    }
    CHECK(total == 4);  // every corner belongs to exactly one link
}

TEST_CASE("cell complex of the octagon sphere, frozen counts") {
    const Triangulation tri = nsurf_test::s3_one_tet();
    const CoordVector oct = cv(CoordSystem::AN_STD, {1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
    const CellComplex cx = build_cell_complex(oct, tri);

    REQUIRE(cx.discs.size() == 3);  // two triangles and one octagon
    int triangles = 0, octagons = 0;
    for (const Disc& d : cx.discs) {
        if (d.kind == DiscKind::Triangle) ++triangles;
        if (d.kind == DiscKind::Octagon) ++octagons;
    }
    CHECK(triangles == 2);
    CHECK(octagons == 1);

    CHECK(cx.arcs.size() == 14);       // 3 + 3 + 8
    CHECK(cx.crossings.size() == 14);  // 3 + 3 + (6 + 2)
    CHECK(cx.glued_arcs.size() == 7);
    CHECK(cx.free_arcs.empty());
    CHECK(cx.component_count == 1);

    // 0-cells after identification = total edge weight = 2 + 4.
    std::set<int> reps(cx.crossing_rep.begin(), cx.crossing_rep.end());
    CHECK(reps.size() == 6);

    const SurfaceReport report = components(cx);
    REQUIRE(report.components.size() == 1);
    const ComponentSummary& c = report.components[0];
    CHECK(c.chi == 2);
    CHECK(c.octagons == 1);
    CHECK(!c.is_vertex_link);
    CHECK(c.cls == SurfaceClass::AlmostNormalSphere);
    CHECK(report.total_edge_weights == IntVec{2, 4});
}

TEST_CASE("component classification: links, tori, parallel copies") {
    const Triangulation tri = nsurf_test::s3_one_tet();

    {
        const CellComplex cx =
            build_cell_complex(cv(CoordSystem::AN_STD, {1, 1, 1, 1, 0, 0, 0, 0, 0, 0}), tri);
        const SurfaceReport report = components(cx);
        REQUIRE(report.components.size() == 1);
        CHECK(report.components[0].cls == SurfaceClass::VertexLink);
        CHECK(report.components[0].is_vertex_link);
        CHECK(report.components[0].chi == 2);
    }
    {
        // Two parallel copies of the vertex link: two sphere components,
        // each equal to the link vector.
        const CellComplex cx =
            build_cell_complex(cv(CoordSystem::AN_STD, {2, 2, 2, 2, 0, 0, 0, 0, 0, 0}), tri);
        const SurfaceReport report = components(cx);
        REQUIRE(report.components.size() == 2);
        for (const ComponentSummary& c : report.components) {
            CHECK(c.cls == SurfaceClass::VertexLink);
            CHECK(c.vector.entries == IntVec{1, 1, 1, 1, 0, 0, 0, 0, 0, 0});
        }
    }
    {
        // The central quad surface is a torus (chi = 0, no octagons).
        const CellComplex cx =
            build_cell_complex(cv(CoordSystem::AN_STD, {0, 1, 1, 0, 0, 0, 1, 0, 0, 0}), tri);
        const SurfaceReport report = components(cx);
        REQUIRE(report.components.size() == 1);
        CHECK(report.components[0].cls == SurfaceClass::Torus);
        CHECK(report.components[0].chi == 0);
        CHECK(report.components[0].octagons == 0);
    }
    {
        // Component vectors sum to the input.
        const CoordVector sum =
            cv(CoordSystem::AN_STD, {1, 2, 2, 1, 0, 0, 1, 0, 0, 0});  // link + quad
        const SurfaceReport report = components(build_cell_complex(sum, tri));
        REQUIRE(report.components.size() == 2);
        IntVec acc(10, Int(0));
        for (const ComponentSummary& c : report.components)
            for (int i = 0; i < 10; ++i) acc[i] += c.vector.entries[i];
        CHECK(acc == sum.entries);
    }

    // The empty surface has no components.
    const SurfaceReport empty =
        components(build_cell_complex(cv(CoordSystem::AN_STD, IntVec(10, Int(0))), tri));
    CHECK(empty.components.empty());

    // Inadmissible vectors cannot be materialized.
    CHECK_THROWS_AS(
        build_cell_complex(cv(CoordSystem::AN_STD, {2, 0, 0, 2, 0, 0, 0, 0, 0, 2}), tri),
        std::invalid_argument);
    CHECK_THROWS_AS(
        build_cell_complex(cv(CoordSystem::QUAD_OCT, {0, 0, 1, 0, 0, 0}), tri),
        std::invalid_argument);
}

TEST_CASE("boundary triangulations produce free arcs") {
    const Triangulation ball = nsurf_test::ball_one_tet();
    const Skeleton sk = build_skeleton(ball);
    // The link of the vertex class containing corners 2 and 3 is a disc.
    int vc23 = sk.vertex_class_of(0, 2);
    const CoordVector lv = vertex_link_vector(sk, vc23, CoordSystem::AN_STD);
    const CellComplex cx = build_cell_complex(lv, ball);
    CHECK(!cx.free_arcs.empty());
    const SurfaceReport report = components(cx);
    REQUIRE(report.components.size() == 1);
    CHECK(report.components[0].is_vertex_link);
    CHECK(report.components[0].cls == SurfaceClass::VertexLink);
}
