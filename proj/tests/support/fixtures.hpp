#pragma once

// Shared fixture access for the test binaries.  NSURF_FIXTURE_DIR is set by
// the build to the source-tree fixtures/ directory; generated lens fixtures
// are created on demand so the tests do not depend on committed binaries.

#include "nsurf/lens.hpp"
#include "nsurf/triangulation.hpp"

#include <string>

namespace nsurf_test {

inline std::string fixture_path(const std::string& file) {
    return std::string(NSURF_FIXTURE_DIR) + "/" + file;
}

inline nsurf::Triangulation load_fixture(const std::string& file) {
    return nsurf::load_triangulation(fixture_path(file));
}

/// The one-tetrahedron 3-sphere, inline so parser regressions cannot hide
/// geometry regressions.
inline nsurf::Triangulation s3_one_tet() {
    return nsurf::parse_triangulation(
        "tets 1\n"
        "tet 0: 0:3012 0:0213 0:0213 0:1230\n",
        "s3_one_tet");
}

/// The snapped one-tetrahedron 3-ball (faces 2 and 3 folded together).
inline nsurf::Triangulation ball_one_tet() {
    return nsurf::parse_triangulation(
        "tets 1\n"
        "tet 0: bdry bdry 0:0132 0:0132\n",
        "ball_one_tet");
}

}  // namespace nsurf_test
