#include "nsurf/coords.hpp"

#include "nsurf/tetra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nsurf {

int block_size(CoordSystem system) {
    switch (system) {
        case CoordSystem::STD: return 7;
        case CoordSystem::QUAD: return 3;
        case CoordSystem::AN_STD: return 10;
        case CoordSystem::QUAD_OCT: return 6;
        case CoordSystem::JOINT: return 3;
    }
    throw std::logic_error("unknown coordinate system");
}

int dimension(CoordSystem system, int n) { return block_size(system) * n; }

std::string system_name(CoordSystem system) {
    switch (system) {
        case CoordSystem::STD: return "std";
        case CoordSystem::QUAD: return "quad";
        case CoordSystem::AN_STD: return "an-std";
        case CoordSystem::QUAD_OCT: return "quad-oct";
        case CoordSystem::JOINT: return "joint";
    }
    throw std::logic_error("unknown coordinate system");
}

CoordSystem system_from_name(const std::string& name) {
    if (name == "std") return CoordSystem::STD;
    if (name == "quad") return CoordSystem::QUAD;
    if (name == "an-std") return CoordSystem::AN_STD;
    if (name == "quad-oct") return CoordSystem::QUAD_OCT;
    if (name == "joint") return CoordSystem::JOINT;
    throw std::invalid_argument("unknown coordinate system name: " + name);
}

int col_t(CoordSystem system, int tet, int corner) {
    if (system != CoordSystem::STD && system != CoordSystem::AN_STD)
        throw std::logic_error("system has no triangle coordinates");
    return tet * block_size(system) + corner;
}

int col_q(CoordSystem system, int tet, int type) {
    switch (system) {
        case CoordSystem::STD:
        case CoordSystem::AN_STD:
            return tet * block_size(system) + 4 + (type - 1);
        case CoordSystem::QUAD:
        case CoordSystem::QUAD_OCT:
            return tet * block_size(system) + (type - 1);
        default:
            throw std::logic_error("system has no quadrilateral coordinates");
    }
}

int col_k(CoordSystem system, int tet, int type) {
    switch (system) {
        case CoordSystem::AN_STD:
            return tet * 10 + 7 + (type - 1);
        case CoordSystem::QUAD_OCT:
            return tet * 6 + 3 + (type - 1);
        default:
            throw std::logic_error("system has no octagon coordinates");
    }
}

int col_j(int tet, int type) { return tet * 3 + (type - 1); }

std::string RowProvenance::str() const {
    std::ostringstream os;
    if (face_class >= 0)
        os << "face " << face_class << ", edge " << edge_class;
    else
        os << "edge " << edge_class;
    return os.str();
}

Int EquationSystem::eval_row(int r, const IntVec& v) const {
    if (static_cast<int>(v.size()) != dim)
        throw std::invalid_argument("eval_row: dimension mismatch");
    Int s = 0;
    const IntVec& row = rows[r];
    for (int c = 0; c < dim; ++c)
        if (row[c] != 0) s += row[c] * v[c];
    return s;
}

bool EquationSystem::in_kernel(const IntVec& v) const {
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        if (eval_row(r, v) != 0) return false;
    return true;
}

void constraint_sets(int n, CoordSystem system,
                     std::vector<std::vector<int>>& groups,
                     std::vector<int>& global_octagon_group) {
    groups.clear();
    global_octagon_group.clear();
    for (int i = 0; i < n; ++i) {
        std::vector<int> g;
        switch (system) {
            case CoordSystem::STD:
                for (int m = 1; m <= 3; ++m) g.push_back(col_q(system, i, m));
                break;
            case CoordSystem::QUAD:
                for (int m = 1; m <= 3; ++m) g.push_back(col_q(system, i, m));
                break;
            case CoordSystem::AN_STD:
            case CoordSystem::QUAD_OCT:
                for (int m = 1; m <= 3; ++m) g.push_back(col_q(system, i, m));
                for (int m = 1; m <= 3; ++m) g.push_back(col_k(system, i, m));
                break;
            case CoordSystem::JOINT:
                for (int m = 1; m <= 3; ++m) g.push_back(col_j(i, m));
                break;
        }
        groups.push_back(std::move(g));
    }
    if (system == CoordSystem::AN_STD || system == CoordSystem::QUAD_OCT) {
        for (int i = 0; i < n; ++i)
            for (int m = 1; m <= 3; ++m)
                global_octagon_group.push_back(col_k(system, i, m));
    }
}

namespace {

// One row per (internal face class, edge of that face).  For the edge {a,b}
// of face f the arcs cutting the remaining corner u on the f side of tet i
// are counted by t_{i,u}, the quad of type pair_quad(f,u), and (almost
// normal systems) both octagons of the other two types; the gluing carries
// the same count to the partner face.
void build_face_rows(const Skeleton& sk, CoordSystem system, EquationSystem& eqs) {
    const Triangulation& tri = sk.tri();
    const bool almost = (system == CoordSystem::AN_STD);
    for (int fc = 0; fc < sk.face_class_count(); ++fc) {
        const FaceClass& cls = sk.face_class(fc);
        if (cls.boundary) continue;
        const auto [i, f] = cls.slots[0];
        const Gluing& g = *tri.gluing(i, f);
        const int j = g.tet;
        const int gf = g.face;
        const auto fcors = face_corners(f);
        for (int eo = 0; eo < 3; ++eo) {
            // Edges of face f in ascending edge-index order.
            int ea, eb;
            switch (eo) {
                case 0: ea = fcors[0]; eb = fcors[1]; break;
                case 1: ea = fcors[0]; eb = fcors[2]; break;
                default: ea = fcors[1]; eb = fcors[2]; break;
            }
            const int cut = third_corner(f, ea, eb);
            IntVec row(eqs.dim, Int(0));
            auto add_side = [&](int tet, int face, int corner, int sign) {
                row[col_t(system, tet, corner)] += sign;
                const int m = pair_quad(face, corner);
                row[col_q(system, tet, m)] += sign;
                if (almost)
                    for (int mm = 1; mm <= 3; ++mm)
                        if (mm != m) row[col_k(system, tet, mm)] += sign;
            };
            add_side(i, f, cut, +1);
            add_side(j, gf, g.perm[cut], -1);
            eqs.rows.push_back(std::move(row));
            RowProvenance pv;
            pv.face_class = fc;
            pv.edge_class = sk.edge_class_of(i, edge_index(ea, eb));
            eqs.provenance.push_back(pv);
        }
    }
}

// One row per internal edge class via a walk around the edge.  At each
// visit with lower endpoint a, entry face fin and exit face fout, the quad
// of type pair_quad(a, fin) rises across the entered face (+1) and the quad
// of type pair_quad(a, fout) falls (-1); octagons of the same types do the
// opposite.  Coefficients accumulate over repeated visits to one
// tetrahedron.
void build_edge_rows(const Skeleton& sk, CoordSystem system, EquationSystem& eqs) {
    const bool oct = (system == CoordSystem::QUAD_OCT);
    for (int ec = 0; ec < sk.edge_class_count(); ++ec) {
        const EdgeClass& cls = sk.edge_class(ec);
        if (cls.boundary) continue;
        IntVec row(eqs.dim, Int(0));
        for (const EdgeVisit& v : walk_edge_cycle(sk, ec)) {
            const int up = pair_quad(v.lower, v.entry);
            const int down = pair_quad(v.lower, v.exit);
            row[col_q(system, v.tet, up)] += 1;
            row[col_q(system, v.tet, down)] -= 1;
            if (oct) {
                row[col_k(system, v.tet, up)] -= 1;
                row[col_k(system, v.tet, down)] += 1;
            }
        }
        eqs.rows.push_back(std::move(row));
        RowProvenance pv;
        pv.edge_class = ec;
        eqs.provenance.push_back(pv);
    }
}

}  // namespace

EquationSystem matching_matrix(const Triangulation& tri, CoordSystem system) {
    const Skeleton sk = build_skeleton(tri);
    EquationSystem eqs;
    eqs.system = system;
    eqs.tri = tri;
    eqs.dim = dimension(system, tri.size());
    constraint_sets(tri.size(), system, eqs.constraint_groups, eqs.global_octagon_group);
    switch (system) {
        case CoordSystem::STD:
        case CoordSystem::AN_STD:
            build_face_rows(sk, system, eqs);
            break;
        case CoordSystem::QUAD:
        case CoordSystem::QUAD_OCT:
            build_edge_rows(sk, system, eqs);
            break;
        case CoordSystem::JOINT: {
            // j = q - k satisfies exactly the quadrilateral equations.
            EquationSystem quad = matching_matrix(tri, CoordSystem::QUAD);
            eqs.rows = std::move(quad.rows);
            eqs.provenance = std::move(quad.provenance);
            break;
        }
    }
    return eqs;
}

AdmissibilityVerdict check_admissible(const CoordVector& vec, const Triangulation& tri) {
    const CoordSystem system = vec.system;
    const int n = tri.size();
    if (static_cast<int>(vec.entries.size()) != dimension(system, n))
        throw std::invalid_argument("check_admissible: dimension mismatch");

    AdmissibilityVerdict verdict;
    auto fail = [&](const std::string& why) {
        verdict.kind = AdmissibilityVerdict::Inadmissible;
        verdict.reason = why;
        return verdict;
    };

    // Sign conditions.
    if (system == CoordSystem::JOINT) {
        int negatives = 0;
        for (const Int& x : vec.entries) {
            if (x < 0) {
                ++negatives;
                if (x != -1) return fail("negative entry other than -1");
            }
        }
        if (negatives > 1) return fail("more than one negative entry");
    } else {
        for (const Int& x : vec.entries)
            if (x < 0) return fail("negative entry");
    }

    // Matching equations.
    const EquationSystem eqs = matching_matrix(tri, system);
    for (int r = 0; r < static_cast<int>(eqs.rows.size()); ++r)
        if (eqs.eval_row(r, vec.entries) != 0)
            return fail("matching equation violated (" + eqs.provenance[r].str() + ")");

    // Per-tetrahedron constraint groups.
    for (int i = 0; i < n; ++i) {
        int nonzero = 0;
        for (int c : eqs.constraint_groups[i])
            if (vec.entries[c] != 0) ++nonzero;
        if (nonzero > 1) return fail("constraint group violated in tetrahedron " + std::to_string(i));
    }

    // Normal / almost normal trichotomy.
    if (system == CoordSystem::AN_STD || system == CoordSystem::QUAD_OCT) {
        int oct_positions = 0;
        Int oct_value = 0;
        for (int c : eqs.global_octagon_group) {
            if (vec.entries[c] != 0) {
                ++oct_positions;
                oct_value = vec.entries[c];
            }
        }
        if (oct_positions == 0) {
            verdict.kind = AdmissibilityVerdict::AdmissibleNormal;
        } else if (oct_positions == 1 && oct_value == 1) {
            verdict.kind = AdmissibilityVerdict::AdmissibleAlmostNormal;
        } else if (oct_positions == 1) {
            return fail("octagon coordinate exceeds 1");
        } else {
            return fail("octagon coordinates in more than one position");
        }
    } else if (system == CoordSystem::JOINT) {
        int negatives = 0;
        for (const Int& x : vec.entries)
            if (x < 0) ++negatives;
        verdict.kind = negatives == 0 ? AdmissibilityVerdict::AdmissibleNormal
                                      : AdmissibilityVerdict::AdmissibleAlmostNormal;
    } else {
        verdict.kind = AdmissibilityVerdict::AdmissibleNormal;
    }
    return verdict;
}

}  // namespace nsurf
