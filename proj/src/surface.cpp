#include "nsurf/surface.hpp"

#include "nsurf/tetra.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace nsurf {

namespace {

/// Quad/octagon arcs cutting corner v on face f of tetrahedron i:
/// q of type pair_quad(f,v) plus the octagons of the other two types.
Int qk_part(const IntVec& qo, int tet, int face, int corner) {
    const int m = pair_quad(face, corner);
    Int s = qo[col_q(CoordSystem::QUAD_OCT, tet, m)];
    for (int mm = 1; mm <= 3; ++mm)
        if (mm != m) s += qo[col_k(CoordSystem::QUAD_OCT, tet, mm)];
    return s;
}

void require_system(const CoordVector& vec, CoordSystem want, const char* who) {
    if (vec.system != want)
        throw std::invalid_argument(std::string(who) + ": wrong coordinate system");
}

int require_tet_count(const CoordVector& vec, const Triangulation& tri, const char* who) {
    if (static_cast<int>(vec.entries.size()) != dimension(vec.system, tri.size()))
        throw std::invalid_argument(std::string(who) + ": dimension mismatch");
    return tri.size();
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

CoordVector project(const CoordVector& vec) {
    require_system(vec, CoordSystem::AN_STD, "project");
    const int n = static_cast<int>(vec.entries.size()) / 10;
    CoordVector out;
    out.system = CoordSystem::QUAD_OCT;
    out.entries.assign(dimension(out.system, n), Int(0));
    for (int i = 0; i < n; ++i)
        for (int m = 1; m <= 3; ++m) {
            out.entries[col_q(out.system, i, m)] = vec.entries[col_q(vec.system, i, m)];
            out.entries[col_k(out.system, i, m)] = vec.entries[col_k(vec.system, i, m)];
        }
    return out;
}

CoordVector extend_to_standard(const CoordVector& vec, const Triangulation& tri) {
    require_system(vec, CoordSystem::QUAD_OCT, "extend_to_standard");
    const int n = require_tet_count(vec, tri, "extend_to_standard");
    for (const Int& x : vec.entries)
        if (x < 0) throw std::invalid_argument("extend_to_standard: negative input");

    const Skeleton sk = build_skeleton(tri);

    // Arrows between corner slots (tet*4 + corner): t[src] - t[tgt] = k,
    // one per (internal face class, corner), oriented from the smaller
    // slot.
    struct Arrow {
        int src, tgt;
        Int k;
    };
    std::vector<Arrow> arrows;
    for (int fc = 0; fc < sk.face_class_count(); ++fc) {
        const FaceClass& cls = sk.face_class(fc);
        if (cls.boundary) continue;
        const auto [i, f] = cls.slots[0];
        const Gluing& g = *tri.gluing(i, f);
        for (int v : face_corners(f)) {
            const int a = i * 4 + v;
            const int b = g.tet * 4 + g.perm[v];
            Int diff = qk_part(vec.entries, g.tet, g.face, g.perm[v]) -
                       qk_part(vec.entries, i, f, v);
            if (a <= b)
                arrows.push_back({a, b, std::move(diff)});
            else
                arrows.push_back({b, a, -diff});
        }
    }

    std::vector<std::vector<int>> adj(4 * n);
    for (int idx = 0; idx < static_cast<int>(arrows.size()); ++idx) {
        adj[arrows[idx].src].push_back(idx);
        if (arrows[idx].tgt != arrows[idx].src) adj[arrows[idx].tgt].push_back(idx);
    }

    std::vector<Int> tval(4 * n, Int(0));
    std::vector<char> seen(4 * n, 0);
    for (int vc = 0; vc < sk.vertex_class_count(); ++vc) {
        const VertexClass& cls = sk.vertex_class(vc);
        const int root = cls.slots[0].first * 4 + cls.slots[0].second;
        seen[root] = 1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            for (int idx : adj[x]) {
                const Arrow& ar = arrows[idx];
                const int other = (ar.src == x) ? ar.tgt : ar.src;
                if (seen[other]) continue;
                tval[other] =
                    (other == ar.tgt) ? Int(tval[ar.src] - ar.k) : Int(tval[ar.tgt] + ar.k);
                seen[other] = 1;
                queue.push_back(other);
            }
        }
        // Shift the link so its minimum triangle value is zero.
        Int mn = tval[root];
        for (const auto& [ti, cv] : cls.slots) mn = std::min(mn, tval[ti * 4 + cv]);
        for (const auto& [ti, cv] : cls.slots) tval[ti * 4 + cv] -= mn;
    }

    // Cocycle condition: every arrow (tree or not) must be consistent.
    for (const Arrow& ar : arrows)
        if (tval[ar.src] - tval[ar.tgt] != ar.k)
            throw std::domain_error(
                "extend_to_standard: matching equations violated (cocycle failure)");

    CoordVector out;
    out.system = CoordSystem::AN_STD;
    out.entries.assign(dimension(out.system, n), Int(0));
    for (int i = 0; i < n; ++i) {
        for (int v = 0; v < 4; ++v) out.entries[col_t(out.system, i, v)] = tval[i * 4 + v];
        for (int m = 1; m <= 3; ++m) {
            out.entries[col_q(out.system, i, m)] = vec.entries[col_q(vec.system, i, m)];
            out.entries[col_k(out.system, i, m)] = vec.entries[col_k(vec.system, i, m)];
        }
    }
    return out;
}

CoordVector to_joint(const CoordVector& vec) {
    require_system(vec, CoordSystem::QUAD_OCT, "to_joint");
    const int n = static_cast<int>(vec.entries.size()) / 6;
    CoordVector out;
    out.system = CoordSystem::JOINT;
    out.entries.assign(3 * n, Int(0));
    for (int i = 0; i < n; ++i)
        for (int m = 1; m <= 3; ++m) {
            const Int& q = vec.entries[col_q(vec.system, i, m)];
            const Int& k = vec.entries[col_k(vec.system, i, m)];
            if (q != 0 && k != 0)
                throw std::invalid_argument(
                    "to_joint: quadrilateral and octagon both non-zero in the same position pair");
            out.entries[col_j(i, m)] = q - k;
        }
    return out;
}

CoordVector from_joint(const CoordVector& vec) {
    require_system(vec, CoordSystem::JOINT, "from_joint");
    const int n = static_cast<int>(vec.entries.size()) / 3;
    CoordVector out;
    out.system = CoordSystem::QUAD_OCT;
    out.entries.assign(6 * n, Int(0));
    for (int i = 0; i < n; ++i)
        for (int m = 1; m <= 3; ++m) {
            const Int& j = vec.entries[col_j(i, m)];
            if (j > 0)
                out.entries[col_q(out.system, i, m)] = j;
            else if (j < 0)
                out.entries[col_k(out.system, i, m)] = -j;
        }
    return out;
}

CoordVector an_std_form(const CoordVector& vec, const Triangulation& tri) {
    require_tet_count(vec, tri, "an_std_form");
    const int n = static_cast<int>(tri.size());
    switch (vec.system) {
    case CoordSystem::AN_STD:
        return vec;
    case CoordSystem::STD: {
        CoordVector out;
        out.system = CoordSystem::AN_STD;
        out.entries.assign(10 * n, Int(0));
        for (int i = 0; i < n; ++i) {
            for (int v = 0; v < 4; ++v)
                out.entries[col_t(out.system, i, v)] =
                    vec.entries[col_t(vec.system, i, v)];
            for (int m = 1; m <= 3; ++m)
                out.entries[col_q(out.system, i, m)] =
                    vec.entries[col_q(vec.system, i, m)];
        }
        return out;
    }
    case CoordSystem::QUAD: {
        CoordVector qo;
        qo.system = CoordSystem::QUAD_OCT;
        qo.entries.assign(6 * n, Int(0));
        for (int i = 0; i < n; ++i)
            for (int m = 1; m <= 3; ++m)
                qo.entries[col_q(qo.system, i, m)] =
                    vec.entries[col_q(vec.system, i, m)];
        return extend_to_standard(qo, tri);
    }
    case CoordSystem::QUAD_OCT:
        return extend_to_standard(vec, tri);
    case CoordSystem::JOINT:
        return extend_to_standard(from_joint(vec), tri);
    }
    throw std::invalid_argument("an_std_form: unknown coordinate system");
}

IntVec edge_weights(const CoordVector& vec, const Triangulation& tri) {
    require_system(vec, CoordSystem::AN_STD, "edge_weights");
    require_tet_count(vec, tri, "edge_weights");
    const Skeleton sk = build_skeleton(tri);
    IntVec w(sk.edge_class_count(), Int(0));
    for (int ec = 0; ec < sk.edge_class_count(); ++ec) {
        const auto [i, e] = sk.edge_class(ec).slots[0];
        const auto [a, b] = kEdgeCorners[e];
        const int m = pair_quad(a, b);
        Int s = vec.entries[col_t(vec.system, i, a)] + vec.entries[col_t(vec.system, i, b)];
        for (int mm = 1; mm <= 3; ++mm) {
            if (mm == m) continue;
            s += vec.entries[col_q(vec.system, i, mm)];
            s += vec.entries[col_k(vec.system, i, mm)];
        }
        s += 2 * vec.entries[col_k(vec.system, i, m)];
        w[ec] = s;
    }
    return w;
}

Int euler_characteristic(const CoordVector& vec, const Triangulation& tri) {
    require_system(vec, CoordSystem::AN_STD, "euler_characteristic");
    require_tet_count(vec, tri, "euler_characteristic");
    for (const Int& x : vec.entries)
        if (x < 0) throw std::invalid_argument("euler_characteristic: negative entries");
    const Skeleton sk = build_skeleton(tri);

    Int faces = 0;
    for (const Int& x : vec.entries) faces += x;

    Int vertices = 0;
    for (const Int& x : edge_weights(vec, tri)) vertices += x;

    Int edges = 0;
    for (int fc = 0; fc < sk.face_class_count(); ++fc) {
        const auto [i, f] = sk.face_class(fc).slots[0];
        Int arcs = 0;
        for (int v : face_corners(f)) arcs += vec.entries[col_t(vec.system, i, v)];
        for (int m = 1; m <= 3; ++m) {
            arcs += vec.entries[col_q(vec.system, i, m)];
            arcs += 2 * vec.entries[col_k(vec.system, i, m)];
        }
        edges += arcs;
    }
    return vertices - edges + faces;
}

CoordVector vertex_link_vector(const Skeleton& sk, int vertex_class, CoordSystem system) {
    if (system != CoordSystem::STD && system != CoordSystem::AN_STD)
        throw std::invalid_argument("vertex_link_vector: requires STD or AN_STD");
    CoordVector out;
    out.system = system;
    out.entries.assign(dimension(system, sk.tri().size()), Int(0));
    for (const auto& [i, v] : sk.vertex_class(vertex_class).slots)
        out.entries[col_t(system, i, v)] = 1;
    return out;
}

namespace {

/// Copy order flag: parallel quad/octagon copies of type m are indexed
/// from the side of the pair containing corner 0, so arcs and crossings at
/// a corner of that pair see ascending copy indices.
bool ascending_from(int corner, int type) {
    return corner == 0 || corner == pair_partner(type, 0);
}

}  // namespace

CellComplex build_cell_complex(const CoordVector& vec, const Triangulation& tri) {
    require_system(vec, CoordSystem::AN_STD, "build_cell_complex");
    const int n = require_tet_count(vec, tri, "build_cell_complex");
    {
        const AdmissibilityVerdict verdict = check_admissible(vec, tri);
        if (!verdict.admissible())
            throw std::invalid_argument("build_cell_complex: inadmissible vector: " +
                                        verdict.reason);
    }

    CellComplex cx;
    cx.tri = tri;
    cx.vec = vec;

    // Disc counts as machine integers.
    auto count = [&](int col) -> long long {
        long long c;
        try {
            c = to_int64(vec.entries[col]);
        } catch (const std::domain_error&) {
            throw std::domain_error("build_cell_complex: surface too large to materialize");
        }
        return c;
    };
    long long total = 0;
    std::vector<std::array<long long, 4>> tcount(n);
    std::vector<std::array<long long, 4>> qcount(n), kcount(n);  // index by type 1..3
    for (int i = 0; i < n; ++i) {
        for (int v = 0; v < 4; ++v) total += tcount[i][v] = count(col_t(vec.system, i, v));
        for (int m = 1; m <= 3; ++m) {
            total += qcount[i][m] = count(col_q(vec.system, i, m));
            total += kcount[i][m] = count(col_k(vec.system, i, m));
        }
    }
    if (total > 2'000'000)
        throw std::domain_error("build_cell_complex: surface too large to materialize");

    // Instantiate discs; remember each stack's first index.
    std::vector<std::array<long long, 4>> tbase(n), qbase(n), kbase(n);
    for (int i = 0; i < n; ++i) {
        for (int v = 0; v < 4; ++v) {
            tbase[i][v] = static_cast<long long>(cx.discs.size());
            for (long long c = 0; c < tcount[i][v]; ++c)
                cx.discs.push_back({i, DiscKind::Triangle, v, c});
        }
        for (int m = 1; m <= 3; ++m) {
            qbase[i][m] = static_cast<long long>(cx.discs.size());
            for (long long c = 0; c < qcount[i][m]; ++c)
                cx.discs.push_back({i, DiscKind::Quad, m, c});
            kbase[i][m] = static_cast<long long>(cx.discs.size());
            for (long long c = 0; c < kcount[i][m]; ++c)
                cx.discs.push_back({i, DiscKind::Octagon, m, c});
        }
    }

    // Edge crossings per disc, with a lookup by (disc, edge, sub).
    std::unordered_map<long long, int> crossing_index;
    auto add_crossing = [&](int disc, int edge, int sub) {
        crossing_index[(static_cast<long long>(disc) * 6 + edge) * 2 + sub] =
            static_cast<int>(cx.crossings.size());
        cx.crossings.push_back({disc, edge, sub});
    };
    for (int d = 0; d < static_cast<int>(cx.discs.size()); ++d) {
        const Disc& disc = cx.discs[d];
        for (int e = 0; e < 6; ++e) {
            const auto [a, b] = kEdgeCorners[e];
            switch (disc.kind) {
                case DiscKind::Triangle:
                    if (a == disc.type || b == disc.type) add_crossing(d, e, 0);
                    break;
                case DiscKind::Quad:
                    if (pair_quad(a, b) != disc.type) add_crossing(d, e, 0);
                    break;
                case DiscKind::Octagon:
                    add_crossing(d, e, 0);
                    if (pair_quad(a, b) == disc.type) add_crossing(d, e, 1);
                    break;
            }
        }
    }
    auto crossing_of = [&](int disc, int edge, int cut_corner) {
        const Disc& dd = cx.discs[disc];
        const auto [a, b] = kEdgeCorners[edge];
        int sub = 0;
        if (dd.kind == DiscKind::Octagon && pair_quad(a, b) == dd.type)
            sub = (cut_corner == std::min(a, b)) ? 0 : 1;
        return crossing_index.at((static_cast<long long>(disc) * 6 + edge) * 2 + sub);
    };

    // Arc lists per (face slot, cut corner), ordered near -> far from the
    // corner: triangle copies first, then the single quad/octagon stack.
    auto list_key = [](int tet, int face, int corner) { return (tet * 4 + face) * 4 + corner; };
    std::vector<std::vector<int>> arc_list(16 * n);
    for (int i = 0; i < n; ++i) {
        for (int f = 0; f < 4; ++f) {
            for (int v : face_corners(f)) {
                std::vector<int>& L = arc_list[list_key(i, f, v)];
                auto push_arc = [&](int disc) {
                    L.push_back(static_cast<int>(cx.arcs.size()));
                    cx.arcs.push_back({disc, f, v});
                };
                for (long long c = 0; c < tcount[i][v]; ++c)
                    push_arc(static_cast<int>(tbase[i][v] + c));
                const int m0 = pair_quad(f, v);
                if (qcount[i][m0] > 0) {
                    const long long cnt = qcount[i][m0];
                    if (ascending_from(v, m0))
                        for (long long c = 0; c < cnt; ++c)
                            push_arc(static_cast<int>(qbase[i][m0] + c));
                    else
                        for (long long c = cnt; c-- > 0;)
                            push_arc(static_cast<int>(qbase[i][m0] + c));
                }
                for (int m = 1; m <= 3; ++m) {
                    if (m == m0 || kcount[i][m] == 0) continue;
                    const long long cnt = kcount[i][m];
                    if (ascending_from(v, m))
                        for (long long c = 0; c < cnt; ++c)
                            push_arc(static_cast<int>(kbase[i][m] + c));
                    else
                        for (long long c = cnt; c-- > 0;)
                            push_arc(static_cast<int>(kbase[i][m] + c));
                }
            }
        }
    }

    // Glue across internal faces; collect boundary arcs; identify
    // crossings through the gluings; track disc components.
    UnionFind disc_uf(static_cast<int>(cx.discs.size()));
    UnionFind cross_uf(static_cast<int>(cx.crossings.size()));
    const Skeleton sk = build_skeleton(tri);
    for (int fc = 0; fc < sk.face_class_count(); ++fc) {
        const FaceClass& cls = sk.face_class(fc);
        const auto [i, f] = cls.slots[0];
        if (cls.boundary) {
            for (int v : face_corners(f))
                for (int arc : arc_list[list_key(i, f, v)]) cx.free_arcs.push_back(arc);
            continue;
        }
        const Gluing& g = *tri.gluing(i, f);
        for (int v : face_corners(f)) {
            const std::vector<int>& L1 = arc_list[list_key(i, f, v)];
            const std::vector<int>& L2 = arc_list[list_key(g.tet, g.face, g.perm[v])];
            if (L1.size() != L2.size())
                throw std::logic_error("build_cell_complex: arc counts fail to match across a face");
            for (std::size_t p = 0; p < L1.size(); ++p) {
                const int a1 = L1[p], a2 = L2[p];
                cx.glued_arcs.emplace_back(a1, a2);
                disc_uf.unite(cx.arcs[a1].disc, cx.arcs[a2].disc);
                // Identify the two endpoint crossings of the glued arcs.
                const auto fcors = face_corners(f);
                for (int o : fcors) {
                    if (o == v) continue;
                    const int e1 = edge_index(v, o);
                    const int e2 = edge_index(g.perm[v], g.perm[o]);
                    cross_uf.unite(crossing_of(cx.arcs[a1].disc, e1, v),
                                   crossing_of(cx.arcs[a2].disc, e2, g.perm[v]));
                }
            }
        }
    }

    cx.crossing_rep.resize(cx.crossings.size());
    for (int c = 0; c < static_cast<int>(cx.crossings.size()); ++c)
        cx.crossing_rep[c] = cross_uf.find(c);

    cx.disc_component.assign(cx.discs.size(), -1);
    std::unordered_map<int, int> comp_of_rep;
    for (int d = 0; d < static_cast<int>(cx.discs.size()); ++d) {
        const int rep = disc_uf.find(d);
        auto [it, inserted] = comp_of_rep.emplace(rep, cx.component_count);
        if (inserted) ++cx.component_count;
        cx.disc_component[d] = it->second;
    }
    return cx;
}

std::string surface_class_name(SurfaceClass c) {
    switch (c) {
        case SurfaceClass::Empty: return "Empty";
        case SurfaceClass::VertexLink: return "VertexLink";
        case SurfaceClass::NormalSphere: return "NormalSphere";
        case SurfaceClass::AlmostNormalSphere: return "AlmostNormalSphere";
        case SurfaceClass::Torus: return "Torus";
        case SurfaceClass::Other: return "Other";
    }
    return "Other";
}

SurfaceReport components(const CellComplex& cx) {
    SurfaceReport report;
    report.total_edge_weights = edge_weights(cx.vec, cx.tri);
    if (cx.discs.empty()) return report;

    const Skeleton sk = build_skeleton(cx.tri);
    const bool ambient_orientable = is_orientable(cx.tri);
    std::vector<CoordVector> links;
    for (int vc = 0; vc < sk.vertex_class_count(); ++vc)
        links.push_back(vertex_link_vector(sk, vc, CoordSystem::AN_STD));

    const int nc = cx.component_count;
    const int n = cx.tri.size();
    std::vector<IntVec> vecs(nc, IntVec(dimension(CoordSystem::AN_STD, n), Int(0)));
    std::vector<long long> fcount(nc, 0), ecount(nc, 0), occount(nc, 0);
    std::vector<std::unordered_set<int>> vreps(nc);

    for (int d = 0; d < static_cast<int>(cx.discs.size()); ++d) {
        const Disc& disc = cx.discs[d];
        const int comp = cx.disc_component[d];
        ++fcount[comp];
        int col = 0;
        switch (disc.kind) {
            case DiscKind::Triangle: col = col_t(CoordSystem::AN_STD, disc.tet, disc.type); break;
            case DiscKind::Quad: col = col_q(CoordSystem::AN_STD, disc.tet, disc.type); break;
            case DiscKind::Octagon:
                col = col_k(CoordSystem::AN_STD, disc.tet, disc.type);
                ++occount[comp];
                break;
        }
        vecs[comp][col] += 1;
    }
    for (const auto& [a1, a2] : cx.glued_arcs) ++ecount[cx.disc_component[cx.arcs[a1].disc]];
    for (int arc : cx.free_arcs) ++ecount[cx.disc_component[cx.arcs[arc].disc]];
    for (int c = 0; c < static_cast<int>(cx.crossings.size()); ++c)
        vreps[cx.disc_component[cx.crossings[c].disc]].insert(cx.crossing_rep[c]);

    for (int comp = 0; comp < nc; ++comp) {
        ComponentSummary s;
        s.vector.system = CoordSystem::AN_STD;
        s.vector.entries = std::move(vecs[comp]);
        s.chi = Int(static_cast<long long>(vreps[comp].size()) - ecount[comp] + fcount[comp]);
        s.octagons = occount[comp];
        for (const CoordVector& link : links)
            if (s.vector.entries == link.entries) {
                s.is_vertex_link = true;
                break;
            }
        if (s.is_vertex_link)
            s.cls = SurfaceClass::VertexLink;
        else if (s.chi == 2 && s.octagons == 0)
            s.cls = SurfaceClass::NormalSphere;
        else if (s.chi == 2 && s.octagons == 1)
            s.cls = SurfaceClass::AlmostNormalSphere;
        else if (s.chi == 0 && ambient_orientable)
            s.cls = SurfaceClass::Torus;
        else
            s.cls = SurfaceClass::Other;
        report.components.push_back(std::move(s));
    }
    return report;
}

}  // namespace nsurf
