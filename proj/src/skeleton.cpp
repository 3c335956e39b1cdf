#include "nsurf/skeleton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace nsurf {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Group slot ids by union-find representative, ordered by least slot id
// (slot ids are already lexicographic in (tet, index)).
std::vector<std::vector<int>> classes_of(UnionFind& uf, int count) {
    std::map<int, std::vector<int>> by_rep;
    for (int s = 0; s < count; ++s) by_rep[uf.find(s)].push_back(s);
    std::vector<std::vector<int>> out;
    out.reserve(by_rep.size());
    for (auto& [rep, slots] : by_rep) out.push_back(std::move(slots));
    return out;
}

}  // namespace

Skeleton build_skeleton(const Triangulation& tri) {
    const int n = tri.size();
    Skeleton sk;
    sk.tri_ = tri;

    // ---- Face classes -------------------------------------------------
    UnionFind face_uf(4 * n);
    for (int i = 0; i < n; ++i)
        for (int f = 0; f < 4; ++f)
            if (const auto& g = tri.gluing(i, f))
                face_uf.unite(i * 4 + f, g->tet * 4 + g->face);
    sk.face_of_.assign(4 * n, -1);
    for (auto& slots : classes_of(face_uf, 4 * n)) {
        FaceClass fc;
        for (int s : slots) {
            fc.slots.emplace_back(s / 4, s % 4);
            sk.face_of_[s] = static_cast<int>(sk.faces_.size());
        }
        fc.boundary = tri.is_boundary_face(fc.slots[0].first, fc.slots[0].second);
        sk.faces_.push_back(std::move(fc));
    }

    // ---- Edge classes, with reversal detection ------------------------
    // Work on directed edge slots: id = (tet*6 + edge)*2 + dir, where dir 0
    // traverses the edge from its smaller corner to its larger one.
    UnionFind dir_uf(12 * n);
    UnionFind edge_uf(6 * n);
    for (int i = 0; i < n; ++i) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(i, f);
            if (!g) continue;
            const auto fc = face_corners(f);
            for (int a_i = 0; a_i < 3; ++a_i) {
                for (int b_i = a_i + 1; b_i < 3; ++b_i) {
                    const int a = fc[a_i], b = fc[b_i];  // a < b
                    const int e = edge_index(a, b);
                    const int a2 = g->perm[a], b2 = g->perm[b];
                    const int e2 = edge_index(a2, b2);
                    const int flip = (a2 > b2) ? 1 : 0;
                    dir_uf.unite((i * 6 + e) * 2 + 0, (g->tet * 6 + e2) * 2 + flip);
                    dir_uf.unite((i * 6 + e) * 2 + 1, (g->tet * 6 + e2) * 2 + (1 - flip));
                    edge_uf.unite(i * 6 + e, g->tet * 6 + e2);
                }
            }
        }
    }
    for (int s = 0; s < 6 * n; ++s)
        if (dir_uf.find(s * 2) == dir_uf.find(s * 2 + 1))
            throw std::domain_error("invalid triangulation: edge of tet " +
                                    std::to_string(s / 6) + " identified with itself in reverse");
    sk.edge_of_.assign(6 * n, -1);
    for (auto& slots : classes_of(edge_uf, 6 * n)) {
        EdgeClass ec;
        for (int s : slots) {
            ec.slots.emplace_back(s / 6, s % 6);
            sk.edge_of_[s] = static_cast<int>(sk.edges_.size());
        }
        for (auto [i, e] : ec.slots) {
            const auto [a, b] = kEdgeCorners[e];
            for (int f : edge_faces(a, b))
                if (tri.is_boundary_face(i, f)) ec.boundary = true;
        }
        sk.edges_.push_back(std::move(ec));
    }

    // ---- Vertex classes ------------------------------------------------
    UnionFind vert_uf(4 * n);
    for (int i = 0; i < n; ++i) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(i, f);
            if (!g) continue;
            for (int v : face_corners(f)) vert_uf.unite(i * 4 + v, g->tet * 4 + g->perm[v]);
        }
    }
    sk.vertex_of_.assign(4 * n, -1);
    for (auto& slots : classes_of(vert_uf, 4 * n)) {
        VertexClass vc;
        for (int s : slots) {
            vc.slots.emplace_back(s / 4, s % 4);
            sk.vertex_of_[s] = static_cast<int>(sk.vertices_.size());
        }
        sk.vertices_.push_back(std::move(vc));
    }

    sk.closed_ = tri.is_closed();

    // ---- Vertex links ----------------------------------------------------
    // Link vertices sit at the ends of tetrahedron edges: slot (corner v of
    // tet i, incident edge {v,x}), keyed by (i*4 + v)*3 + rank of x among the
    // three corners != v.
    auto end_key = [](int i, int v, int x) {
        int r = 0;
        for (int u = 0; u < 4; ++u) {
            if (u == v) continue;
            if (u == x) break;
            ++r;
        }
        return (i * 4 + v) * 3 + r;
    };
    UnionFind end_uf(12 * n);
    for (int i = 0; i < n; ++i) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(i, f);
            if (!g) continue;
            for (int v : face_corners(f))
                for (int x : face_corners(f))
                    if (x != v)
                        end_uf.unite(end_key(i, v, x), end_key(g->tet, g->perm[v], g->perm[x]));
        }
    }

    for (auto& vc : sk.vertices_) {
        LinkSurface link;
        link.triangles = vc.slots;
        std::map<Slot, int> local;
        for (int t = 0; t < static_cast<int>(link.triangles.size()); ++t)
            local[link.triangles[t]] = t;

        UnionFind tri_uf(static_cast<int>(link.triangles.size()));
        for (const auto& [i, v] : link.triangles) {
            for (int f = 0; f < 4; ++f) {
                if (f == v) continue;
                const auto& g = tri.gluing(i, f);
                if (!g) {
                    ++link.boundary_edges;
                    continue;
                }
                const Slot other{g->tet, g->perm[v]};
                const Slot here{i, v};
                // Record each internal link edge once, from its lex-least
                // (slot, face) side.
                if (std::pair(here, f) <= std::pair(other, g->perm[f])) {
                    link.adjacencies.push_back({{local[here], f}, {local[other], g->perm[f]}});
                    tri_uf.unite(local[here], local[other]);
                }
            }
        }
        const int F = static_cast<int>(link.triangles.size());
        const int E = static_cast<int>(link.adjacencies.size()) + link.boundary_edges;
        std::map<int, int> verts;  // link-vertex representative -> count
        for (const auto& [i, v] : link.triangles)
            for (int x = 0; x < 4; ++x)
                if (x != v) verts.emplace(end_uf.find(end_key(i, v, x)), 0);
        const int V = static_cast<int>(verts.size());
        link.euler = V - E + F;
        link.connected = true;
        for (int t = 0; t < F; ++t)
            if (tri_uf.find(t) != tri_uf.find(0)) link.connected = false;

        if (!link.is_sphere() && !link.is_disc())
            throw std::domain_error(
                "invalid triangulation: a vertex link is not a sphere or a disc "
                "(chi = " + std::to_string(link.euler) + ")");
        vc.boundary = link.is_disc();
        sk.links_.push_back(std::move(link));
    }
    return sk;
}

std::vector<EdgeVisit> walk_edge_cycle(const Skeleton& sk, int edge_class) {
    const EdgeClass& ec = sk.edges().at(edge_class);
    if (ec.boundary)
        throw std::domain_error("walk_edge_cycle: edge class touches the boundary");
    const Triangulation& tri = sk.tri();

    const auto [i0, e0] = ec.slots[0];
    const auto [a0, b0] = kEdgeCorners[e0];
    const auto f0 = edge_faces(a0, b0);

    std::vector<EdgeVisit> visits;
    int tet = i0, lower = b0, upper = a0;
    int entry = f0[1], exit = f0[0];  // first exit through the lower-indexed face
    const std::size_t guard = ec.slots.size();
    while (true) {
        visits.push_back({tet, lower, upper, entry, exit});
        const auto& g = tri.gluing(tet, exit);
        const Perm4& p = g->perm;
        const int nl = p[lower], nu = p[upper];
        const int nentry = p[exit];
        const auto nf = edge_faces(nl, nu);
        const int nexit = (nf[0] == nentry) ? nf[1] : nf[0];
        tet = g->tet;
        lower = nl;
        upper = nu;
        entry = nentry;
        exit = nexit;
        if (tet == i0 && edge_index(lower, upper) == e0 && exit == f0[0]) break;
        if (visits.size() > guard)
            throw std::domain_error("walk_edge_cycle: cycle does not close over the class");
    }
    if (visits.size() != ec.slots.size())
        throw std::domain_error("walk_edge_cycle: cycle misses slots of the class");
    return visits;
}

LinkSurface vertex_link(const Triangulation& tri, int vertex_class) {
    Skeleton sk = build_skeleton(tri);
    if (vertex_class < 0 || vertex_class >= sk.vertex_class_count())
        throw std::out_of_range("vertex class index out of range");
    return sk.link(vertex_class);
}

bool is_orientable(const Triangulation& tri) {
    const int n = tri.size();
    std::vector<int> colour(n, 0);
    for (int start = 0; start < n; ++start) {
        if (colour[start] != 0) continue;
        colour[start] = 1;
        std::vector<int> queue{start};
        while (!queue.empty()) {
            const int i = queue.back();
            queue.pop_back();
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri.gluing(i, f);
                if (!g) continue;
                // An odd gluing permutation glues compatibly oriented
                // tetrahedra; an even one forces opposite orientations.
                const int want = (g->perm.sign() < 0) ? colour[i] : -colour[i];
                if (colour[g->tet] == 0) {
                    colour[g->tet] = want;
                    queue.push_back(g->tet);
                } else if (colour[g->tet] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace nsurf
