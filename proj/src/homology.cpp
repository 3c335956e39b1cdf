#include "nsurf/homology.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace nsurf {

std::string AbelianGroup::str() const {
    if (trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    auto sep = [&]() { out << (first ? "" : " + "); first = false; };
    if (rank == 1) {
        sep();
        out << "Z";
    } else if (rank > 1) {
        sep();
        out << "Z^" << rank;
    }
    for (const Int& d : torsion) {
        sep();
        out << "Z/" << d;
    }
    return out.str();
}

std::vector<Int> smith_invariant_factors(std::vector<IntVec> m) {
    using boost::multiprecision::abs;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<Int> diag;

    int t = 0;
    while (true) {
        // Find a pivot: non-zero entry of minimal absolute value in the
        // untouched submatrix.
        int pr = -1, pc = -1;
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c)
                if (m[r][c] != 0 && (pr < 0 || abs(m[r][c]) < abs(m[pr][pc]))) {
                    pr = r;
                    pc = c;
                }
        if (pr < 0) break;
        std::swap(m[t], m[pr]);
        for (int r = 0; r < rows; ++r) std::swap(m[r][t], m[r][pc]);

        // Reduce row t and column t against the pivot; repeat until clean
        // (the pivot shrinks every round, so this terminates).
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int r = t + 1; r < rows; ++r) {
                if (m[r][t] == 0) continue;
                const Int q = m[r][t] / m[t][t];
                for (int c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
                if (m[r][t] != 0) {
                    std::swap(m[t], m[r]);  // remainder is smaller; make it the pivot
                    dirty = true;
                }
            }
            for (int c = t + 1; c < cols; ++c) {
                if (m[t][c] == 0) continue;
                const Int q = m[t][c] / m[t][t];
                for (int r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
                if (m[t][c] != 0) {
                    for (int r = t; r < rows; ++r) std::swap(m[r][t], m[r][c]);
                    dirty = true;
                }
            }
        }
        diag.push_back(abs(m[t][t]));
        ++t;
        if (t >= rows || t >= cols) {
            // Any leftover non-zero entries sit in a zero-width submatrix.
            break;
        }
    }

    // Enforce the divisibility chain d1 | d2 | ... .
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j)
            if (diag[j] % diag[i] != 0) {
                const Int g = boost::multiprecision::gcd(diag[i], diag[j]);
                diag[j] = diag[i] / g * diag[j];
                diag[i] = g;
            }
    std::sort(diag.begin(), diag.end());
    return diag;
}

AbelianGroup first_homology(const Triangulation& tri) {
    if (!tri.is_closed())
        throw std::domain_error("first_homology requires a closed triangulation");
    const Skeleton sk = build_skeleton(tri);
    const int n = tri.size();

    // Spanning forest of the dual graph: nodes = tetrahedra, arcs = internal
    // face classes.  Face classes off the forest generate pi_1's abelianized
    // presentation; edge classes give the relations.
    std::vector<bool> in_tree(sk.face_class_count(), false);
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        seen[start] = true;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop_front();
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri.gluing(i, f);
                if (!g || seen[g->tet]) continue;
                seen[g->tet] = true;
                in_tree[sk.face_class_of(i, f)] = true;
                queue.push_back(g->tet);
            }
        }
    }

    std::vector<int> gen_index(sk.face_class_count(), -1);
    int gens = 0;
    for (int fc = 0; fc < sk.face_class_count(); ++fc)
        if (!in_tree[fc]) gen_index[fc] = gens++;

    // One relation per edge class: walking once around the edge, each face
    // crossing contributes +1 or -1 to its face class's generator, signed by
    // whether we cross the class's primary slot forwards.
    std::vector<IntVec> relations;
    for (int e = 0; e < sk.edge_class_count(); ++e) {
        IntVec row(gens, 0);
        for (const EdgeVisit& visit : walk_edge_cycle(sk, e)) {
            const int fc = sk.face_class_of(visit.tet, visit.exit);
            if (gen_index[fc] < 0) continue;
            const Slot primary = sk.faces()[fc].slots[0];
            const int sign = (primary == Slot{visit.tet, visit.exit}) ? 1 : -1;
            row[gen_index[fc]] += sign;
        }
        relations.push_back(std::move(row));
    }

    const std::vector<Int> factors = smith_invariant_factors(std::move(relations));
    AbelianGroup h1;
    h1.rank = gens - static_cast<int>(factors.size());
    for (const Int& d : factors)
        if (d > 1) h1.torsion.push_back(d);
    return h1;
}

}  // namespace nsurf
