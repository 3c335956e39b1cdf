#include "nsurf/enum_dd.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace nsurf {

namespace {

std::vector<std::uint64_t> zero_mask_of(const IntVec& v) {
    std::vector<std::uint64_t> m((v.size() + 63) / 64, 0);
    for (std::size_t c = 0; c < v.size(); ++c)
        if (v[c] == 0) m[c / 64] |= std::uint64_t(1) << (c % 64);
    return m;
}

/// a subset of b (as bit sets).
bool mask_subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

bool violates_groups(const IntVec& v, const std::vector<std::vector<int>>& groups) {
    for (const auto& g : groups) {
        int nz = 0;
        for (int c : g)
            if (v[c] != 0 && ++nz > 1) return true;
    }
    return false;
}

/// Union-support group check for a candidate pair (the combination of two
/// non-negative rays is supported exactly on the union of supports).
bool union_violates_groups(const IntVec& u, const IntVec& v,
                           const std::vector<std::vector<int>>& groups) {
    for (const auto& g : groups) {
        int nz = 0;
        for (int c : g)
            if ((u[c] != 0 || v[c] != 0) && ++nz > 1) return true;
    }
    return false;
}

void sort_dedupe(std::vector<Ray>& rays) {
    std::sort(rays.begin(), rays.end(),
              [](const Ray& a, const Ray& b) { return lex_less(a.entries, b.entries); });
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
}

/// The double description core over the non-negative orthant, filtering on
/// the given groups after every stage.
RaySet run_dd(const EquationSystem& eqs, const std::vector<std::vector<int>>& filter_groups) {
    using clock = std::chrono::steady_clock;
    const int dim = eqs.dim;

    RaySet out;
    out.system = eqs.system;
    out.dim = dim;

    std::vector<Ray> cur;
    cur.reserve(dim);
    for (int c = 0; c < dim; ++c) {
        IntVec u(dim, Int(0));
        u[c] = 1;
        cur.push_back(Ray::make(std::move(u)));
    }

    for (int stage = 0; stage < static_cast<int>(eqs.rows.size()); ++stage) {
        const auto t0 = clock::now();
        DDStageStats st;
        st.stage = stage;
        st.rays_in = static_cast<long long>(cur.size());

        // Partition by the sign of the hyperplane evaluation.
        std::vector<Int> dot(cur.size());
        std::vector<int> pos, neg;
        std::vector<Ray> next;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            dot[i] = eqs.eval_row(stage, cur[i].entries);
            if (dot[i] > 0)
                pos.push_back(static_cast<int>(i));
            else if (dot[i] < 0)
                neg.push_back(static_cast<int>(i));
            else
                next.push_back(cur[i]);
        }

        for (int iu : pos) {
            for (int iv : neg) {
                ++st.pairs_tested;
                const Ray& u = cur[iu];
                const Ray& v = cur[iv];
                // The child is supported on supp(u) ∪ supp(v); drop it now
                // if that union already violates a group (it would be
                // stripped below anyway).
                if (union_violates_groups(u.entries, v.entries, filter_groups)) continue;
                // Combinatorial adjacency: no third ray's zero set may
                // contain zero(u) ∩ zero(v).
                std::vector<std::uint64_t> inter(u.zero_mask.size());
                for (std::size_t w = 0; w < inter.size(); ++w)
                    inter[w] = u.zero_mask[w] & v.zero_mask[w];
                bool adjacent = true;
                for (std::size_t k = 0; k < cur.size(); ++k) {
                    if (static_cast<int>(k) == iu || static_cast<int>(k) == iv) continue;
                    if (mask_subset(inter, cur[k].zero_mask)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                // Minimal integer combination on the hyperplane:
                // (h.u) v - (h.v) u, a positive combination since h.v < 0.
                IntVec w(dim);
                for (int c = 0; c < dim; ++c)
                    w[c] = dot[iu] * v.entries[c] - dot[iv] * u.entries[c];
                next.push_back(Ray::make(std::move(w)));
            }
        }

        std::erase_if(next, [&](const Ray& r) { return violates_groups(r.entries, filter_groups); });
        sort_dedupe(next);
        cur = std::move(next);

        st.rays_kept = static_cast<long long>(cur.size());
        st.millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
        out.stats.push_back(st);
    }

    sort_dedupe(cur);
    out.rays = std::move(cur);
    return out;
}

void validate_equation_system(const EquationSystem& eqs) {
    if (eqs.dim != dimension(eqs.system, eqs.tri.size()))
        throw std::invalid_argument("enumerate_vertex_rays: dimension mismatch between matrix and triangulation");
    for (const IntVec& row : eqs.rows)
        if (static_cast<int>(row.size()) != eqs.dim)
            throw std::invalid_argument("enumerate_vertex_rays: row dimension mismatch");
    for (const auto& g : eqs.constraint_groups)
        for (int c : g)
            if (c < 0 || c >= eqs.dim)
                throw std::invalid_argument("enumerate_vertex_rays: constraint metadata out of range");
}

}  // namespace

Ray Ray::make(IntVec v) {
    make_primitive(v);
    Ray r;
    r.entries = std::move(v);
    r.zero_mask = zero_mask_of(r.entries);
    return r;
}

RaySet enumerate_vertex_rays(const EquationSystem& eqs) {
    validate_equation_system(eqs);

    if (eqs.system == CoordSystem::JOINT) {
        // Enumerate in quad-octagon space filtered on the per-tetrahedron
        // groups only (exactly the pullbacks of the JOINT groups under
        // j = q - k; JOINT has no global octagon condition), then map to
        // joint form.
        const EquationSystem qo = matching_matrix(eqs.tri, CoordSystem::QUAD_OCT);
        RaySet inner = run_dd(qo, qo.constraint_groups);
        RaySet out;
        out.system = CoordSystem::JOINT;
        out.dim = eqs.dim;
        out.stats = std::move(inner.stats);
        const int n = eqs.tri.size();
        for (const Ray& r : inner.rays) {
            IntVec j(eqs.dim);
            for (int i = 0; i < n; ++i)
                for (int m = 1; m <= 3; ++m)
                    j[col_j(i, m)] = r.entries[col_q(CoordSystem::QUAD_OCT, i, m)] -
                                     r.entries[col_k(CoordSystem::QUAD_OCT, i, m)];
            out.rays.push_back(Ray::make(std::move(j)));
        }
        sort_dedupe(out.rays);
        return out;
    }

    // Filter on the per-tetrahedron groups only; the global octagon
    // condition is forgotten during the run and applied afterwards by
    // apply_star_filter.
    return run_dd(eqs, eqs.constraint_groups);
}

namespace {

struct Int64VecHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int64_t x : v) {
            h ^= static_cast<std::uint64_t>(x);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// All per-tetrahedron blocks compatible with the local constraint group,
/// entries in the system's range, as flat int vectors of block size.
std::vector<std::vector<int>> block_candidates(CoordSystem system, int bound) {
    std::vector<std::vector<int>> res;
    auto group_part = [&](int gsize, int lo) {
        // Vectors of length gsize with at most one non-zero entry, the
        // non-zero value in [lo, bound] excluding 0.
        std::vector<std::vector<int>> parts;
        parts.emplace_back(gsize, 0);
        for (int p = 0; p < gsize; ++p)
            for (int v = lo; v <= bound; ++v) {
                if (v == 0) continue;
                std::vector<int> g(gsize, 0);
                g[p] = v;
                parts.push_back(std::move(g));
            }
        return parts;
    };
    auto with_triangles = [&](const std::vector<std::vector<int>>& tails) {
        std::vector<int> t(4, 0);
        while (true) {
            for (const auto& tail : tails) {
                std::vector<int> block = t;
                block.insert(block.end(), tail.begin(), tail.end());
                res.push_back(std::move(block));
            }
            int c = 3;
            while (c >= 0 && t[c] == bound) t[c--] = 0;
            if (c < 0) break;
            ++t[c];
        }
    };
    switch (system) {
        case CoordSystem::STD: with_triangles(group_part(3, 1)); break;
        case CoordSystem::AN_STD: with_triangles(group_part(6, 1)); break;
        case CoordSystem::QUAD: res = group_part(3, 1); break;
        case CoordSystem::QUAD_OCT: res = group_part(6, 1); break;
        case CoordSystem::JOINT: res = group_part(3, -1); break;
    }
    return res;
}

struct SideVector {
    std::vector<int> vals;               // concatenated block values
    std::vector<std::int64_t> row_sums;  // per matching-equation partial sum
};

/// Cartesian product of the blocks of tets [lo, hi), with per-row partial
/// sums.  An empty range yields the single empty side.
std::vector<SideVector> enumerate_side(const EquationSystem& eqs,
                                       const std::vector<std::vector<int>>& blocks, int lo,
                                       int hi) {
    const int B = block_size(eqs.system);
    const int nrows = static_cast<int>(eqs.rows.size());
    // Per-block, per-candidate row sums.
    std::vector<SideVector> sides;
    sides.push_back({{}, std::vector<std::int64_t>(nrows, 0)});
    for (int i = lo; i < hi; ++i) {
        // Row coefficients restricted to tet i's columns, as int64.
        std::vector<std::vector<std::int64_t>> coef(nrows, std::vector<std::int64_t>(B));
        for (int r = 0; r < nrows; ++r)
            for (int c = 0; c < B; ++c)
                coef[r][c] = to_int64(eqs.rows[r][i * B + c]);
        std::vector<SideVector> grown;
        grown.reserve(sides.size() * blocks.size());
        for (const SideVector& s : sides) {
            for (const auto& block : blocks) {
                SideVector t;
                t.vals = s.vals;
                t.vals.insert(t.vals.end(), block.begin(), block.end());
                t.row_sums = s.row_sums;
                for (int r = 0; r < nrows; ++r) {
                    std::int64_t add = 0;
                    for (int c = 0; c < B; ++c)
                        if (coef[r][c] != 0) add += coef[r][c] * block[c];
                    t.row_sums[r] += add;
                }
                grown.push_back(std::move(t));
            }
        }
        sides = std::move(grown);
        if (sides.size() > 20'000'000)
            throw std::domain_error("brute_force_admissible: guard exceeded (side enumeration too large)");
    }
    return sides;
}

}  // namespace

std::vector<IntVec> brute_force_admissible(const EquationSystem& eqs, int bound) {
    if (bound < 0) throw std::invalid_argument("brute_force_admissible: bound must be non-negative");
    validate_equation_system(eqs);
    const int n = eqs.tri.size();

    const std::vector<std::vector<int>> blocks = block_candidates(eqs.system, bound);

    // Guard on the pruned iteration space under the meet-in-the-middle
    // split: each side is enumerated explicitly.
    const int mid = n / 2;
    double left_size = 1, right_size = 1;
    for (int i = 0; i < mid; ++i) left_size *= static_cast<double>(blocks.size());
    for (int i = mid; i < n; ++i) right_size *= static_cast<double>(blocks.size());
    if (left_size > 2e7 || right_size > 2e7)
        throw std::domain_error("brute_force_admissible: guard exceeded (instance too large)");

    const std::vector<SideVector> left = enumerate_side(eqs, blocks, 0, mid);
    const std::vector<SideVector> right = enumerate_side(eqs, blocks, mid, n);

    std::unordered_map<std::vector<std::int64_t>, std::vector<int>, Int64VecHash> by_sums;
    by_sums.reserve(left.size() * 2);
    for (int i = 0; i < static_cast<int>(left.size()); ++i)
        by_sums[left[i].row_sums].push_back(i);

    const int nrows = static_cast<int>(eqs.rows.size());
    std::vector<IntVec> out;
    for (const SideVector& r : right) {
        std::vector<std::int64_t> want(nrows);
        for (int k = 0; k < nrows; ++k) want[k] = -r.row_sums[k];
        auto it = by_sums.find(want);
        if (it == by_sums.end()) continue;
        for (int li : it->second) {
            const SideVector& l = left[li];
            IntVec v;
            v.reserve(eqs.dim);
            for (int x : l.vals) v.push_back(x);
            for (int x : r.vals) v.push_back(x);
            out.push_back(std::move(v));
            if (out.size() > 5'000'000)
                throw std::domain_error("brute_force_admissible: guard exceeded (too many solutions)");
        }
    }
    std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
    return out;
}

StarPartition apply_star_filter(const RaySet& rays) {
    if (rays.system != CoordSystem::AN_STD && rays.system != CoordSystem::QUAD_OCT)
        throw std::invalid_argument("apply_star_filter: requires an AN_STD or QUAD_OCT ray set");
    const int B = block_size(rays.system);
    const int n = rays.dim / B;
    std::vector<std::vector<int>> groups;
    std::vector<int> oct_cols;
    constraint_sets(n, rays.system, groups, oct_cols);

    StarPartition part;
    for (const Ray& r : rays.rays) {
        int positions = 0;
        Int value = 0;
        for (int c : oct_cols) {
            if (r.entries[c] != 0) {
                ++positions;
                value = r.entries[c];
            }
        }
        if (positions == 0)
            part.normal.push_back(r);
        else if (positions == 1 && value == 1)
            part.almost_normal.push_back(r);
        else
            part.rejected.push_back(r);
    }
    return part;
}

}  // namespace nsurf
