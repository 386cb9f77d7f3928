#include "normalsurf/matching.hpp"

#include <algorithm>

#include "normalsurf/error.hpp"
#include "normalsurf/skeleton.hpp"

namespace normalsurf {

int quad_type(int a, int b) {
    if (a == b || a < 0 || b < 0 || a > 3 || b > 3) throw PreconditionError("quad_type needs two distinct vertices");
    // The pair containing 0 names the type; otherwise use the complementary pair.
    if (a != 0 && b != 0) {
        const int rest = 6 - a - b;  // sum of the complementary pair {0, m}
        return rest - 1;
    }
    return (a == 0 ? b : a) - 1;
}

int quad_partner_of_zero(int q) { return q + 1; }

int NormalVector::quad_kind(std::size_t tet) const {
    for (int q = 0; q < 3; ++q)
        if (quad(tet, q) != 0) return q;
    return -1;
}

bool NormalVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](Coord c) { return c == 0; });
}

bool MatchingSystem::admissible(const CoordVector& v) const {
    for (const auto& triple : quadTriples) {
        int nonzero = 0;
        for (std::size_t idx : triple)
            if (v[idx] != 0) ++nonzero;
        if (nonzero > 1) return false;
    }
    return true;
}

MatchingSystem build_matching_system(const Triangulation& tri) {
    const Skeleton sk = compute_skeleton(tri);
    MatchingSystem sys;
    sys.variableCount = kBlock * tri.size();
    for (std::size_t tet = 0; tet < tri.size(); ++tet)
        sys.quadTriples.push_back({quad_var(tet, 0), quad_var(tet, 1), quad_var(tet, 2)});
    for (const auto& face : sk.faces) {
        if (face.boundary()) continue;
        const auto [tetA, dA] = face.members[0];
        const auto& g = *tri.target(tetA, dA);
        const int dB = g.perm[dA];
        for (int x : face_vertices(dA)) {
            const int y = g.perm[x];
            sys.equations.push_back({triangle_var(tetA, x), quad_var(tetA, x, dA), triangle_var(g.tet, y), quad_var(g.tet, y, dB)});
        }
    }
    return sys;
}

bool is_solution(const MatchingSystem& sys, const CoordVector& v) {
    if (v.size() != sys.variableCount)
        throw PreconditionError("vector has " + std::to_string(v.size()) + " entries, system has " +
                                std::to_string(sys.variableCount) + " variables");
    if (std::any_of(v.begin(), v.end(), [](Coord c) { return c < 0; })) return false;
    for (std::size_t z : sys.forcedZeros)
        if (v[z] != 0) return false;
    return std::all_of(sys.equations.begin(), sys.equations.end(),
                       [&](const Equation& e) { return v[e.i] + v[e.j] == v[e.k] + v[e.l]; });
}

bool is_admissible(const NormalVector& v) {
    for (std::size_t tet = 0; tet < v.tetrahedra(); ++tet) {
        int nonzero = 0;
        for (int q = 0; q < 3; ++q)
            if (v.quad(tet, q) != 0) ++nonzero;
        if (nonzero > 1) return false;
    }
    return true;
}

std::array<std::size_t, 4> disks_crossing_edge(std::size_t tet, int a, int b) {
    int c = -1, d = -1;
    for (int x = 0; x < 4; ++x) {
        if (x == a || x == b) continue;
        (c < 0 ? c : d) = x;
    }
    return {triangle_var(tet, a), triangle_var(tet, b), quad_var(tet, a, c), quad_var(tet, a, d)};
}

MatchingSystem restrict_to_link(const MatchingSystem& sys, const Triangulation& tri, const LinkSpec& link) {
    const Skeleton sk = compute_skeleton(tri);
    const auto resolved = resolve_link(tri, sk, link);
    if (sys.variableCount != kBlock * tri.size()) throw PreconditionError("system does not belong to this triangulation");
    MatchingSystem out = sys;
    for (const auto& comp : resolved) {
        for (std::size_t cls : comp.edgeClasses) {
            for (const auto& m : sk.edges[cls].members) {
                const auto [a, b] = edge_vertices(m.edge);
                for (std::size_t var : disks_crossing_edge(m.tet, a, b)) out.forcedZeros.insert(var);
            }
        }
    }
    return out;
}

NormalVector haken_sum(const NormalVector& a, const NormalVector& b) {
    if (a.coords.size() != b.coords.size()) throw PreconditionError("haken_sum: length mismatch");
    for (std::size_t tet = 0; tet < a.tetrahedra(); ++tet) {
        const int qa = a.quad_kind(tet);
        const int qb = b.quad_kind(tet);
        if (qa >= 0 && qb >= 0 && qa != qb)
            throw PreconditionError("haken_sum: different quadrilateral types in tetrahedron " + std::to_string(tet) +
                                    "; there can only be one type of normal quadrilateral in each tetrahedron");
    }
    NormalVector out(a.coords);
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

NormalVector all_triangles(std::size_t tetrahedra) {
    NormalVector v = NormalVector::zero(tetrahedra);
    for (std::size_t tet = 0; tet < tetrahedra; ++tet)
        for (int x = 0; x < 4; ++x) v.coords[triangle_var(tet, x)] = 1;
    return v;
}

}  // namespace normalsurf
