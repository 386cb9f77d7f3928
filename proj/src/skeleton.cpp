#include "normalsurf/skeleton.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "normalsurf/error.hpp"
#include "union_find.hpp"

namespace normalsurf {

std::pair<std::size_t, int> Skeleton::oriented_edge(std::size_t tet, int a, int b) const {
    const int e = edge_index(a, b);
    const int dir = a < b ? 1 : -1;
    return {edge_of(tet, e), dir * edge_sign(tet, e)};
}

bool Skeleton::has_ideal_vertex() const {
    return std::any_of(vertices.begin(), vertices.end(), [](const VertexClass& v) { return v.kind == VertexKind::Ideal; });
}

Skeleton compute_skeleton(const Triangulation& tri) {
    require_valid(tri);
    const std::size_t t = tri.size();
    Skeleton sk;
    const auto unset = static_cast<std::size_t>(-1);
    sk.edgeOf_.assign(6 * t, unset);
    sk.edgeSign_.assign(6 * t, 0);
    sk.vertexOf_.assign(4 * t, unset);
    sk.faceOf_.assign(4 * t, unset);

    // Vertices: union corners across every face gluing.
    detail::UnionFind corners(4 * t);
    for (std::size_t tet = 0; tet < t; ++tet)
        for (int d = 0; d < 4; ++d)
            if (const auto& g = tri.target(tet, d))
                for (int v : face_vertices(d)) corners.unite(4 * tet + static_cast<std::size_t>(v), 4 * g->tet + static_cast<std::size_t>(g->perm[v]));
    std::size_t vertexCount = 0;
    const auto vlabel = corners.labels(&vertexCount);
    sk.vertices.resize(vertexCount);
    for (std::size_t i = 0; i < 4 * t; ++i) {
        sk.vertexOf_[i] = vlabel[i];
        sk.vertices[vlabel[i]].members.push_back({i / 4, static_cast<int>(i % 4)});
    }

    // Edges: oriented breadth-first orbit from the least unvisited member.
    for (std::size_t tet = 0; tet < t; ++tet) {
        for (int e = 0; e < 6; ++e) {
            if (sk.edgeOf_[6 * tet + static_cast<std::size_t>(e)] != unset) continue;
            const std::size_t cls = sk.edges.size();
            EdgeClass ec;
            std::deque<std::pair<std::size_t, int>> queue{{tet, e}};
            sk.edgeOf_[6 * tet + static_cast<std::size_t>(e)] = cls;
            sk.edgeSign_[6 * tet + static_cast<std::size_t>(e)] = 1;
            while (!queue.empty()) {
                const auto [mt, me] = queue.front();
                queue.pop_front();
                const int sign = sk.edgeSign_[6 * mt + static_cast<std::size_t>(me)];
                ec.members.push_back({mt, me, sign});
                auto [lo, hi] = edge_vertices(me);
                const int from = sign > 0 ? lo : hi;
                const int to = sign > 0 ? hi : lo;
                for (int d = 0; d < 4; ++d) {
                    if (d == lo || d == hi) continue;
                    const auto& g = tri.target(mt, d);
                    if (!g) {
                        ec.boundary = true;
                        continue;
                    }
                    const int a = g->perm[from];
                    const int b = g->perm[to];
                    const std::size_t slot = 6 * g->tet + static_cast<std::size_t>(edge_index(a, b));
                    if (sk.edgeOf_[slot] != unset) continue;
                    sk.edgeOf_[slot] = cls;
                    sk.edgeSign_[slot] = a < b ? 1 : -1;
                    queue.push_back({g->tet, edge_index(a, b)});
                }
            }
            std::sort(ec.members.begin(), ec.members.end(), [](const EdgeMember& x, const EdgeMember& y) {
                return x.tet != y.tet ? x.tet < y.tet : x.edge < y.edge;
            });
            auto [lo, hi] = edge_vertices(e);
            ec.start = sk.vertexOf_[4 * tet + static_cast<std::size_t>(lo)];
            ec.end = sk.vertexOf_[4 * tet + static_cast<std::size_t>(hi)];
            sk.edges.push_back(std::move(ec));
        }
    }

    // Faces.
    for (std::size_t tet = 0; tet < t; ++tet) {
        for (int d = 0; d < 4; ++d) {
            if (sk.faceOf_[4 * tet + static_cast<std::size_t>(d)] != unset) continue;
            const std::size_t cls = sk.faces.size();
            FaceClass fc;
            fc.members.push_back({tet, d});
            sk.faceOf_[4 * tet + static_cast<std::size_t>(d)] = cls;
            if (const auto& g = tri.target(tet, d)) {
                fc.members.push_back({g->tet, g->perm[d]});
                sk.faceOf_[4 * g->tet + static_cast<std::size_t>(g->perm[d])] = cls;
            }
            sk.faces.push_back(std::move(fc));
        }
    }

    // Vertex links: triangles are corners, edges are (corner, incident face)
    // slots paired across gluings, vertices are edge ends.
    detail::UnionFind slots(12 * t);
    std::vector<bool> openSlot(12 * t, false);
    auto slotIndex = [](std::size_t tet, int v, int w) { return 12 * tet + 3 * static_cast<std::size_t>(v) + static_cast<std::size_t>(w < v ? w : w - 1); };
    for (std::size_t tet = 0; tet < t; ++tet)
        for (int v = 0; v < 4; ++v)
            for (int w = 0; w < 4; ++w) {
                if (w == v) continue;
                if (const auto& g = tri.target(tet, w))
                    slots.unite(slotIndex(tet, v, w), slotIndex(g->tet, g->perm[v], g->perm[w]));
                else
                    openSlot[slotIndex(tet, v, w)] = true;
            }
    std::vector<std::set<std::size_t>> linkEdges(vertexCount);
    std::vector<std::set<std::pair<std::size_t, int>>> linkVertices(vertexCount);
    for (std::size_t tet = 0; tet < t; ++tet)
        for (int v = 0; v < 4; ++v) {
            const std::size_t vc = sk.vertexOf_[4 * tet + static_cast<std::size_t>(v)];
            for (int w = 0; w < 4; ++w) {
                if (w == v) continue;
                const std::size_t s = slotIndex(tet, v, w);
                linkEdges[vc].insert(slots.find(s));
                if (openSlot[s]) sk.vertices[vc].boundary = true;
                const int e = edge_index(v, w);
                const int sign = sk.edge_sign(tet, e);
                const bool isStart = (v < w) == (sign > 0);
                linkVertices[vc].insert({sk.edge_of(tet, e), isStart ? 0 : 1});
            }
        }
    for (std::size_t vc = 0; vc < vertexCount; ++vc) {
        auto& cls = sk.vertices[vc];
        cls.linkEuler = static_cast<long>(linkVertices[vc].size()) - static_cast<long>(linkEdges[vc].size()) +
                        static_cast<long>(cls.members.size());
        if (cls.boundary)
            cls.kind = cls.linkEuler == 1 ? VertexKind::Material : VertexKind::Singular;
        else
            cls.kind = cls.linkEuler == 2 ? VertexKind::Material : VertexKind::Ideal;
    }
    return sk;
}

}  // namespace normalsurf
