#include "normalsurf/surface.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "normalsurf/error.hpp"
#include "union_find.hpp"

namespace normalsurf {

namespace {

/// Disk and region numbering inside one tetrahedron.
///
/// Regions: a layer L(v,i), i < t_v, at each vertex (L(v,0) holds the corner),
/// then a central run indexed 0..q: with no quads a single central region,
/// otherwise side 0 (the pair containing vertex 0), q-1 slabs, side q.
struct TetLayout {
    std::array<Coord, 4> t{};
    int quadType = -1;
    Coord q = 0;
    std::size_t diskBase = 0;
    std::size_t regionBase = 0;
    std::array<std::size_t, 4> layerBase{};
    std::size_t centralBase = 0;

    bool in_pair0(int u) const { return u == 0 || u == quad_partner_of_zero(quadType); }
    Coord quads_between(int a, int b) const { return quadType >= 0 && quadType == quad_type(a, b) ? q : 0; }

    std::size_t triangle_disk(int v, Coord i) const {
        std::size_t off = 0;
        for (int u = 0; u < v; ++u) off += static_cast<std::size_t>(t[static_cast<std::size_t>(u)]);
        return diskBase + off + static_cast<std::size_t>(i - 1);
    }
    std::size_t quad_disk(Coord j) const {
        return diskBase + static_cast<std::size_t>(t[0] + t[1] + t[2] + t[3]) + static_cast<std::size_t>(j - 1);
    }

    /// Disk whose arc of type x sits at depth k (1-based) on the face opposite d.
    std::size_t arc_disk(int x, Coord k) const {
        const Coord tx = t[static_cast<std::size_t>(x)];
        if (k <= tx) return triangle_disk(x, k);
        const Coord kk = k - tx;
        return quad_disk(in_pair0(x) ? kk : q + 1 - kk);
    }

    std::size_t layer(int v, Coord i) const { return layerBase[static_cast<std::size_t>(v)] + static_cast<std::size_t>(i); }
    std::size_t central(Coord k) const { return centralBase + static_cast<std::size_t>(k); }
    /// Central-run region that contains vertex u when t_u = 0.
    std::size_t side_of(int u) const { return central(q == 0 || in_pair0(u) ? 0 : q); }

    /// Region beyond the outermost triangle at v.
    std::size_t past_triangles(int v) const { return side_of(v); }

    /// Tetrahedron region bordering the face region of type x at layer i (i < arc count).
    std::size_t face_layer(int x, Coord i) const {
        const Coord tx = t[static_cast<std::size_t>(x)];
        if (i < tx) return layer(x, i);
        const Coord k = i - tx;
        return central(in_pair0(x) ? k : q - k);
    }
    /// Tetrahedron region bordering the central region of the face opposite d.
    std::size_t face_central(int d) const { return central(q == 0 || !in_pair0(d) ? 0 : q); }
};

struct Layout {
    std::vector<TetLayout> tets;
    std::size_t disks = 0;
    std::size_t regions = 0;
};

Layout make_layout(const NormalVector& v) {
    Layout out;
    out.tets.resize(v.tetrahedra());
    for (std::size_t tet = 0; tet < out.tets.size(); ++tet) {
        auto& L = out.tets[tet];
        for (int u = 0; u < 4; ++u) L.t[static_cast<std::size_t>(u)] = v.triangle(tet, u);
        L.quadType = v.quad_kind(tet);
        L.q = L.quadType >= 0 ? v.quad(tet, L.quadType) : 0;
        L.diskBase = out.disks;
        out.disks += static_cast<std::size_t>(L.t[0] + L.t[1] + L.t[2] + L.t[3] + L.q);
        L.regionBase = out.regions;
        std::size_t r = out.regions;
        for (int u = 0; u < 4; ++u) {
            L.layerBase[static_cast<std::size_t>(u)] = r;
            r += static_cast<std::size_t>(L.t[static_cast<std::size_t>(u)]);
        }
        L.centralBase = r;
        r += static_cast<std::size_t>(L.q) + 1;
        out.regions = r;
    }
    return out;
}

void require_admissible_solution(const Triangulation& tri, const NormalVector& v) {
    if (v.coords.size() != kBlock * tri.size())
        throw PreconditionError("vector has " + std::to_string(v.coords.size()) + " coordinates, expected " +
                                std::to_string(kBlock * tri.size()));
    if (!is_solution(build_matching_system(tri), v)) throw PreconditionError("vector is not a normal surface solution");
    if (!is_admissible(v)) throw PreconditionError("vector is not admissible");
}

/// Arc count of type x on the face of `tet` opposite d.
Coord arc_count(const TetLayout& L, int x, int d) { return L.t[static_cast<std::size_t>(x)] + L.quads_between(x, d); }

std::array<int, 2> others(int x, int d) {
    std::array<int, 2> out{};
    int k = 0;
    for (int u = 0; u < 4; ++u)
        if (u != x && u != d) out[static_cast<std::size_t>(k++)] = u;
    return out;
}

}  // namespace

std::optional<std::vector<Coord>> edge_weights(const Triangulation& tri, const Skeleton& sk, const NormalVector& v) {
    if (v.coords.size() != kBlock * tri.size()) throw PreconditionError("edge_weights: length mismatch");
    std::vector<Coord> out(sk.edges.size(), 0);
    for (std::size_t e = 0; e < sk.edges.size(); ++e) {
        bool first = true;
        for (const auto& m : sk.edges[e].members) {
            const auto [a, b] = edge_vertices(m.edge);
            Coord w = 0;
            for (std::size_t var : disks_crossing_edge(m.tet, a, b)) w += v.coords[var];
            if (first) {
                out[e] = w;
                first = false;
            } else if (w != out[e]) {
                return std::nullopt;
            }
        }
    }
    return out;
}

SurfaceReport analyze(const Triangulation& tri, const NormalVector& v) { return analyze(tri, compute_skeleton(tri), v); }

SurfaceReport analyze(const Triangulation& tri, const Skeleton& sk, const NormalVector& v) {
    require_admissible_solution(tri, v);
    const Layout lay = make_layout(v);
    SurfaceReport rep;
    rep.edgeWeights = *edge_weights(tri, sk, v);
    for (Coord w : rep.edgeWeights) rep.weight += w;
    rep.diskCount = static_cast<Coord>(lay.disks);

    Coord arcs = 0;
    for (const auto& fc : sk.faces) {
        const auto& m = fc.members.front();
        for (int x : face_vertices(m.omitted)) arcs += arc_count(lay.tets[m.tet], x, m.omitted);
    }
    rep.euler = static_cast<long>(rep.weight - arcs + rep.diskCount);

    detail::UnionFind disks(lay.disks);
    for (std::size_t tet = 0; tet < tri.size(); ++tet)
        for (int d = 0; d < 4; ++d) {
            const auto& g = tri.target(tet, d);
            if (!g) continue;
            const int dB = g->perm[d];
            if (g->tet < tet || (g->tet == tet && dB < d)) continue;
            const auto& A = lay.tets[tet];
            const auto& B = lay.tets[g->tet];
            for (int x : face_vertices(d))
                for (Coord k = 1; k <= arc_count(A, x, d); ++k) disks.unite(A.arc_disk(x, k), B.arc_disk(g->perm[x], k));
        }
    disks.labels(&rep.components);

    // Boundary arcs join at points on boundary edges, keyed by (edge class, position along its orientation).
    std::vector<std::size_t> arcBase;
    std::size_t boundaryArcs = 0;
    for (const auto& fc : sk.faces) {
        arcBase.push_back(boundaryArcs);
        if (!fc.boundary()) continue;
        const auto& m = fc.members.front();
        for (int x : face_vertices(m.omitted)) boundaryArcs += static_cast<std::size_t>(arc_count(lay.tets[m.tet], x, m.omitted));
    }
    detail::UnionFind circles(boundaryArcs);
    std::map<std::pair<std::size_t, Coord>, std::size_t> pointOwner;
    for (std::size_t f = 0; f < sk.faces.size(); ++f) {
        const auto& fc = sk.faces[f];
        if (!fc.boundary()) continue;
        const auto& m = fc.members.front();
        const auto& L = lay.tets[m.tet];
        std::size_t arc = arcBase[f];
        for (int x : face_vertices(m.omitted))
            for (Coord k = 1; k <= arc_count(L, x, m.omitted); ++k, ++arc)
                for (int y : others(x, m.omitted)) {
                    const auto [cls, sign] = sk.oriented_edge(m.tet, x, y);
                    const Coord pos = sign > 0 ? k : rep.edgeWeights[cls] + 1 - k;
                    auto [it, inserted] = pointOwner.emplace(std::make_pair(cls, pos), arc);
                    if (!inserted) circles.unite(it->second, arc);
                }
    }
    circles.labels(&rep.boundaryCircles);
    rep.closed = rep.boundaryCircles == 0;
    return rep;
}

RegionGraph complement_regions(const Triangulation& tri, const NormalVector& v) {
    return complement_regions(tri, compute_skeleton(tri), v);
}

RegionGraph complement_regions(const Triangulation& tri, const Skeleton& sk, const NormalVector& v) {
    require_admissible_solution(tri, v);
    const Layout lay = make_layout(v);
    detail::UnionFind regions(lay.regions);
    for (std::size_t tet = 0; tet < tri.size(); ++tet)
        for (int d = 0; d < 4; ++d) {
            const auto& g = tri.target(tet, d);
            if (!g) continue;
            const int dB = g->perm[d];
            if (g->tet < tet || (g->tet == tet && dB < d)) continue;
            const auto& A = lay.tets[tet];
            const auto& B = lay.tets[g->tet];
            for (int x : face_vertices(d))
                for (Coord i = 0; i < arc_count(A, x, d); ++i) regions.unite(A.face_layer(x, i), B.face_layer(g->perm[x], i));
            regions.unite(A.face_central(d), B.face_central(dB));
        }

    RegionGraph out;
    const auto label = regions.labels(&out.regionCount);

    std::set<std::pair<std::size_t, std::size_t>> adj;
    auto link = [&](std::size_t a, std::size_t b) {
        const std::size_t ra = label[a], rb = label[b];
        adj.insert({std::min(ra, rb), std::max(ra, rb)});
    };
    for (const auto& L : lay.tets) {
        for (int u = 0; u < 4; ++u) {
            const Coord tu = L.t[static_cast<std::size_t>(u)];
            for (Coord i = 1; i <= tu; ++i) link(L.layer(u, i - 1), i < tu ? L.layer(u, i) : L.past_triangles(u));
        }
        for (Coord j = 1; j <= L.q; ++j) link(L.central(j - 1), L.central(j));
    }
    out.adjacency.assign(adj.begin(), adj.end());

    auto vertex_region = [&](std::size_t tet, int u) {
        const auto& L = lay.tets[tet];
        return label[L.t[static_cast<std::size_t>(u)] > 0 ? L.layer(u, 0) : L.side_of(u)];
    };
    out.vertexRegion.assign(sk.vertices.size(), 0);
    for (std::size_t c = 0; c < sk.vertices.size(); ++c) {
        const auto& members = sk.vertices[c].members;
        out.vertexRegion[c] = vertex_region(members.front().tet, members.front().vertex);
        for (const auto& m : members)
            if (vertex_region(m.tet, m.vertex) != out.vertexRegion[c])
                throw InternalError("vertex class " + std::to_string(c) + " spans several regions");
    }

    const auto weights = *edge_weights(tri, sk, v);
    out.edgeRegion.assign(sk.edges.size(), std::nullopt);
    for (std::size_t e = 0; e < sk.edges.size(); ++e) {
        if (weights[e] != 0) continue;
        for (const auto& m : sk.edges[e].members) {
            // A zero-weight edge misses every disk, so it lies where its endpoints lie.
            const auto ends = edge_vertices(m.edge);
            const std::size_t r = vertex_region(m.tet, ends[0]);
            if (!out.edgeRegion[e]) out.edgeRegion[e] = r;
            if (r != *out.edgeRegion[e] || vertex_region(m.tet, ends[1]) != r)
                throw InternalError("edge class " + std::to_string(e) + " spans several regions");
        }
    }
    return out;
}

bool separates(const Triangulation& tri, const NormalVector& v, const LinkSpec& link) {
    return separates(tri, compute_skeleton(tri), v, link);
}

bool separates(const Triangulation& tri, const Skeleton& sk, const NormalVector& v, const LinkSpec& link) {
    const auto comps = resolve_link(tri, sk, link);
    const RegionGraph g = complement_regions(tri, sk, v);
    std::array<std::size_t, 2> where{};
    for (std::size_t c = 0; c < 2; ++c) {
        const auto& comp = comps[c];
        if (comp.isVertex || comp.edgeClasses.empty()) {
            where[c] = g.locate_vertex(*comp.vertexClasses.begin());
            continue;
        }
        std::optional<std::size_t> r;
        for (std::size_t e : comp.edgeClasses) {
            const auto here = g.locate_edge(e);
            if (!here) throw PreconditionError("surface meets link component " + std::to_string(c + 1));
            if (r && *r != *here) throw InternalError("link component " + std::to_string(c + 1) + " spans several regions");
            r = here;
        }
        where[c] = *r;
    }
    return where[0] != where[1];
}

NormalVector vertex_link(const Triangulation& tri, const Skeleton& sk, std::size_t vertexClass) {
    if (vertexClass >= sk.vertices.size()) throw PreconditionError("vertex class out of range");
    NormalVector out = NormalVector::zero(tri.size());
    for (const auto& m : sk.vertices[vertexClass].members) out.coords[triangle_var(m.tet, m.vertex)] = 1;
    return out;
}

}  // namespace normalsurf
