#include "normalsurf/link.hpp"

#include <algorithm>

#include "normalsurf/error.hpp"

namespace normalsurf {

namespace {

void check_vertex(const Triangulation& tri, std::size_t tet, int v) {
    if (tet >= tri.size()) throw InputError("link refers to an unknown tetrahedron");
    if (v < 0 || v > 3) throw InputError("link vertex label out of range in " + tri.name(tet));
}

}  // namespace

ResolvedComponent resolve_component(const Triangulation& tri, const Skeleton& sk, const LinkComponent& c) {
    ResolvedComponent out;
    if (const auto* iv = std::get_if<IdealVertex>(&c)) {
        check_vertex(tri, iv->tet, iv->vertex);
        out.isVertex = true;
        out.vertexClasses.insert(sk.vertex_of(iv->tet, iv->vertex));
        return out;
    }
    const auto& cycle = std::get<EdgeCycle>(c);
    if (cycle.edges.empty()) throw InputError("edge cycle has no edges");
    std::vector<std::size_t> tails, heads;
    for (const auto& e : cycle.edges) {
        check_vertex(tri, e.tet, e.from);
        check_vertex(tri, e.tet, e.to);
        if (e.from == e.to) throw InputError("degenerate edge in cycle at " + tri.name(e.tet));
        out.edges.push_back(sk.oriented_edge(e.tet, e.from, e.to));
        out.edgeClasses.insert(out.edges.back().first);
        tails.push_back(sk.vertex_of(e.tet, e.from));
        heads.push_back(sk.vertex_of(e.tet, e.to));
        out.vertexClasses.insert(tails.back());
        out.vertexClasses.insert(heads.back());
    }
    for (std::size_t i = 0; i < cycle.edges.size(); ++i) {
        const std::size_t next = (i + 1) % cycle.edges.size();
        if (heads[i] != tails[next]) {
            const auto& e = cycle.edges[i];
            throw InputError("edge cycle is not closed after " + edge_name(tri, e.tet, e.from, e.to));
        }
    }
    return out;
}

std::vector<ResolvedComponent> resolve_link(const Triangulation& tri, const Skeleton& sk, const LinkSpec& link) {
    if (link.components.size() != 2)
        throw InputError("a link must have exactly 2 components, got " + std::to_string(link.components.size()));
    std::vector<ResolvedComponent> out;
    for (const auto& c : link.components) out.push_back(resolve_component(tri, sk, c));
    const auto& a = out[0];
    const auto& b = out[1];
    const bool shareEdge = std::any_of(a.edgeClasses.begin(), a.edgeClasses.end(), [&](std::size_t e) { return b.edgeClasses.count(e) > 0; });
    const bool shareVertex = std::any_of(a.vertexClasses.begin(), a.vertexClasses.end(), [&](std::size_t v) { return b.vertexClasses.count(v) > 0; });
    if (shareEdge || shareVertex) throw InputError("link components are not disjoint");
    return out;
}

}  // namespace normalsurf
