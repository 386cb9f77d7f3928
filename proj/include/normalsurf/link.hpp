#pragma once

#include <cstddef>
#include <set>
#include <variant>
#include <vector>

#include "normalsurf/skeleton.hpp"
#include "normalsurf/triangulation.hpp"

namespace normalsurf {

/// Tetrahedron edge traversed from vertex `from` to vertex `to`.
struct EdgeRef {
    std::size_t tet = 0;
    int from = 0;
    int to = 1;
    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

/// Closed loop in the 1-skeleton, given by representatives of its oriented edges.
struct EdgeCycle {
    std::vector<EdgeRef> edges;
    friend bool operator==(const EdgeCycle&, const EdgeCycle&) = default;
};

/// A link component sitting at a vertex class (typically a deleted vertex).
struct IdealVertex {
    std::size_t tet = 0;
    int vertex = 0;
    friend bool operator==(const IdealVertex&, const IdealVertex&) = default;
};

using LinkComponent = std::variant<EdgeCycle, IdealVertex>;

struct LinkSpec {
    std::vector<LinkComponent> components;
};

/// A component resolved against a skeleton.
struct ResolvedComponent {
    bool isVertex = false;
    std::vector<std::pair<std::size_t, int>> edges;  ///< (edge class, sign) along the cycle
    std::set<std::size_t> edgeClasses;
    std::set<std::size_t> vertexClasses;  ///< the vertex class, or all cycle vertices
};

/// Resolves one component; throws InputError for bad references or an open cycle.
ResolvedComponent resolve_component(const Triangulation& tri, const Skeleton& sk, const LinkComponent& c);

/// Resolves a two-component link; throws InputError unless it has exactly two
/// valid, disjoint components.
std::vector<ResolvedComponent> resolve_link(const Triangulation& tri, const Skeleton& sk, const LinkSpec& link);

}  // namespace normalsurf
