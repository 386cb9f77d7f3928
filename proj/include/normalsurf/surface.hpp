#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "normalsurf/link.hpp"
#include "normalsurf/matching.hpp"
#include "normalsurf/skeleton.hpp"
#include "normalsurf/triangulation.hpp"

namespace normalsurf {

struct SurfaceReport {
    Coord weight = 0;
    std::vector<Coord> edgeWeights;  ///< indexed by edge class
    long euler = 0;
    std::size_t components = 0;
    bool closed = true;
    std::size_t boundaryCircles = 0;
    Coord diskCount = 0;
};

/// Intersections of `v` with each edge class, or nullopt when the incident
/// tetrahedra disagree (which a solution never does).
std::optional<std::vector<Coord>> edge_weights(const Triangulation& tri, const Skeleton& sk, const NormalVector& v);

/// Throws PreconditionError unless `v` is an admissible solution.
SurfaceReport analyze(const Triangulation& tri, const NormalVector& v);
SurfaceReport analyze(const Triangulation& tri, const Skeleton& sk, const NormalVector& v);

/// Connected pieces of the complement of a normal surface.
struct RegionGraph {
    std::size_t regionCount = 0;
    /// Regions on the two sides of some disk, as (low, high); a pair (r, r)
    /// means some disk has the same region on both sides.
    std::vector<std::pair<std::size_t, std::size_t>> adjacency;
    std::vector<std::size_t> vertexRegion;              ///< per vertex class
    std::vector<std::optional<std::size_t>> edgeRegion;  ///< per edge class; set for zero-weight edges

    std::size_t locate_vertex(std::size_t vertexClass) const { return vertexRegion.at(vertexClass); }
    std::optional<std::size_t> locate_edge(std::size_t edgeClass) const { return edgeRegion.at(edgeClass); }
};

RegionGraph complement_regions(const Triangulation& tri, const NormalVector& v);
RegionGraph complement_regions(const Triangulation& tri, const Skeleton& sk, const NormalVector& v);

/// Whether the two link components lie in different complementary regions.
/// Throws PreconditionError if the surface meets an edge of the link.
bool separates(const Triangulation& tri, const NormalVector& v, const LinkSpec& link);
bool separates(const Triangulation& tri, const Skeleton& sk, const NormalVector& v, const LinkSpec& link);

/// Vertex-linking vector: 1 on every triangle whose corner lies in the class.
NormalVector vertex_link(const Triangulation& tri, const Skeleton& sk, std::size_t vertexClass);

}  // namespace normalsurf
