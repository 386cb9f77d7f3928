#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normalsurf/hilbert.hpp"
#include "normalsurf/matching.hpp"

namespace normalsurf {

/// An edge of a triangle named by an ordered pair of its vertex labels (0..2).
struct EdgeSpot {
    std::size_t tri = 0;
    std::array<int, 2> verts{};

    int omitted() const { return 3 - verts[0] - verts[1]; }
    friend bool operator==(const EdgeSpot&, const EdgeSpot&) = default;
};

struct EdgeTarget {
    std::size_t tri = 0;
    std::array<int, 3> perm{};  ///< full vertex map; the omitted vertex maps to the omitted vertex
    friend bool operator==(const EdgeTarget&, const EdgeTarget&) = default;
};

/// Triangles glued in pairs along edges.
class SurfaceTriangulation {
public:
    SurfaceTriangulation() = default;
    explicit SurfaceTriangulation(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t tri) const { return names_.at(tri); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    void set_gluing(const EdgeSpot& from, const EdgeSpot& to);
    void glue(const EdgeSpot& from, const EdgeSpot& to);

    const std::optional<EdgeTarget>& target(std::size_t tri, int omitted) const {
        return edges_.at(tri)[static_cast<std::size_t>(omitted)];
    }
    bool is_boundary(std::size_t tri, int omitted) const { return !target(tri, omitted); }

    friend bool operator==(const SurfaceTriangulation&, const SurfaceTriangulation&) = default;

private:
    std::vector<std::string> names_;
    std::vector<std::array<std::optional<EdgeTarget>, 3>> edges_;
};

/// Violations of the involution / no-self-gluing invariants, as messages.
std::vector<std::string> validate(const SurfaceTriangulation& surf);

/// Normal arc counts, 3 per triangle: a_v cuts off vertex v.
struct CurveVector {
    CoordVector coords;

    CurveVector() = default;
    explicit CurveVector(CoordVector c) : coords(std::move(c)) {}
    static CurveVector zero(std::size_t triangles) { return CurveVector(CoordVector(3 * triangles, 0)); }
    Coord arcs(std::size_t tri, int v) const { return coords[3 * tri + static_cast<std::size_t>(v)]; }
    friend bool operator==(const CurveVector&, const CurveVector&) = default;
};

inline std::size_t arc_var(std::size_t tri, int v) { return 3 * tri + static_cast<std::size_t>(v); }

/// One equation per interior edge: arcs entering equal arcs leaving.
MatchingSystem build_matching_system_2d(const SurfaceTriangulation& surf);

/// Coordinate-wise sum; always defined in two dimensions.
CurveVector curve_sum(const CurveVector& a, const CurveVector& b);

struct CurveReport {
    Coord weight = 0;
    std::vector<Coord> edgeWeights;  ///< per edge class (interior edges first-seen order)
    std::size_t components = 0;
};

/// Weight and connected components. Throws PreconditionError for non-solutions.
/// Boundary edges may carry endpoints.
CurveReport analyze_curve(const SurfaceTriangulation& surf, const CurveVector& v);

struct ConnectResult {
    bool connected = false;
    bool enumerated = false;          ///< false when P and Q share an edge
    std::optional<CurveVector> witness;
    std::size_t fundamentalCount = 0;  ///< size of the boundary-constrained Hilbert basis
};

/// Whether points on boundary edges eP and eQ lie in the same component: look
/// for a fundamental curve with one endpoint on each and none on other boundary
/// edges. Throws InputError if either edge is not a boundary edge.
ConnectResult connect_boundary_points(const SurfaceTriangulation& surf, const EdgeSpot& eP, const EdgeSpot& eQ,
                                      const EnumerationOptions& opts = {});

}  // namespace normalsurf
