#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "normalsurf/link.hpp"
#include "normalsurf/triangulation.hpp"

namespace normalsurf {

using Coord = std::int64_t;
using CoordVector = std::vector<Coord>;

/// Coordinates per tetrahedron: t0 t1 t2 t3 q01 q02 q03.
inline constexpr std::size_t kBlock = 7;

/// Quad type separating the pair {a,b} from its complement:
/// 0 for {0,1}|{2,3}, 1 for {0,2}|{1,3}, 2 for {0,3}|{1,2}.
int quad_type(int a, int b);

/// The pair containing vertex 0 for quad type `q` (0 and 1, 2 or 3).
int quad_partner_of_zero(int q);

inline std::size_t triangle_var(std::size_t tet, int v) { return kBlock * tet + static_cast<std::size_t>(v); }
inline std::size_t quad_var(std::size_t tet, int q) { return kBlock * tet + 4 + static_cast<std::size_t>(q); }
inline std::size_t quad_var(std::size_t tet, int a, int b) { return quad_var(tet, quad_type(a, b)); }

/// Elementary-disk counts of a normal surface, 7 per tetrahedron.
struct NormalVector {
    CoordVector coords;

    NormalVector() = default;
    explicit NormalVector(CoordVector c) : coords(std::move(c)) {}
    static NormalVector zero(std::size_t tetrahedra) { return NormalVector(CoordVector(kBlock * tetrahedra, 0)); }

    std::size_t tetrahedra() const { return coords.size() / kBlock; }
    Coord triangle(std::size_t tet, int v) const { return coords[triangle_var(tet, v)]; }
    Coord quad(std::size_t tet, int q) const { return coords[quad_var(tet, q)]; }
    /// The single nonzero quad type of `tet` (-1 if none). Assumes admissibility.
    int quad_kind(std::size_t tet) const;

    bool is_zero() const;
    friend bool operator==(const NormalVector&, const NormalVector&) = default;
    friend auto operator<=>(const NormalVector&, const NormalVector&) = default;
};

/// v[i] + v[j] = v[k] + v[l]
struct Equation {
    std::size_t i, j, k, l;
    friend bool operator==(const Equation&, const Equation&) = default;
};

struct MatchingSystem {
    std::size_t variableCount = 0;
    std::vector<Equation> equations;
    std::set<std::size_t> forcedZeros;
    /// Per tetrahedron the three quad variables; empty for curve systems.
    std::vector<std::array<std::size_t, 3>> quadTriples;

    /// True if `v` has at most one nonzero quad variable in every triple.
    bool admissible(const CoordVector& v) const;
};

/// Matching equations of a 3-dimensional triangulation: three per interior face class.
MatchingSystem build_matching_system(const Triangulation& tri);

/// Equations hold, entries are nonnegative and forced zeros vanish.
/// Throws PreconditionError on a length mismatch.
bool is_solution(const MatchingSystem& sys, const CoordVector& v);
inline bool is_solution(const MatchingSystem& sys, const NormalVector& v) { return is_solution(sys, v.coords); }

/// At most one quad type per tetrahedron is nonzero.
bool is_admissible(const NormalVector& v);

/// Forces to zero every disk type that crosses an edge of an edge-cycle component.
/// Ideal-vertex components add nothing. Throws InputError for invalid links.
MatchingSystem restrict_to_link(const MatchingSystem& sys, const Triangulation& tri, const LinkSpec& link);

/// Variables of the disks crossing the tetrahedron edge {a,b} of `tet`:
/// t_a, t_b and the two quads separating a from b.
std::array<std::size_t, 4> disks_crossing_edge(std::size_t tet, int a, int b);

/// Coordinate-wise sum of two quad-compatible vectors.
/// Throws PreconditionError on a quad-type conflict or length mismatch.
NormalVector haken_sum(const NormalVector& a, const NormalVector& b);

/// The vector with a 1 on every triangle coordinate, 0 on quads.
NormalVector all_triangles(std::size_t tetrahedra);

}  // namespace normalsurf
