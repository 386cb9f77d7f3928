#pragma once

#include <set>
#include <string>
#include <vector>

#include "normalsurf/curves2d.hpp"
#include "normalsurf/link.hpp"
#include "normalsurf/matching.hpp"
#include "normalsurf/triangulation.hpp"

namespace normalsurf::fixtures {

/// Figure-eight knot exterior: the 10-tetrahedron inflation triangulation with
/// boundary faces b1*(123) and b2*(123).
Triangulation fig8_exterior();

/// The exterior closed off by the two cone tetrahedra h1, h2 (12 tetrahedra).
/// The cone point is the ideal vertex h1(0) = h2(0).
Triangulation fig8_closed();

/// Link of the closed complex: the ideal vertex and the edge cycle b1*(13).
LinkSpec fig8_link();

/// The pushoff b1*(13) as a single-edge cycle.
EdgeCycle fig8_pushoff();

/// Reference solutions (1)-(3) of the restricted fig8 system, 84 coordinates
/// in tetrahedron file order of fig8_closed().
std::vector<NormalVector> fig8_reference_solutions();

/// Hand-tabulated matching equations of the closed complex, one entry per
/// gluing, kept exactly as tabulated (slips included), 1-based indices.
struct PrintedTerm {
    std::string tet;
    int index;  ///< 1..7
    friend bool operator==(const PrintedTerm&, const PrintedTerm&) = default;
};
/// terms[0] + terms[1] = terms[2] + terms[3]
struct PrintedEquation {
    std::array<PrintedTerm, 4> terms;
};
struct PrintedGluing {
    std::string label;  ///< e.g. "p(012) ~ 3(320)"
    std::vector<PrintedEquation> equations;
};
std::vector<PrintedGluing> fig8_printed_equations();

/// Map from the printed quad indices (5, 6, 7) to quad types (0 = q01, 1 = q02,
/// 2 = q03), calibrated by regenerating the printed equations from the gluing table.
std::array<int, 3> fig8_quad_calibration();

Triangulation single_tetrahedron();

/// Two tetrahedra glued along one face (A(012) to B(012)).
Triangulation two_tetrahedra_one_face();

/// Two tetrahedra glued along all four faces by the identity: a 4-vertex S^3.
Triangulation doubled_tetrahedron();

/// Two disjoint copies of fig8_closed(); names get suffixes "#a" and "#b".
Triangulation fig8_disconnected();

/// Copy "#a" keeps its ideal vertex, copy "#b" its boundary edge b1*(13):
/// the two components lie in different copies.
LinkSpec fig8_disconnected_link();

/// One tetrahedron with s(123) glued to s(230): a solid torus with one vertex
/// and its boundary torus made of s(013) and s(012).
Triangulation solid_torus();

/// Boundary-meeting variables of the meridian disk of solid_torus():
/// its boundary runs along the torus as t0, t1 and q03 arcs.
std::set<std::size_t> solid_torus_longitude_pattern();

/// Square made of two triangles glued along a diagonal.
SurfaceTriangulation square_surface();

/// Two disjoint triangles.
SurfaceTriangulation two_triangles();

}  // namespace normalsurf::fixtures
