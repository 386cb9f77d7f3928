#include "doctest.h"

#include <algorithm>
#include <set>

#include "normalsurf/error.hpp"
#include "normalsurf/fixtures.hpp"
#include "normalsurf/matching.hpp"
#include "normalsurf/skeleton.hpp"

using namespace normalsurf;

namespace {

using EqKey = std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>;

EqKey key(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    std::pair<std::size_t, std::size_t> a{std::min(i, j), std::max(i, j)}, b{std::min(k, l), std::max(k, l)};
    if (b < a) std::swap(a, b);
    return {a, b};
}

std::set<EqKey> generated(const MatchingSystem& sys) {
    std::set<EqKey> out;
    for (const auto& e : sys.equations) out.insert(key(e.i, e.j, e.k, e.l));
    return out;
}

std::size_t printed_var(const Triangulation& tri, const fixtures::PrintedTerm& t, const std::array<int, 3>& calib) {
    const std::size_t tet = *tri.index_of(t.tet);
    return t.index <= 4 ? triangle_var(tet, t.index - 1) : quad_var(tet, calib[static_cast<std::size_t>(t.index - 5)]);
}

std::size_t matches(const Triangulation& tri, const std::set<EqKey>& gen, const fixtures::PrintedGluing& g,
                    const std::array<int, 3>& calib) {
    std::size_t n = 0;
    for (const auto& e : g.equations)
        n += gen.count(key(printed_var(tri, e.terms[0], calib), printed_var(tri, e.terms[1], calib),
                           printed_var(tri, e.terms[2], calib), printed_var(tri, e.terms[3], calib)));
    return n;
}

}  // namespace

TEST_CASE("quad types") {
    CHECK(quad_type(0, 1) == 0);
    CHECK(quad_type(2, 3) == 0);
    CHECK(quad_type(0, 2) == 1);
    CHECK(quad_type(1, 3) == 1);
    CHECK(quad_type(0, 3) == 2);
    CHECK(quad_type(1, 2) == 2);
}

TEST_CASE("disks crossing an edge") {
    const auto d = disks_crossing_edge(0, 0, 1);
    const std::set<std::size_t> got(d.begin(), d.end());
    // t0, t1 and the quads separating 0 from 1, i.e. q02 and q03.
    CHECK(got == std::set<std::size_t>{0, 1, 5, 6});
}

TEST_CASE("equation counts") {
    CHECK(build_matching_system(fixtures::fig8_closed()).equations.size() == 72);
    CHECK(build_matching_system(fixtures::fig8_closed()).variableCount == 84);
    // 20 interior faces of 10 tetrahedra with 2 boundary faces -> 19 classes.
    CHECK(build_matching_system(fixtures::fig8_exterior()).equations.size() == 57);
    CHECK(build_matching_system(fixtures::single_tetrahedron()).equations.empty());
    CHECK(build_matching_system(fixtures::two_tetrahedra_one_face()).equations.size() == 3);
}

TEST_CASE("generated equations reproduce the printed list") {
    const auto tri = fixtures::fig8_closed();
    const auto gen = generated(build_matching_system(tri));
    const auto calib = fixtures::fig8_quad_calibration();
    CHECK(calib == std::array<int, 3>{0, 1, 2});
    const auto printed = fixtures::fig8_printed_equations();
    REQUIRE(printed.size() == 24);
    for (std::size_t g = 0; g < printed.size(); ++g) {
        CAPTURE(printed[g].label);
        if (g == 6) {
            // The seventh entry writes p where the gluing is of p'.
            CHECK(matches(tri, gen, printed[g], calib) == 0);
            auto fixed = printed[g];
            for (auto& e : fixed.equations)
                for (auto& t : e.terms)
                    if (t.tet == "p") t.tet = "p'";
            CHECK(matches(tri, gen, fixed, calib) == 3);
        } else {
            CHECK(matches(tri, gen, printed[g], calib) == 3);
        }
    }
}

TEST_CASE("quad calibration is the unique fitting map") {
    const auto tri = fixtures::fig8_closed();
    const auto gen = generated(build_matching_system(tri));
    const auto printed = fixtures::fig8_printed_equations();
    std::array<int, 3> perm{0, 1, 2};
    std::size_t fitting = 0;
    do {
        std::size_t total = 0;
        for (std::size_t g = 0; g < 6; ++g) total += matches(tri, gen, printed[g], perm);
        if (total == 18) {
            ++fitting;
            CHECK(perm == fixtures::fig8_quad_calibration());
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(fitting == 1);
}

TEST_CASE("link restriction zeros") {
    const auto tri = fixtures::fig8_closed();
    const auto sys = restrict_to_link(build_matching_system(tri), tri, fixtures::fig8_link());
    CHECK(sys.forcedZeros.size() == 38);
    // The zeros expected for the cone tetrahedra.
    const std::size_t h1 = *tri.index_of("h1"), h2 = *tri.index_of("h2");
    for (std::size_t k : {1, 3, 4, 6}) CHECK(sys.forcedZeros.count(kBlock * h1 + k));
    for (std::size_t k : {2, 3, 5, 6}) CHECK(sys.forcedZeros.count(kBlock * h2 + k));
    // Exactly the disks meeting the 10 members of the b1*(13) class.
    const Skeleton sk = compute_skeleton(tri);
    const auto cls = sk.oriented_edge(*tri.index_of("b1*"), 1, 3).first;
    std::set<std::size_t> expect;
    for (const auto& m : sk.edges[cls].members) {
        const auto ends = edge_vertices(m.edge);
        for (auto v : disks_crossing_edge(m.tet, ends[0], ends[1])) expect.insert(v);
    }
    CHECK(sys.forcedZeros == expect);
}

TEST_CASE("reference solutions solve the restricted system") {
    const auto tri = fixtures::fig8_closed();
    const auto sys = restrict_to_link(build_matching_system(tri), tri, fixtures::fig8_link());
    for (const auto& v : fixtures::fig8_reference_solutions()) {
        CHECK(is_solution(sys, v));
        CHECK(is_admissible(v));
    }
    CHECK_THROWS_AS(is_solution(sys, CoordVector(5, 0)), PreconditionError);
}

TEST_CASE("all-triangles vector solves every fixture") {
    for (const auto& tri : {fixtures::fig8_exterior(), fixtures::fig8_closed(), fixtures::fig8_disconnected(),
                            fixtures::single_tetrahedron(), fixtures::two_tetrahedra_one_face(),
                            fixtures::doubled_tetrahedron(), fixtures::solid_torus()})
        CHECK(is_solution(build_matching_system(tri), all_triangles(tri.size())));
}

TEST_CASE("admissibility and Haken sum") {
    NormalVector a = NormalVector::zero(2), b = NormalVector::zero(2), c = NormalVector::zero(2);
    a.coords[quad_var(0, 0)] = 1;
    b.coords[quad_var(0, 0)] = 2;
    b.coords[quad_var(1, 2)] = 1;
    c.coords[quad_var(0, 1)] = 1;
    CHECK(is_admissible(a));
    CHECK(is_admissible(haken_sum(a, b)));
    CHECK(haken_sum(a, b).coords[quad_var(0, 0)] == 3);
    CHECK_THROWS_AS(haken_sum(a, c), PreconditionError);
    CHECK_THROWS_AS(haken_sum(a, NormalVector::zero(3)), PreconditionError);
    CHECK(a.quad_kind(0) == 0);
    CHECK(a.quad_kind(1) == -1);
}
