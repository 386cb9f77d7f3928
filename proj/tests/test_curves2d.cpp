#include "doctest.h"

#include <random>

#include "normalsurf/curves2d.hpp"
#include "normalsurf/error.hpp"
#include "normalsurf/fixtures.hpp"
#include "normalsurf/io.hpp"
#include "support.hpp"

using namespace normalsurf;
using namespace testsupport;

TEST_CASE("single arc") {
    const SurfaceTriangulation s({"A"});
    CurveVector v = CurveVector::zero(1);
    v.coords[arc_var(0, 0)] = 1;
    const auto r = analyze_curve(s, v);
    CHECK(r.weight == 2);
    CHECK(r.components == 1);
    CHECK(analyze_curve(s, CurveVector::zero(1)).weight == 0);
    CHECK(analyze_curve(s, CurveVector::zero(1)).components == 0);
}

TEST_CASE("equation count is the number of interior edges") {
    CHECK(build_matching_system_2d(fixtures::square_surface()).equations.size() == 1);
    CHECK(build_matching_system_2d(fixtures::two_triangles()).equations.empty());
    std::mt19937 rng(1);
    for (int i = 0; i < 20; ++i) {
        const auto s = random_surface(rng, 10);
        std::size_t interior = 0;
        for (std::size_t t = 0; t < s.size(); ++t)
            for (int w = 0; w < 3; ++w) interior += !s.is_boundary(t, w);
        CHECK(build_matching_system_2d(s).equations.size() == interior / 2);
    }
}

TEST_CASE("non-solutions are rejected") {
    const auto s = fixtures::square_surface();
    CurveVector v = CurveVector::zero(2);
    v.coords[arc_var(0, 0)] = 1;
    CHECK_THROWS_AS(analyze_curve(s, v), PreconditionError);
}

TEST_CASE("square: diagonal crossing") {
    const auto s = fixtures::square_surface();
    const auto r = connect_boundary_points(s, EdgeSpot{0, {0, 1}}, EdgeSpot{1, {0, 1}});
    CHECK(r.connected);
    REQUIRE(r.witness);
    const auto rep = analyze_curve(s, *r.witness);
    CHECK(rep.components == 1);
    CHECK_THROWS_AS(connect_boundary_points(s, EdgeSpot{0, {0, 2}}, EdgeSpot{1, {0, 1}}), InputError);
}

TEST_CASE("two triangles are not connected") {
    const auto s = fixtures::two_triangles();
    const auto r = connect_boundary_points(s, EdgeSpot{0, {0, 1}}, EdgeSpot{1, {0, 1}});
    CHECK_FALSE(r.connected);
    CHECK_FALSE(r.witness);
    CHECK(connect_boundary_points(s, EdgeSpot{0, {0, 1}}, EdgeSpot{0, {1, 2}}).connected);
    CHECK(connect_boundary_points(s, EdgeSpot{0, {0, 1}}, EdgeSpot{0, {1, 0}}).connected);
}

TEST_CASE("connectivity agrees with flood fill") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 15; ++trial) {
        const auto s = random_surface(rng, 8);
        const auto comp = triangle_components(s);
        const auto edges = boundary_edges(s);
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                const auto r = connect_boundary_points(s, edges[i], edges[j]);
                CHECK(r.connected == (comp[edges[i].tri] == comp[edges[j].tri]));
                if (r.witness) CHECK(analyze_curve(s, *r.witness).components == 1);
            }
    }
}

TEST_CASE("weights add under curve sums") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = random_surface(rng, 6);
        const auto fs = enumerate_fundamental(build_matching_system_2d(s));
        if (fs.empty()) continue;
        for (int k = 0; k < 10; ++k) {
            const CurveVector a(fs.vectors[rng() % fs.size()]), b(fs.vectors[rng() % fs.size()]);
            const auto sum = curve_sum(a, b);
            CHECK(analyze_curve(s, sum).weight == analyze_curve(s, a).weight + analyze_curve(s, b).weight);
        }
    }
}

TEST_CASE("surface JSON round trip and errors") {
    const auto s = fixtures::square_surface();
    CHECK(io::parse_surface(io::dump(io::surface_json(s))) == s);
    std::mt19937 rng(2);
    for (int i = 0; i < 10; ++i) {
        const auto r = random_surface(rng, 8);
        CHECK(io::parse_surface(io::dump(io::surface_json(r))) == r);
    }
    CHECK_THROWS_AS(io::parse_surface(R"({"triangles":["A"],"gluings":[{"tri":"A","face":[0,3],"to":{"tri":"A","verts":[1,2]}}]})"),
                    InputError);
}
