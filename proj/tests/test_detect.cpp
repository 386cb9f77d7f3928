#include "doctest.h"

#include "normalsurf/detect.hpp"
#include "normalsurf/error.hpp"
#include "normalsurf/fixtures.hpp"
#include "normalsurf/skeleton.hpp"
#include "normalsurf/surface.hpp"

using namespace normalsurf;

TEST_CASE("figure-eight knot: not split") {
    const auto tri = fixtures::fig8_closed();
    const auto v = split_link_check(tri, fixtures::fig8_link());
    CHECK(v.answer == Answer::NotSplit);
    CHECK(v.searchedCount == 3);
    CHECK_FALSE(v.witness);
    std::vector<CoordVector> refs;
    for (const auto& r : fixtures::fig8_reference_solutions()) refs.push_back(r.coords);
    std::sort(refs.begin(), refs.end());
    CHECK(v.surfaces == refs);
}

TEST_CASE("split check is symmetric in the components") {
    const auto tri = fixtures::fig8_closed();
    const auto link = fixtures::fig8_link();
    const auto swapped = split_link_check(tri, LinkSpec{{link.components[1], link.components[0]}});
    CHECK(swapped.answer == Answer::NotSplit);
    CHECK(swapped.surfaces == split_link_check(tri, link).surfaces);
}

TEST_CASE("disconnected control is split by a vertex link") {
    const auto tri = fixtures::fig8_disconnected();
    const auto link = fixtures::fig8_disconnected_link();
    const auto v = split_link_check(tri, link);
    REQUIRE(v.answer == Answer::Split);
    REQUIRE(v.witness);
    const auto check = check_witness(tri, link, *v.witness);
    CHECK(check.admissibleSolution);
    CHECK(check.closed);
    CHECK(check.connected);
    CHECK(check.sphere);
    CHECK(check.separating);
    const Skeleton sk = compute_skeleton(tri);
    bool isVertexLink = false;
    for (std::size_t c = 0; c < sk.vertices.size(); ++c)
        if (vertex_link(tri, sk, c) == *v.witness) {
            isVertexLink = true;
            CHECK(sk.vertices[c].kind == VertexKind::Material);
        }
    CHECK(isVertexLink);

    const auto swapped = split_link_check(tri, LinkSpec{{link.components[1], link.components[0]}});
    CHECK(swapped.answer == Answer::Split);
    CHECK(swapped.witness == v.witness);
}

TEST_CASE("forced zeros only shrink the search") {
    // The unrestricted closed complex has more admissible fundamentals, and none
    // of the restricted ones disappears when the restriction is dropped.
    const auto tri = fixtures::fig8_closed();
    EnumerationOptions o;
    o.admissibleOnly = true;
    const auto all = enumerate_fundamental(build_matching_system(tri), o);
    const auto v = split_link_check(tri, fixtures::fig8_link());
    CHECK(all.size() == 51);
    for (const auto& s : v.surfaces) CHECK(std::binary_search(all.vectors.begin(), all.vectors.end(), s));
}

TEST_CASE("witness checks catch bad witnesses") {
    const auto tri = fixtures::fig8_closed();
    const auto link = fixtures::fig8_link();
    const auto torus = fixtures::fig8_reference_solutions()[1];
    const auto c = check_witness(tri, link, torus);
    CHECK(c.admissibleSolution);
    CHECK(c.closed);
    CHECK(c.separating);
    CHECK_FALSE(c.sphere);
    CHECK_FALSE(c.all());
    CHECK_FALSE(check_witness(tri, link, all_triangles(tri.size())).admissibleSolution);
    CHECK_FALSE(check_witness(tri, link, NormalVector::zero(3)).all());
}

TEST_CASE("split check preconditions and resource caps") {
    const auto tri = fixtures::fig8_closed();
    CHECK_THROWS_AS(split_link_check(tri, LinkSpec{{fixtures::fig8_link().components[0]}}), InputError);
    EnumerationOptions tight;
    tight.limits.timeBudget = std::chrono::milliseconds(1);
    const auto v = split_link_check(fixtures::fig8_disconnected(), fixtures::fig8_disconnected_link(), tight);
    CHECK(v.answer == Answer::Unknown);
    CHECK_FALSE(v.diagnostic.empty());
    CHECK_FALSE(v.witness);
}

TEST_CASE("unknot via pushoff") {
    const auto tri = fixtures::fig8_closed();
    const auto link = fixtures::fig8_link();
    PushoffEvidence waived;
    waived.waived = true;
    CHECK(unknot_via_pushoff(tri, link.components[0], fixtures::fig8_pushoff(), waived).answer == Answer::Knotted);

    // The closed complex has an ideal vertex, so it cannot certify the pushoff.
    CHECK_THROWS_AS(unknot_via_pushoff(tri, link.components[0], fixtures::fig8_pushoff(), PushoffEvidence{}),
                    PreconditionError);
    // In the exterior, b1*(13) is not null-homologous.
    const auto ext = fixtures::fig8_exterior();
    PushoffEvidence inExterior;
    inExterior.homologyTriangulation = &ext;
    inExterior.homologyCycle = fixtures::fig8_pushoff();
    inExterior.mode = HomologyMode::Lenient;
    CHECK_THROWS_AS(unknot_via_pushoff(tri, link.components[0], fixtures::fig8_pushoff(), inExterior), PreconditionError);

    const auto d = fixtures::fig8_disconnected();
    const auto dl = fixtures::fig8_disconnected_link();
    const auto v = unknot_via_pushoff(d, dl.components[0], std::get<EdgeCycle>(dl.components[1]), waived);
    CHECK(v.answer == Answer::Unknotted);
    CHECK(v.witness);
}

TEST_CASE("unknotting disks: solid torus") {
    const auto tri = fixtures::solid_torus();
    EnumerationOptions o;
    o.admissibleOnly = true;
    const auto fs = enumerate_fundamental(build_matching_system(tri), o);
    const auto meeting = boundary_meeting_variables(tri);
    CHECK(meeting.size() == 7);
    const auto disks = filter_unknotting_disks(tri, fs, fixtures::solid_torus_longitude_pattern());
    REQUIRE(disks.size() == 1);
    CHECK(disks[0].coords == CoordVector{1, 1, 0, 0, 0, 0, 1});
    // Without the pattern restriction the boundary-parallel disk shows up too.
    const auto loose = filter_unknotting_disks(tri, fs, meeting);
    CHECK(loose.size() == 2);
}

TEST_CASE("unknotting disks: the meridian disk is fundamental by brute force") {
    const auto tri = fixtures::solid_torus();
    const auto sols = brute_force_solutions(build_matching_system(tri), 3);
    const CoordVector disk{1, 1, 0, 0, 0, 0, 1};
    REQUIRE(std::binary_search(sols.begin(), sols.end(), disk));
    // No nonzero solution lies strictly below it.
    for (const auto& s : sols) {
        if (s == disk || std::all_of(s.begin(), s.end(), [](Coord c) { return c == 0; })) continue;
        bool below = true;
        for (std::size_t i = 0; i < s.size(); ++i) below &= s[i] <= disk[i];
        CHECK_FALSE(below);
    }
}

TEST_CASE("unknotting disks need a boundary and exclude spheres") {
    const auto closed = fixtures::fig8_closed();
    CHECK_THROWS_AS(filter_unknotting_disks(closed, FundamentalSet{}, {}), PreconditionError);
    const auto tri = fixtures::single_tetrahedron();
    FundamentalSet fs;
    fs.vectors = {CoordVector{0, 0, 0, 0, 2, 0, 0}, CoordVector{1, 0, 0, 0, 0, 0, 0}};
    const auto meeting = boundary_meeting_variables(tri);
    const auto disks = filter_unknotting_disks(tri, fs, meeting);
    REQUIRE(disks.size() == 1);
    CHECK(disks[0].coords == CoordVector{1, 0, 0, 0, 0, 0, 0});
}
