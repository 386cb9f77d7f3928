#include "normalsurf/detect.hpp"

#include "normalsurf/error.hpp"
#include "normalsurf/skeleton.hpp"
#include "normalsurf/surface.hpp"

namespace normalsurf {

const char* answer_name(Answer a) {
    switch (a) {
        case Answer::Split: return "SPLIT";
        case Answer::NotSplit: return "NOT_SPLIT";
        case Answer::Unknotted: return "UNKNOTTED";
        case Answer::Knotted: return "KNOTTED";
        case Answer::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

WitnessCheck check_witness(const Triangulation& tri, const LinkSpec& link, const NormalVector& v) {
    WitnessCheck out;
    const Skeleton sk = compute_skeleton(tri);
    const MatchingSystem sys = restrict_to_link(build_matching_system(tri), tri, link);
    if (v.coords.size() != sys.variableCount) return out;
    out.admissibleSolution = is_solution(sys, v) && is_admissible(v);
    if (!out.admissibleSolution) return out;
    const SurfaceReport rep = analyze(tri, sk, v);
    out.closed = rep.closed;
    out.connected = rep.components == 1;
    out.sphere = rep.euler == 2;
    out.separating = separates(tri, sk, v, link);
    return out;
}

Verdict split_link_check(const Triangulation& tri, const LinkSpec& link, const EnumerationOptions& opts) {
    require_valid(tri);
    const Skeleton sk = compute_skeleton(tri);
    resolve_link(tri, sk, link);
    const MatchingSystem sys = restrict_to_link(build_matching_system(tri), tri, link);

    Verdict out;
    EnumerationOptions admissible = opts;
    admissible.admissibleOnly = true;
    FundamentalSet fs;
    try {
        fs = enumerate_fundamental(sys, admissible);
    } catch (const ResourceLimitError& e) {
        out.answer = Answer::Unknown;
        out.diagnostic = e.what();
        return out;
    }
    out.stats = fs.stats;
    out.surfaces = fs.vectors;
    out.answer = Answer::NotSplit;
    for (const auto& c : fs.vectors) {
        ++out.searchedCount;
        const NormalVector v(c);
        const SurfaceReport rep = analyze(tri, sk, v);
        if (!rep.closed || rep.components != 1 || rep.euler != 2) continue;
        if (!separates(tri, sk, v, link)) continue;
        out.answer = Answer::Split;
        out.witness = v;
        break;
    }
    return out;
}

Verdict unknot_via_pushoff(const Triangulation& tri, const LinkComponent& knot, const EdgeCycle& pushoff,
                           const PushoffEvidence& evidence, const EnumerationOptions& opts) {
    if (!evidence.waived) {
        const Triangulation& htri = evidence.homologyTriangulation ? *evidence.homologyTriangulation : tri;
        const EdgeCycle& hcycle = evidence.homologyCycle ? *evidence.homologyCycle : pushoff;
        if (!verify_zero_pushoff(htri, hcycle, evidence.mode))
            throw PreconditionError("pushoff is not null-homologous, so it is not a 0-pushoff");
    }
    Verdict v = split_link_check(tri, LinkSpec{{knot, pushoff}}, opts);
    if (v.answer == Answer::Split) v.answer = Answer::Unknotted;
    if (v.answer == Answer::NotSplit) v.answer = Answer::Knotted;
    return v;
}

std::set<std::size_t> boundary_meeting_variables(const Triangulation& tri) {
    std::set<std::size_t> out;
    for (std::size_t tet = 0; tet < tri.size(); ++tet)
        for (int d = 0; d < 4; ++d) {
            if (!tri.is_boundary(tet, d)) continue;
            // Every quad meets every face; a triangle misses only the face opposite its corner.
            for (int x : face_vertices(d)) out.insert(triangle_var(tet, x));
            for (int q = 0; q < 3; ++q) out.insert(quad_var(tet, q));
        }
    return out;
}

std::vector<NormalVector> filter_unknotting_disks(const Triangulation& tri, const FundamentalSet& fs,
                                                  const std::set<std::size_t>& longitudePattern) {
    if (tri.boundary_face_count() == 0) throw PreconditionError("triangulation is closed: there is no boundary to bound a disk in");
    const Skeleton sk = compute_skeleton(tri);
    const auto meeting = boundary_meeting_variables(tri);
    std::vector<NormalVector> out;
    for (const auto& c : fs.vectors) {
        const NormalVector v(c);
        if (!is_admissible(v)) continue;
        bool offPattern = false;
        for (std::size_t var : meeting)
            if (c[var] != 0 && !longitudePattern.count(var)) offPattern = true;
        if (offPattern) continue;
        const SurfaceReport rep = analyze(tri, sk, v);
        if (rep.euler == 1 && rep.components == 1 && rep.boundaryCircles == 1) out.push_back(v);
    }
    return out;
}

}  // namespace normalsurf
