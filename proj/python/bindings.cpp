#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "normalsurf/curves2d.hpp"
#include "normalsurf/detect.hpp"
#include "normalsurf/error.hpp"
#include "normalsurf/fixtures.hpp"
#include "normalsurf/hilbert.hpp"
#include "normalsurf/homology.hpp"
#include "normalsurf/io.hpp"
#include "normalsurf/surface.hpp"

namespace py = pybind11;
using namespace normalsurf;

namespace {

EnumerationOptions options(std::uint64_t maxCandidates, std::int64_t timeBudgetMs) {
    EnumerationOptions o;
    o.limits.maxCandidates = maxCandidates;
    o.limits.timeBudget = std::chrono::milliseconds(timeBudgetMs);
    return o;
}

MatchingSystem system_for(const Triangulation& tri, const std::optional<LinkSpec>& link) {
    MatchingSystem sys = build_matching_system(tri);
    return link ? restrict_to_link(sys, tri, *link) : sys;
}

py::dict report_dict(const SurfaceReport& r) {
    py::dict d;
    d["euler"] = r.euler;
    d["components"] = r.components;
    d["closed"] = r.closed;
    d["boundary_circles"] = r.boundaryCircles;
    d["weight"] = r.weight;
    return d;
}

std::vector<std::string> strings(const std::vector<BigInt>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

EdgeSpot edge_spot(const SurfaceTriangulation& s, const std::string& name, std::array<int, 2> verts) {
    auto idx = s.index_of(name);
    if (!idx) throw InputError("unknown triangle \"" + name + "\"");
    return EdgeSpot{*idx, verts};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Normal surfaces in triangulated 3-manifolds";

    // Translators run newest first, so the base class goes in first.
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

    py::class_<Triangulation>(m, "Triangulation")
        .def_static("from_json", [](const std::string& text) { return io::parse_triangulation(text); })
        .def("to_json", [](const Triangulation& t) { return io::dump(io::triangulation_json(t)); })
        .def_property_readonly("names", &Triangulation::names)
        .def("__len__", &Triangulation::size)
        .def("boundary_face_count", &Triangulation::boundary_face_count)
        .def("validate", [](const Triangulation& t) {
            std::vector<std::string> out;
            for (const auto& v : validate(t).violations) out.push_back(v.message);
            return out;
        })
        .def("__eq__", [](const Triangulation& a, const Triangulation& b) { return a == b; });

    py::class_<LinkSpec>(m, "Link")
        .def_static("from_json", [](const std::string& text, const Triangulation& tri) { return io::parse_link(text, tri); })
        .def("to_json", [](const LinkSpec& l, const Triangulation& tri) { return io::dump(io::link_json(l, tri)); })
        .def("__len__", [](const LinkSpec& l) { return l.components.size(); });

    auto fx = m.def_submodule("fixtures", "Bundled triangulations");
    fx.def("fig8_exterior", &fixtures::fig8_exterior);
    fx.def("fig8_closed", &fixtures::fig8_closed);
    fx.def("fig8_link", &fixtures::fig8_link);
    fx.def("fig8_disconnected", &fixtures::fig8_disconnected);
    fx.def("fig8_disconnected_link", &fixtures::fig8_disconnected_link);
    fx.def("solid_torus", &fixtures::solid_torus);
    fx.def("single_tetrahedron", &fixtures::single_tetrahedron);
    fx.def("fig8_reference_solutions", [] {
        std::vector<CoordVector> out;
        for (const auto& v : fixtures::fig8_reference_solutions()) out.push_back(v.coords);
        return out;
    });

    m.def(
        "matching_equations",
        [](const Triangulation& tri, const std::optional<LinkSpec>& link) {
            const auto sys = system_for(tri, link);
            std::vector<std::array<std::size_t, 4>> eqs;
            for (const auto& e : sys.equations) eqs.push_back({e.i, e.j, e.k, e.l});
            return py::make_tuple(eqs, std::vector<std::size_t>(sys.forcedZeros.begin(), sys.forcedZeros.end()));
        },
        py::arg("tri"), py::arg("link") = py::none(),
        "(equations, forced_zeros); each equation (i, j, k, l) reads v[i] + v[j] = v[k] + v[l].");

    m.def(
        "fundamental_surfaces",
        [](const Triangulation& tri, const std::optional<LinkSpec>& link, bool admissibleOnly, std::uint64_t maxCandidates,
           std::int64_t timeBudgetMs) {
            auto o = options(maxCandidates, timeBudgetMs);
            o.admissibleOnly = admissibleOnly;
            py::gil_scoped_release release;
            return enumerate_fundamental(system_for(tri, link), o).vectors;
        },
        py::arg("tri"), py::arg("link") = py::none(), py::arg("admissible_only") = true,
        py::arg("max_candidates") = 10'000'000, py::arg("time_budget_ms") = 300'000);

    m.def(
        "analyze", [](const Triangulation& tri, const CoordVector& v) { return report_dict(analyze(tri, NormalVector(v))); },
        py::arg("tri"), py::arg("coords"));
    m.def(
        "separates",
        [](const Triangulation& tri, const CoordVector& v, const LinkSpec& link) { return separates(tri, NormalVector(v), link); },
        py::arg("tri"), py::arg("coords"), py::arg("link"));
    m.def(
        "haken_sum", [](const CoordVector& a, const CoordVector& b) { return haken_sum(NormalVector(a), NormalVector(b)).coords; },
        py::arg("a"), py::arg("b"));

    m.def(
        "split_link_check",
        [](const Triangulation& tri, const LinkSpec& link, std::uint64_t maxCandidates, std::int64_t timeBudgetMs) {
            Verdict v;
            {
                py::gil_scoped_release release;
                v = split_link_check(tri, link, options(maxCandidates, timeBudgetMs));
            }
            py::dict d;
            d["answer"] = answer_name(v.answer);
            d["searched"] = v.searchedCount;
            d["surfaces"] = v.surfaces;
            d["witness"] = v.witness ? py::cast(v.witness->coords) : py::none();
            d["diagnostic"] = v.diagnostic;
            return d;
        },
        py::arg("tri"), py::arg("link"), py::arg("max_candidates") = 10'000'000, py::arg("time_budget_ms") = 300'000);

    m.def(
        "homology",
        [](const Triangulation& tri, bool strict) {
            const auto h = h1(tri, strict ? HomologyMode::Strict : HomologyMode::Lenient);
            py::dict d;
            d["free_rank"] = h.freeRank;
            d["torsion"] = strings(h.torsion);
            d["description"] = h.describe();
            d["warnings"] = h.warnings;
            return d;
        },
        py::arg("tri"), py::arg("strict") = false);
    m.def(
        "cycle_class",
        [](const Triangulation& tri, const std::string& cycleJson) {
            const auto cc = chain_complex(tri);
            const auto h = h1(cc);
            const auto c = h.classify(chain_of_cycle(tri, cc.skeleton, io::parse_cycle(cycleJson, tri)));
            return py::make_tuple(strings(c.free), strings(c.torsion));
        },
        py::arg("tri"), py::arg("cycle_json"), "(free coordinates, torsion residues) of an edge cycle, as decimal strings.");

    m.def(
        "connect_boundary_points",
        [](const std::string& surfaceJson, const std::string& triP, std::array<int, 2> edgeP, const std::string& triQ,
           std::array<int, 2> edgeQ) {
            const auto s = io::parse_surface(surfaceJson);
            const auto r = connect_boundary_points(s, edge_spot(s, triP, edgeP), edge_spot(s, triQ, edgeQ));
            return py::make_tuple(r.connected, r.witness ? py::cast(r.witness->coords) : py::none());
        },
        py::arg("surface_json"), py::arg("tri_p"), py::arg("edge_p"), py::arg("tri_q"), py::arg("edge_q"));
}
