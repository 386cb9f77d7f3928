#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "normalsurf/curves2d.hpp"
#include "normalsurf/detect.hpp"
#include "normalsurf/error.hpp"
#include "normalsurf/fixtures.hpp"
#include "normalsurf/hilbert.hpp"
#include "normalsurf/homology.hpp"
#include "normalsurf/io.hpp"
#include "normalsurf/skeleton.hpp"
#include "normalsurf/surface.hpp"

namespace normalsurf::cli {

namespace {

using io::Json;

Triangulation load_triangulation(const std::string& path) { return io::parse_triangulation(io::read_file(path)); }

EnumerationOptions enumeration_options(const RunConfig& c) {
    EnumerationOptions o;
    o.limits.maxCandidates = c.maxCandidates;
    o.limits.timeBudget = c.timeBudget;
    o.algorithm = c.completion ? Algorithm::Completion : Algorithm::Incremental;
    return o;
}

const char* kind_name(VertexKind k) {
    switch (k) {
        case VertexKind::Material: return "material";
        case VertexKind::Ideal: return "ideal";
        case VertexKind::Singular: return "singular";
    }
    return "?";
}

/// Nonzero blocks only, the way solutions are usually written down.
std::string blocks_text(const Triangulation& tri, const CoordVector& v) {
    std::string s;
    for (std::size_t t = 0; t < tri.size(); ++t) {
        bool any = false;
        for (std::size_t k = 0; k < kBlock; ++k) any |= v[kBlock * t + k] != 0;
        if (!any) continue;
        if (!s.empty()) s += "  ";
        s += tri.name(t) + "[";
        for (std::size_t k = 0; k < kBlock; ++k) s += (k ? " " : "") + std::to_string(v[kBlock * t + k]);
        s += "]";
    }
    return s.empty() ? "0" : s;
}

void write_tsv_row(std::ostream& out, const CoordVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "\t" : "") << v[i];
    out << "\n";
}

Json report_json(const SurfaceReport& r) {
    return Json{{"euler", r.euler},          {"components", r.components}, {"closed", r.closed},
                {"boundaryCircles", r.boundaryCircles}, {"weight", r.weight}};
}

std::string report_text(const SurfaceReport& r) {
    std::ostringstream s;
    s << "chi " << r.euler << ", " << r.components << " component" << (r.components == 1 ? "" : "s") << ", "
      << (r.closed ? "closed" : std::to_string(r.boundaryCircles) + " boundary circles");
    return s.str();
}

std::vector<std::string> to_strings(const std::vector<BigInt>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

std::string class_text(const H1Summary& h, const HomologyClass& c) {
    if (c.is_null()) return "0";
    std::vector<std::string> parts = to_strings(c.free);
    for (std::size_t i = 0; i < c.torsion.size(); ++i) parts.push_back(c.torsion[i].str() + " mod " + h.torsion[i].str());
    std::string s = parts.size() == 1 ? parts[0] : "(";
    if (parts.size() > 1) {
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
        s += ")";
    }
    return s;
}

EdgeSpot parse_edge_spot(const SurfaceTriangulation& surf, const std::string& text) {
    const auto colon = text.rfind(':');
    if (colon == std::string::npos || colon + 3 != text.size())
        throw InputError("edge \"" + text + "\": expected name:ab, e.g. L:01");
    const std::string name = text.substr(0, colon);
    auto idx = surf.index_of(name);
    if (!idx) throw InputError("edge \"" + text + "\": unknown triangle \"" + name + "\"");
    const int a = text[colon + 1] - '0', b = text[colon + 2] - '0';
    if (a < 0 || a > 2 || b < 0 || b > 2 || a == b) throw InputError("edge \"" + text + "\": labels must be two distinct digits in 0..2");
    return EdgeSpot{*idx, {a, b}};
}

int cmd_validate(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const Triangulation tri = load_triangulation(c.input);
    const ValidationReport rep = validate(tri);
    if (c.format == Format::Json) {
        Json v = Json::array();
        for (const auto& x : rep.violations) v.push_back(x.message);
        out << io::dump(Json{{"command", "validate"}, {"valid", rep.ok()}, {"tetrahedra", tri.size()},
                             {"boundaryFaces", tri.boundary_face_count()}, {"violations", v}});
    } else if (rep.ok()) {
        out << "valid: " << tri.size() << " tetrahedra, " << tri.boundary_face_count() << " boundary faces\n";
    }
    for (const auto& x : rep.violations) err << "error: " << x.message << "\n";
    return rep.ok() ? 0 : 2;
}

int cmd_skeleton(const RunConfig& c, std::ostream& out) {
    const Triangulation tri = load_triangulation(c.input);
    require_valid(tri);
    const Skeleton sk = compute_skeleton(tri);
    auto rep_name = [&](const EdgeClass& e) {
        const auto ends = edge_vertices(e.members[0].edge);
        return edge_name(tri, e.members[0].tet, ends[0], ends[1]);
    };
    if (c.format == Format::Json) {
        Json vs = Json::array(), es = Json::array();
        for (const auto& v : sk.vertices)
            vs.push_back(Json{{"degree", v.degree()}, {"kind", kind_name(v.kind)}, {"linkEuler", v.linkEuler}, {"boundary", v.boundary}});
        for (const auto& e : sk.edges)
            es.push_back(Json{{"representative", rep_name(e)}, {"degree", e.degree()}, {"boundary", e.boundary},
                              {"start", e.start}, {"end", e.end}});
        std::size_t bf = 0;
        for (const auto& f : sk.faces) bf += f.boundary();
        out << io::dump(Json{{"command", "skeleton"}, {"tetrahedra", tri.size()}, {"vertices", vs}, {"edges", es},
                             {"faces", sk.faces.size()}, {"boundaryFaces", bf}});
        return 0;
    }
    if (c.format == Format::Tsv) {
        for (std::size_t i = 0; i < sk.vertices.size(); ++i)
            out << "vertex\t" << i << "\t" << sk.vertices[i].degree() << "\t" << kind_name(sk.vertices[i].kind) << "\t"
                << sk.vertices[i].linkEuler << "\n";
        for (std::size_t i = 0; i < sk.edges.size(); ++i)
            out << "edge\t" << i << "\t" << sk.edges[i].degree() << "\t" << (sk.edges[i].boundary ? "boundary" : "interior")
                << "\t" << rep_name(sk.edges[i]) << "\n";
        return 0;
    }
    out << tri.size() << " tetrahedra, " << sk.vertices.size() << " vertex classes, " << sk.edges.size()
        << " edge classes, " << sk.faces.size() << " face classes\n";
    for (std::size_t i = 0; i < sk.vertices.size(); ++i) {
        const auto& v = sk.vertices[i];
        out << "vertex " << i << ": degree " << v.degree() << ", link chi " << v.linkEuler << ", " << kind_name(v.kind) << "\n";
    }
    for (std::size_t i = 0; i < sk.edges.size(); ++i) {
        const auto& e = sk.edges[i];
        out << "edge " << i << ": " << rep_name(e) << ", degree " << e.degree() << (e.boundary ? ", boundary" : "") << "\n";
    }
    return 0;
}

int cmd_fundamental(const RunConfig& c, std::ostream& out) {
    const Triangulation tri = load_triangulation(c.input);
    require_valid(tri);
    const Skeleton sk = compute_skeleton(tri);
    MatchingSystem sys = build_matching_system(tri);
    if (c.link) {
        const LinkSpec link = io::parse_link(io::read_file(*c.link), tri);
        resolve_link(tri, sk, link);
        sys = restrict_to_link(sys, tri, link);
    }
    EnumerationOptions opts = enumeration_options(c);
    opts.admissibleOnly = !c.allFundamental;
    const FundamentalSet fs = enumerate_fundamental(sys, opts);

    if (c.format == Format::Tsv) {
        for (const auto& v : fs.vectors) write_tsv_row(out, v);
        return 0;
    }
    if (c.format == Format::Json) {
        Json surfaces = Json::array();
        for (const auto& v : fs.vectors) {
            Json s = io::vector_json(tri, v);
            const NormalVector nv(v);
            s["admissible"] = is_admissible(nv);
            if (is_admissible(nv)) s["surface"] = report_json(analyze(tri, sk, nv));
            surfaces.push_back(s);
        }
        out << io::dump(Json{{"command", "fundamental"}, {"variables", sys.variableCount},
                             {"equations", sys.equations.size()}, {"forcedZeros", sys.forcedZeros.size()},
                             {"admissibleOnly", opts.admissibleOnly}, {"count", fs.size()}, {"surfaces", surfaces}});
        return 0;
    }
    out << sys.variableCount << " variables, " << sys.equations.size() << " equations, " << sys.forcedZeros.size()
        << " forced zeros\n";
    out << fs.size() << (opts.admissibleOnly ? " admissible" : "") << " fundamental surfaces\n";
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const NormalVector nv(fs.vectors[i]);
        out << "(" << i + 1 << ") " << blocks_text(tri, fs.vectors[i]);
        if (is_admissible(nv)) out << "  -- " << report_text(analyze(tri, sk, nv));
        else out << "  -- not admissible";
        out << "\n";
    }
    return 0;
}

int print_verdict(const RunConfig& c, const char* command, const Triangulation& tri, const LinkSpec& link,
                  const Verdict& v, std::ostream& out, std::ostream& err) {
    const Skeleton sk = compute_skeleton(tri);
    auto separates_text = [&](const NormalVector& nv) -> std::optional<bool> {
        try {
            return separates(tri, sk, nv, link);
        } catch (const Error&) {
            return std::nullopt;
        }
    };
    if (c.format == Format::Tsv) {
        if (v.witness) write_tsv_row(out, v.witness->coords);
        else
            for (const auto& s : v.surfaces) write_tsv_row(out, s);
    } else if (c.format == Format::Json) {
        Json surfaces = Json::array();
        for (std::size_t i = 0; i < v.surfaces.size(); ++i) {
            const NormalVector nv(v.surfaces[i]);
            Json s = io::vector_json(tri, v.surfaces[i]);
            s["surface"] = report_json(analyze(tri, sk, nv));
            const auto sep = separates_text(nv);
            s["separates"] = sep ? Json(*sep) : Json(nullptr);
            surfaces.push_back(s);
        }
        Json doc{{"command", command}, {"answer", answer_name(v.answer)}, {"searched", v.searchedCount},
                 {"fundamentalCount", v.surfaces.size()}};
        doc["witness"] = v.witness ? io::vector_json(tri, v.witness->coords) : Json(nullptr);
        if (v.answer == Answer::Unknown) doc["diagnostic"] = v.diagnostic;
        doc["surfaces"] = surfaces;
        out << io::dump(doc);
    } else {
        out << "verdict " << answer_name(v.answer) << "\n";
        if (v.answer != Answer::Unknown) {
            out << v.surfaces.size() << " admissible fundamental surfaces, " << v.searchedCount << " examined\n";
            for (std::size_t i = 0; i < v.surfaces.size(); ++i) {
                const NormalVector nv(v.surfaces[i]);
                const auto sep = separates_text(nv);
                out << "(" << i + 1 << ") " << blocks_text(tri, v.surfaces[i]) << "  -- "
                    << report_text(analyze(tri, sk, nv)) << ", "
                    << (sep ? (*sep ? "separating" : "not separating") : "separation undefined") << "\n";
            }
            if (v.witness) out << "witness: " << blocks_text(tri, v.witness->coords) << "\n";
        }
    }
    if (v.answer == Answer::Unknown) {
        err << "error: enumeration did not finish, no verdict: " << v.diagnostic << "\n";
        return 3;
    }
    return 0;
}

int cmd_split_check(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const Triangulation tri = load_triangulation(c.input);
    if (!c.link) throw InputError("split-check needs --link");
    const LinkSpec link = io::parse_link(io::read_file(*c.link), tri);
    const Verdict v = split_link_check(tri, link, enumeration_options(c));
    return print_verdict(c, "split-check", tri, link, v, out, err);
}

int cmd_unknot(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const Triangulation tri = load_triangulation(c.input);
    if (!c.link) throw InputError("unknot needs --link (knot first, pushoff cycle second)");
    const LinkSpec link = io::parse_link(io::read_file(*c.link), tri);
    if (link.components.size() != 2) throw InputError("unknot: the link file must list the knot and its pushoff");
    const auto* pushoff = std::get_if<EdgeCycle>(&link.components[1]);
    if (!pushoff) throw InputError("unknot: the second component (the pushoff) must be an edge cycle");

    PushoffEvidence evidence;
    std::optional<Triangulation> ext;
    evidence.waived = c.waivePushoffCheck;
    if (c.exterior && !c.waivePushoffCheck) {
        if (!c.exteriorCycle) throw InputError("unknot: --exterior needs --exterior-cycle");
        ext = load_triangulation(*c.exterior);
        evidence.homologyTriangulation = &*ext;
        evidence.homologyCycle = io::parse_cycle(io::read_file(*c.exteriorCycle), *ext);
        evidence.mode = c.strict ? HomologyMode::Strict : HomologyMode::Lenient;
    }
    if (evidence.waived) err << "warning: pushoff homology check waived\n";
    const Verdict v = unknot_via_pushoff(tri, link.components[0], *pushoff, evidence, enumeration_options(c));
    return print_verdict(c, "unknot", tri, link, v, out, err);
}

int cmd_homology(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const Triangulation tri = load_triangulation(c.input);
    require_valid(tri);
    const ChainComplex cc = chain_complex(tri);
    const H1Summary h = h1(cc, c.strict ? HomologyMode::Strict : HomologyMode::Lenient);
    for (const auto& w : h.warnings) err << "warning: " << w << "\n";
    std::optional<HomologyClass> cls;
    if (c.cycle) cls = h.classify(chain_of_cycle(tri, cc.skeleton, io::parse_cycle(io::read_file(*c.cycle), tri)));

    if (c.format == Format::Json) {
        Json doc{{"command", "homology"}, {"h1", h.describe()}, {"freeRank", h.freeRank}, {"torsion", to_strings(h.torsion)},
                 {"warnings", h.warnings}};
        if (cls) doc["cycle"] = Json{{"free", to_strings(cls->free)}, {"torsion", to_strings(cls->torsion)}, {"null", cls->is_null()}};
        out << io::dump(doc);
    } else if (c.format == Format::Tsv) {
        out << h.describe() << "\t" << h.freeRank;
        for (const auto& t : h.torsion) out << "\t" << t.str();
        out << "\n";
    } else {
        out << "H1 = " << h.describe();
        if (cls) out << "; cycle class = " << class_text(h, *cls) << (cls->is_null() ? " (valid 0-pushoff)" : " (not null-homologous)");
        out << "\n";
    }
    return 0;
}

int cmd_curve2d_connect(const RunConfig& c, std::ostream& out) {
    const SurfaceTriangulation surf = io::parse_surface(io::read_file(c.input));
    if (const auto bad = validate(surf); !bad.empty()) throw InputError(bad.front());
    const EdgeSpot p = parse_edge_spot(surf, c.edgeP), q = parse_edge_spot(surf, c.edgeQ);
    const ConnectResult r = connect_boundary_points(surf, p, q, enumeration_options(c));
    if (c.format == Format::Json) {
        Json doc{{"command", "curve2d connect"}, {"connected", r.connected}, {"fundamentalCount", r.fundamentalCount}};
        doc["witness"] = r.witness ? Json(r.witness->coords) : Json(nullptr);
        out << io::dump(doc);
    } else if (c.format == Format::Tsv) {
        out << (r.connected ? "connected" : "disconnected") << "\t" << r.fundamentalCount << "\n";
    } else {
        out << (r.connected ? "connected" : "not connected") << "\n";
        if (r.witness) {
            out << "witness arcs:";
            for (auto x : r.witness->coords) out << " " << x;
            out << "\n";
        }
    }
    return 0;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path.string());
    f << text;
    if (!f) throw InputError("cannot write " + path.string());
}

int cmd_emit_fixtures(const RunConfig& c, std::ostream& out) {
    const std::filesystem::path dir(c.input);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw InputError("cannot create " + dir.string() + ": " + ec.message());

    std::vector<std::string> written;
    auto emit = [&](const std::string& name, const Json& doc) {
        write_file(dir / name, io::dump(doc));
        written.push_back(name);
    };
    const auto closed = fixtures::fig8_closed();
    const auto exterior = fixtures::fig8_exterior();
    const auto calib = fixtures::fig8_quad_calibration();
    const char* quadNames[] = {"q01", "q02", "q03"};

    Json closedDoc = io::triangulation_json(closed);
    closedDoc["metadata"] = Json{{"quadCalibration", {{"5", quadNames[calib[0]]}, {"6", quadNames[calib[1]]}, {"7", quadNames[calib[2]]}}},
                                 {"coordinateOrder", "t0 t1 t2 t3 q01 q02 q03"}};
    emit("fig8_10tet.json", io::triangulation_json(exterior));
    emit("fig8_12tet.json", closedDoc);
    emit("fig8_link.json", io::link_json(fixtures::fig8_link(), closed));
    emit("b1star_13.json", io::cycle_json(fixtures::fig8_pushoff(), exterior));
    emit("single_tet.json", io::triangulation_json(fixtures::single_tetrahedron()));
    emit("solid_torus.json", io::triangulation_json(fixtures::solid_torus()));
    emit("square_surface.json", io::surface_json(fixtures::square_surface()));
    const auto disc = fixtures::fig8_disconnected();
    emit("fig8_disconnected.json", io::triangulation_json(disc));
    emit("fig8_disconnected_link.json", io::link_json(fixtures::fig8_disconnected_link(), disc));

    if (c.format == Format::Json) out << io::dump(Json{{"command", "emit-fixtures"}, {"written", written}});
    else
        for (const auto& w : written) out << (dir / w).string() << "\n";
    return 0;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        if (c.maxCandidates == 0 || c.timeBudget.count() <= 0) throw InputError("resource caps must be positive");
        switch (c.command) {
            case Command::Validate: return cmd_validate(c, out, err);
            case Command::Skeleton: return cmd_skeleton(c, out);
            case Command::Fundamental: return cmd_fundamental(c, out);
            case Command::SplitCheck: return cmd_split_check(c, out, err);
            case Command::Unknot: return cmd_unknot(c, out, err);
            case Command::Homology: return cmd_homology(c, out, err);
            case Command::Curve2dConnect: return cmd_curve2d_connect(c, out);
            case Command::EmitFixtures: return cmd_emit_fixtures(c, out);
        }
    } catch (const ResourceLimitError& e) {
        err << "error: resource cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
    RunConfig c;

    CLI::App app{"Normal surface tools: fundamental surfaces, split-link and unknot checks, homology"};
    app.require_subcommand(1);
    bool json = false;
    std::string format = "human";
    std::uint64_t timeBudgetMs = static_cast<std::uint64_t>(c.timeBudget.count());
    app.add_flag("--json", json, "Machine-readable output (same as --format json)");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json", "tsv"}));
    app.add_option("--max-candidates", c.maxCandidates, "Candidate cap for enumeration")->envname("NORMALSURF_MAX_CANDIDATES");
    app.add_option("--time-budget-ms", timeBudgetMs, "Wall-clock cap for enumeration")->envname("NORMALSURF_TIME_BUDGET_MS");

    auto* validate = app.add_subcommand("validate", "Check the gluing invariants");
    validate->add_option("triangulation", c.input)->required();

    auto* skeleton = app.add_subcommand("skeleton", "Vertex, edge and face classes");
    skeleton->add_option("triangulation", c.input)->required();

    auto* fundamental = app.add_subcommand("fundamental", "Fundamental normal surfaces");
    fundamental->add_option("triangulation", c.input)->required();
    fundamental->add_option("--link", c.link, "Only surfaces missing this link");
    fundamental->add_flag("--all", c.allFundamental, "Whole Hilbert basis, including inadmissible members");
    fundamental->add_flag("--completion", c.completion, "Use the completion engine");

    auto* split = app.add_subcommand("split-check", "Decide whether a two-component link is split");
    split->add_option("triangulation", c.input)->required();
    split->add_option("--link", c.link)->required();
    split->add_flag("--completion", c.completion, "Use the completion engine");

    auto* unknot = app.add_subcommand("unknot", "Decide whether a knot is trivial from its 0-pushoff");
    unknot->add_option("triangulation", c.input)->required();
    unknot->add_option("--link", c.link, "Knot, then pushoff edge cycle")->required();
    unknot->add_option("--exterior", c.exterior, "Triangulation to verify the pushoff in");
    unknot->add_option("--exterior-cycle", c.exteriorCycle, "The pushoff as a cycle of --exterior");
    unknot->add_flag("--waive-pushoff-check", c.waivePushoffCheck, "Skip the homology check");
    unknot->add_flag("--strict", c.strict, "Reject non-manifold vertices when verifying");

    auto* homology = app.add_subcommand("homology", "First homology, and the class of a cycle");
    homology->add_option("triangulation", c.input)->required();
    homology->add_option("--cycle", c.cycle, "Cycle file to classify");
    homology->add_flag("--strict", c.strict, "Reject non-manifold vertices");

    auto* curve2d = app.add_subcommand("curve2d", "Normal curves on surfaces");
    curve2d->require_subcommand(1);
    auto* connect = curve2d->add_subcommand("connect", "Do two boundary edges share a component");
    connect->add_option("surface", c.input)->required();
    connect->add_option("--p", c.edgeP, "Boundary edge, name:ab")->required();
    connect->add_option("--q", c.edgeQ, "Boundary edge, name:ab")->required();

    auto* emit = app.add_subcommand("emit-fixtures", "Write the bundled fixtures as JSON");
    emit->add_option("directory", c.input)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    c.timeBudget = std::chrono::milliseconds(timeBudgetMs);
    c.format = json ? Format::Json : format == "json" ? Format::Json : format == "tsv" ? Format::Tsv : Format::Human;
    if (*validate) c.command = Command::Validate;
    else if (*skeleton) c.command = Command::Skeleton;
    else if (*fundamental) c.command = Command::Fundamental;
    else if (*split) c.command = Command::SplitCheck;
    else if (*unknot) c.command = Command::Unknot;
    else if (*homology) c.command = Command::Homology;
    else if (*connect) c.command = Command::Curve2dConnect;
    else c.command = Command::EmitFixtures;
    return run(c, out, err);
}

}  // namespace normalsurf::cli
