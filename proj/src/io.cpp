#include "normalsurf/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "normalsurf/error.hpp"

namespace normalsurf::io {

namespace {

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw SyntaxError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) throw InputError(where + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw InputError(where + ": missing \"" + key + "\"");
    return *it;
}

std::string as_string(const Json& j, const std::string& where) {
    if (!j.is_string()) throw InputError(where + ": expected a string");
    return j.get<std::string>();
}

int as_label(const Json& j, int maxLabel, const std::string& where) {
    if (!j.is_number_integer()) throw InputError(where + ": expected an integer vertex label");
    const auto v = j.get<long long>();
    if (v < 0 || v > maxLabel) throw InputError(where + ": vertex label " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
}

template <std::size_t N>
std::array<int, N> labels(const Json& j, int maxLabel, const std::string& where) {
    if (!j.is_array() || j.size() != N) throw InputError(where + ": expected " + std::to_string(N) + " vertex labels");
    std::array<int, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = as_label(j[i], maxLabel, where);
    return out;
}

std::vector<std::string> names_list(const Json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array of names");
    std::vector<std::string> out;
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
        auto n = as_string(j[i], where + "[" + std::to_string(i) + "]");
        if (!seen.emplace(n, i).second) throw InputError(where + ": duplicate name \"" + n + "\"");
        out.push_back(std::move(n));
    }
    return out;
}

template <class Complex>
std::size_t lookup(const Complex& c, const std::string& name, const std::string& where) {
    auto idx = c.index_of(name);
    if (!idx) throw InputError(where + ": unknown name \"" + name + "\"");
    return *idx;
}

std::string spot_label(const std::string& tet, const auto& verts) {
    std::string s = tet + "(";
    for (int v : verts) s += std::to_string(v);
    return s + ")";
}

EdgeCycle cycle_from(const Json& arr, const Triangulation& tri, const std::string& where) {
    if (!arr.is_array()) throw InputError(where + ": expected an array of edges");
    EdgeCycle c;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string w = where + "[" + std::to_string(i) + "]";
        const auto tet = lookup(tri, as_string(field(arr[i], "tet", w), w), w);
        const auto e = labels<2>(field(arr[i], "edge", w), 3, w);
        if (e[0] == e[1]) throw InputError(w + ": edge endpoints must differ");
        c.edges.push_back(EdgeRef{tet, e[0], e[1]});
    }
    return c;
}

Json cycle_array(const EdgeCycle& c, const Triangulation& tri) {
    Json arr = Json::array();
    for (const auto& e : c.edges) arr.push_back(Json{{"tet", tri.name(e.tet)}, {"edge", {e.from, e.to}}});
    return arr;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Triangulation parse_triangulation(std::string_view text) {
    const Json doc = parse_json(text);
    Triangulation tri(names_list(field(doc, "tetrahedra", "triangulation"), "tetrahedra"));
    const Json& gl = field(doc, "gluings", "triangulation");
    if (!gl.is_array()) throw InputError("gluings: expected an array");

    // Who set each face slot: the entry index and whether it was inferred.
    std::map<std::pair<std::size_t, int>, std::pair<std::size_t, bool>> owner;
    for (std::size_t i = 0; i < gl.size(); ++i) {
        const std::string w = "gluings[" + std::to_string(i) + "]";
        const auto& g = gl[i];
        const std::string fromName = as_string(field(g, "tet", w), w);
        const FaceSpot from{lookup(tri, fromName, w), labels<3>(field(g, "face", w), 3, w)};
        const Json& to = field(g, "to", w);
        const std::string toName = as_string(field(to, "tet", w + ".to"), w + ".to");
        const FaceSpot dst{lookup(tri, toName, w + ".to"), labels<3>(field(to, "verts", w + ".to"), 3, w + ".to")};
        const std::string label = w + " " + spot_label(fromName, from.verts) + " ~ " + spot_label(toName, dst.verts);

        Triangulation probe(tri.names());
        probe.set_gluing(from, dst);  // validates the labels
        const auto expect = probe.target(from.tet, from.omitted());
        const auto key = std::make_pair(from.tet, from.omitted());
        const auto rkey = std::make_pair(dst.tet, dst.omitted());

        if (const auto& cur = tri.target(from.tet, from.omitted())) {
            const auto [by, inferred] = owner.at(key);
            if (!inferred) throw InputError(label + ": face already glued by gluings[" + std::to_string(by) + "]");
            if (*cur != *expect)
                throw InputError(label + ": conflicts with the reciprocal of gluings[" + std::to_string(by) + "]");
            owner[key] = {i, false};
            continue;
        }
        tri.set_gluing(from, dst);
        owner[key] = {i, false};
        if (key == rkey) continue;  // a face glued to itself; validate() reports it
        if (tri.target(dst.tet, dst.omitted())) {
            const auto [by, inferred] = owner.at(rkey);
            throw InputError(label + ": target face is already glued by gluings[" + std::to_string(by) + "]" +
                             (inferred ? " (as its reciprocal)" : ""));
        }
        tri.set_gluing(dst, from);
        owner[rkey] = {i, true};
    }
    return tri;
}

Json triangulation_json(const Triangulation& tri) {
    Json gl = Json::array();
    for (std::size_t t = 0; t < tri.size(); ++t)
        for (int d = 0; d < 4; ++d) {
            const auto& g = tri.target(t, d);
            if (!g) continue;
            const int dt = g->perm[d];
            if (std::make_pair(g->tet, dt) < std::make_pair(t, d)) continue;
            const auto fv = face_vertices(d);
            gl.push_back(Json{{"tet", tri.name(t)},
                              {"face", {fv[0], fv[1], fv[2]}},
                              {"to", {{"tet", tri.name(g->tet)}, {"verts", {g->perm[fv[0]], g->perm[fv[1]], g->perm[fv[2]]}}}}});
        }
    return Json{{"tetrahedra", tri.names()}, {"gluings", gl}};
}

LinkSpec parse_link(std::string_view text, const Triangulation& tri) {
    const Json doc = parse_json(text);
    const Json& comps = field(doc, "components", "link");
    if (!comps.is_array()) throw InputError("components: expected an array");
    LinkSpec link;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string w = "components[" + std::to_string(i) + "]";
        const auto& c = comps[i];
        if (c.is_object() && c.contains("edgeCycle")) {
            link.components.emplace_back(cycle_from(c["edgeCycle"], tri, w + ".edgeCycle"));
        } else if (c.is_object() && c.contains("idealVertex")) {
            const auto& v = c["idealVertex"];
            const std::string vw = w + ".idealVertex";
            const auto tet = lookup(tri, as_string(field(v, "tet", vw), vw), vw);
            link.components.emplace_back(IdealVertex{tet, as_label(field(v, "vertex", vw), 3, vw)});
        } else {
            throw InputError(w + ": expected \"edgeCycle\" or \"idealVertex\"");
        }
    }
    return link;
}

Json link_json(const LinkSpec& link, const Triangulation& tri) {
    Json comps = Json::array();
    for (const auto& c : link.components) {
        if (const auto* v = std::get_if<IdealVertex>(&c))
            comps.push_back(Json{{"idealVertex", {{"tet", tri.name(v->tet)}, {"vertex", v->vertex}}}});
        else
            comps.push_back(Json{{"edgeCycle", cycle_array(std::get<EdgeCycle>(c), tri)}});
    }
    return Json{{"components", comps}};
}

EdgeCycle parse_cycle(std::string_view text, const Triangulation& tri) {
    const Json doc = parse_json(text);
    return cycle_from(field(doc, "edgeCycle", "cycle"), tri, "edgeCycle");
}

Json cycle_json(const EdgeCycle& cycle, const Triangulation& tri) { return Json{{"edgeCycle", cycle_array(cycle, tri)}}; }

SurfaceTriangulation parse_surface(std::string_view text) {
    const Json doc = parse_json(text);
    SurfaceTriangulation surf(names_list(field(doc, "triangles", "surface"), "triangles"));
    const Json& gl = field(doc, "gluings", "surface");
    if (!gl.is_array()) throw InputError("gluings: expected an array");
    for (std::size_t i = 0; i < gl.size(); ++i) {
        const std::string w = "gluings[" + std::to_string(i) + "]";
        const auto& g = gl[i];
        const std::string fromName = as_string(field(g, "tri", w), w);
        const EdgeSpot from{lookup(surf, fromName, w), labels<2>(field(g, "face", w), 2, w)};
        const Json& to = field(g, "to", w);
        const std::string toName = as_string(field(to, "tri", w + ".to"), w + ".to");
        const EdgeSpot dst{lookup(surf, toName, w + ".to"), labels<2>(field(to, "verts", w + ".to"), 2, w + ".to")};
        const std::string label = w + " " + spot_label(fromName, from.verts) + " ~ " + spot_label(toName, dst.verts);
        if (from.verts[0] == from.verts[1] || dst.verts[0] == dst.verts[1])
            throw InputError(label + ": edge labels must be two distinct vertices");

        SurfaceTriangulation probe(surf.names());
        probe.set_gluing(from, dst);
        const auto expect = probe.target(from.tri, from.omitted());
        if (const auto& cur = surf.target(from.tri, from.omitted())) {
            if (*cur != *expect) throw InputError(label + ": conflicts with an earlier gluing");
            continue;
        }
        surf.set_gluing(from, dst);
        if (from.tri == dst.tri && from.omitted() == dst.omitted()) continue;
        if (surf.target(dst.tri, dst.omitted())) throw InputError(label + ": target edge is already glued");
        surf.set_gluing(dst, from);
    }
    return surf;
}

Json surface_json(const SurfaceTriangulation& surf) {
    Json gl = Json::array();
    for (std::size_t t = 0; t < surf.size(); ++t)
        for (int w = 0; w < 3; ++w) {
            const auto& g = surf.target(t, w);
            if (!g) continue;
            const int wt = g->perm[static_cast<std::size_t>(w)];
            if (std::make_pair(g->tri, wt) < std::make_pair(t, w)) continue;
            const int a = w == 0 ? 1 : 0, b = w == 2 ? 1 : 2;
            gl.push_back(Json{{"tri", surf.name(t)},
                              {"face", {a, b}},
                              {"to", {{"tri", surf.name(g->tri)},
                                      {"verts", {g->perm[static_cast<std::size_t>(a)], g->perm[static_cast<std::size_t>(b)]}}}}});
        }
    return Json{{"triangles", surf.names()}, {"gluings", gl}};
}

Json vector_json(const Triangulation& tri, const CoordVector& v) {
    Json blocks = Json::object();
    for (std::size_t t = 0; t < tri.size(); ++t) {
        Json b = Json::array();
        for (std::size_t k = 0; k < kBlock; ++k) b.push_back(v.at(kBlock * t + k));
        blocks[tri.name(t)] = b;
    }
    return Json{{"coords", v}, {"blocks", blocks}};
}

}  // namespace normalsurf::io
