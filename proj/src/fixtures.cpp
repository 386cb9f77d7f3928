#include "normalsurf/fixtures.hpp"

#include <sstream>

#include "normalsurf/error.hpp"

namespace normalsurf::fixtures {

namespace {

// Face identifications, one row per tetrahedron. Columns are the faces
// (012) (013) (023) (123); an entry "3(320)" glues the column's vertices in
// order to vertices 3, 2, 0 of tetrahedron "3"; "-" marks a boundary face.
struct TableRow {
    const char* tet;
    std::array<const char*, 4> faces;
};

constexpr TableRow kExterior[] = {
    {"p", {"3(320)", "4bar(132)", "9(320)", "p'(320)"}},
    {"p'", {"1(132)", "9(123)", "p(321)", "6bar(032)"}},
    {"1", {"b1*(120)", "b2*(130)", "3(312)", "p'(021)"}},
    {"3", {"c(130)", "6bar(012)", "p(210)", "1(230)"}},
    {"4bar", {"c(021)", "b1*(130)", "6bar(231)", "p(031)"}},
    {"6bar", {"3(013)", "c(023)", "p'(132)", "4bar(302)"}},
    {"9", {"b2*(230)", "c(132)", "p(320)", "p'(013)"}},
    {"c", {"4bar(021)", "3(201)", "6bar(013)", "9(031)"}},
    {"b1*", {"1(201)", "4bar(301)", "b2*(021)", "-"}},
    {"b2*", {"b1*(032)", "1(301)", "9(201)", "-"}},
};

// Rows that close the boundary torus with the cone tetrahedra h1, h2.
constexpr TableRow kCap[] = {
    {"b1*", {"1(201)", "4bar(301)", "b2*(021)", "h1(321)"}},
    {"b2*", {"b1*(032)", "1(301)", "9(201)", "h2(123)"}},
    {"h1", {"h2(012)", "h2(032)", "h2(031)", "b1*(321)"}},
    {"h2", {"h1(012)", "h1(032)", "h1(031)", "b2*(123)"}},
};

constexpr std::array<std::array<int, 3>, 4> kColumns{{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

Triangulation from_rows(const std::vector<TableRow>& rows) {
    std::vector<std::string> names;
    for (const auto& r : rows) names.emplace_back(r.tet);
    Triangulation tri(names);
    for (std::size_t t = 0; t < rows.size(); ++t) {
        for (std::size_t col = 0; col < 4; ++col) {
            const std::string entry = rows[t].faces[col];
            if (entry == "-") continue;
            const auto open = entry.find('(');
            const auto other = tri.index_of(entry.substr(0, open));
            if (!other) throw InternalError("fixture table names unknown tetrahedron " + entry);
            FaceSpot to{*other, {entry[open + 1] - '0', entry[open + 2] - '0', entry[open + 3] - '0'}};
            tri.set_gluing(FaceSpot{t, kColumns[col]}, to);
        }
    }
    return tri;
}

std::vector<TableRow> closed_rows() {
    std::vector<TableRow> rows(std::begin(kExterior), std::end(kExterior));
    for (const auto& cap : kCap) {
        bool replaced = false;
        for (auto& r : rows)
            if (std::string(r.tet) == cap.tet) {
                r = cap;
                replaced = true;
            }
        if (!replaced) rows.push_back(cap);
    }
    return rows;
}

// The vectors of the three fundamental solutions, per tetrahedron.
struct ReferenceBlock {
    const char* tet;
    std::array<Coord, 7> coords;
};

const std::vector<std::vector<ReferenceBlock>> kReference = {
    {{"p", {1, 1, 1, 1, 0, 0, 0}},
     {"p'", {1, 1, 1, 1, 0, 0, 0}},
     {"1", {0, 0, 1, 1, 1, 0, 0}},
     {"4bar", {0, 0, 1, 1, 1, 0, 0}},
     {"3", {0, 0, 1, 1, 1, 0, 0}},
     {"6bar", {0, 0, 1, 1, 1, 0, 0}},
     {"9", {0, 0, 1, 1, 1, 0, 0}},
     {"c", {0, 0, 0, 0, 0, 2, 0}},
     {"b1*", {2, 0, 0, 0, 0, 0, 0}},
     {"b2*", {2, 0, 0, 0, 0, 0, 0}}},
    {{"p", {1, 1, 1, 1, 0, 0, 0}},
     {"p'", {1, 1, 1, 1, 0, 0, 0}},
     {"1", {1, 1, 1, 1, 0, 0, 0}},
     {"4bar", {0, 0, 1, 1, 1, 0, 0}},
     {"3", {0, 0, 1, 1, 1, 0, 0}},
     {"6bar", {0, 0, 1, 1, 1, 0, 0}},
     {"9", {0, 0, 1, 1, 1, 0, 0}},
     {"c", {0, 0, 0, 0, 0, 2, 0}},
     {"b1*", {1, 0, 1, 0, 0, 1, 0}},
     {"b2*", {1, 1, 0, 0, 1, 0, 0}},
     {"h1", {0, 0, 1, 0, 0, 1, 0}},
     {"h2", {0, 1, 0, 0, 1, 0, 0}}},
    {{"h1", {1, 0, 0, 0, 0, 0, 0}}, {"h2", {1, 0, 0, 0, 0, 0, 0}}},
};

// "a:i b:j = c:k d:l" per equation, three per gluing.
struct PrintedRow {
    const char* label;
    std::array<const char*, 3> equations;
};

constexpr PrintedRow kPrinted[] = {
    {"p(012) ~ 3(320)", {"p:1 p:7 = 3:4 3:6", "p:2 p:6 = 3:3 3:7", "p:3 p:5 = 3:1 3:5"}},
    {"p(013) ~ 4bar(132)", {"p:1 p:6 = 4bar:2 4bar:5", "p:2 p:7 = 4bar:4 4bar:7", "p:4 p:5 = 4bar:3 4bar:6"}},
    {"p(023) ~ 9(320)", {"p:1 p:5 = 9:4 9:6", "p:3 p:7 = 9:3 9:7", "p:4 p:6 = 9:1 9:5"}},
    {"p(123) ~ p'(320)", {"p:2 p:5 = p':4 p':6", "p:3 p:6 = p':3 p':7", "p:4 p:7 = p':1 p':5"}},
    {"p'(012) ~ 1(132)", {"p':1 p':7 = 1:2 1:5", "p':2 p':6 = 1:4 1:7", "p':3 p':5 = 1:3 1:6"}},
    {"p'(013) ~ 9(123)", {"p':1 p':6 = 9:2 9:5", "p':2 p':7 = 9:3 9:6", "p':4 p':5 = 9:4 9:7"}},
    {"p'(123) ~ 6bar(032)", {"p:2 p:5 = 6bar:1 6bar:5", "p:3 p:6 = 6bar:4 6bar:6", "p:4 p:7 = 6bar:3 6bar:7"}},
    {"1(012) ~ b1*(120)", {"1:1 1:7 = b1*:2 b1*:6", "1:2 1:6 = b1*:3 b1*:5", "1:3 1:5 = b1*:1 b1*:7"}},
    {"1(013) ~ b2*(130)", {"1:1 1:6 = b2*:2 b2*:7", "1:2 1:7 = b2*:4 b2*:5", "1:4 1:5 = b2*:1 b2*:6"}},
    {"1(023) ~ 3(312)", {"1:1 1:5 = 3:4 3:7", "1:3 1:7 = 3:2 3:5", "1:4 1:6 = 3:3 3:6"}},
    {"3(012) ~ c(130)", {"3:1 3:7 = c:2 c:7", "3:2 3:6 = c:4 c:5", "3:3 3:5 = c:1 c:6"}},
    {"3(013) ~ 6bar(012)", {"3:1 3:6 = 6bar:1 6bar:7", "3:2 3:7 = 6bar:2 6bar:6", "3:4 3:5 = 6bar:3 6bar:5"}},
    {"4bar(012) ~ c(021)", {"4bar:1 4bar:7 = c:1 c:7", "4bar:2 4bar:6 = c:3 c:5", "4bar:3 4bar:5 = c:2 c:6"}},
    {"4bar(013) ~ b1*(130)", {"4bar:1 4bar:6 = b1*:2 b1*:7", "4bar:2 4bar:7 = b1*:4 b1*:5", "4bar:4 4bar:5 = b1*:1 b1*:6"}},
    {"4bar(023) ~ 6bar(231)", {"4bar:1 4bar:5 = 6bar:3 6bar:6", "4bar:3 4bar:7 = 6bar:4 6bar:7", "4bar:4 4bar:6 = 6bar:2 6bar:5"}},
    {"6bar(013) ~ c(023)", {"6bar:1 6bar:6 = c:1 c:5", "6bar:2 6bar:7 = c:3 c:7", "6bar:4 6bar:5 = c:4 c:6"}},
    {"9(012) ~ b2*(230)", {"9:1 9:7 = b2*:3 b2*:7", "9:2 9:6 = b2*:4 b2*:6", "9:3 9:5 = b2*:1 b2*:5"}},
    {"9(013) ~ c(132)", {"9:1 9:6 = c:2 c:5", "9:2 9:7 = c:4 c:7", "9:4 9:5 = c:3 c:6"}},
    {"b1*(023) ~ b2*(021)", {"b1*:1 b1*:5 = b2*:1 b2*:7", "b1*:3 b1*:7 = b2*:3 b2*:5", "b1*:4 b1*:6 = b2*:2 b2*:6"}},
    {"b1*(123) ~ h1(321)", {"b1*:2 b1*:5 = h1:4 h1:7", "b1*:3 b1*:6 = h1:3 h1:6", "b1*:4 b1*:7 = h1:2 h1:5"}},
    {"b2*(123) ~ h2(123)", {"b2*:2 b2*:5 = h2:2 h2:5", "b2*:3 b2*:6 = h2:3 h2:6", "b2*:4 b2*:7 = h2:4 h2:7"}},
    {"h1(130) ~ h2(320)", {"h1:2 h1:7 = h2:4 h2:6", "h1:4 h1:5 = h2:3 h2:7", "h1:1 h1:6 = h2:1 h2:5"}},
    {"h1(023) ~ h2(031)", {"h1:1 h1:5 = h2:1 h2:6", "h1:3 h1:7 = h2:4 h2:5", "h1:4 h1:6 = h2:2 h2:7"}},
    {"h1(012) ~ h2(012)", {"h1:1 h1:7 = h2:1 h2:7", "h1:2 h1:6 = h2:2 h2:6", "h1:3 h1:5 = h2:3 h2:5"}},
};

PrintedTerm parse_term(const std::string& token) {
    const auto colon = token.rfind(':');
    return {token.substr(0, colon), std::stoi(token.substr(colon + 1))};
}

}  // namespace

Triangulation fig8_exterior() { return from_rows({std::begin(kExterior), std::end(kExterior)}); }

Triangulation fig8_closed() { return from_rows(closed_rows()); }

EdgeCycle fig8_pushoff() {
    const auto tri = fig8_closed();
    return EdgeCycle{{EdgeRef{*tri.index_of("b1*"), 1, 3}}};
}

LinkSpec fig8_link() {
    const auto tri = fig8_closed();
    return LinkSpec{{IdealVertex{*tri.index_of("h1"), 0}, fig8_pushoff()}};
}

std::vector<NormalVector> fig8_reference_solutions() {
    const auto tri = fig8_closed();
    std::vector<NormalVector> out;
    for (const auto& blocks : kReference) {
        NormalVector v = NormalVector::zero(tri.size());
        for (const auto& b : blocks) {
            const std::size_t t = *tri.index_of(b.tet);
            for (std::size_t k = 0; k < kBlock; ++k) v.coords[kBlock * t + k] = b.coords[k];
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<PrintedGluing> fig8_printed_equations() {
    std::vector<PrintedGluing> out;
    for (const auto& row : kPrinted) {
        PrintedGluing g{row.label, {}};
        for (const char* text : row.equations) {
            std::istringstream in(text);
            std::string a, b, eq, c, d;
            in >> a >> b >> eq >> c >> d;
            g.equations.push_back({{parse_term(a), parse_term(b), parse_term(c), parse_term(d)}});
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::array<int, 3> fig8_quad_calibration() { return {0, 1, 2}; }

Triangulation single_tetrahedron() { return Triangulation({"t"}); }

Triangulation two_tetrahedra_one_face() {
    Triangulation tri({"A", "B"});
    tri.glue({0, {0, 1, 2}}, {1, {0, 1, 2}});
    return tri;
}

Triangulation doubled_tetrahedron() {
    Triangulation tri({"A", "B"});
    for (int d = 0; d < 4; ++d) {
        const auto fv = face_vertices(d);
        tri.glue({0, fv}, {1, fv});
    }
    return tri;
}

Triangulation fig8_disconnected() {
    Triangulation tri;
    const auto copy = fig8_closed();
    tri.append_disjoint(copy, "#a");
    tri.append_disjoint(copy, "#b");
    return tri;
}

LinkSpec fig8_disconnected_link() {
    const auto tri = fig8_disconnected();
    return LinkSpec{{IdealVertex{*tri.index_of("h1#a"), 0}, EdgeCycle{{EdgeRef{*tri.index_of("b1*#b"), 1, 3}}}}};
}

Triangulation solid_torus() {
    Triangulation tri({"s"});
    tri.glue({0, {1, 2, 3}}, {0, {2, 3, 0}});
    return tri;
}

std::set<std::size_t> solid_torus_longitude_pattern() {
    return {triangle_var(0, 0), triangle_var(0, 1), quad_var(0, 2)};
}

SurfaceTriangulation square_surface() {
    SurfaceTriangulation s({"L", "R"});
    s.glue({0, {0, 2}}, {1, {0, 2}});
    return s;
}

SurfaceTriangulation two_triangles() { return SurfaceTriangulation({"A", "B"}); }

}  // namespace normalsurf::fixtures
