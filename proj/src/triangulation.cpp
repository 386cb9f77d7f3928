#include "normalsurf/triangulation.hpp"

#include <algorithm>
#include <map>

#include "normalsurf/error.hpp"

namespace normalsurf {

namespace {

constexpr std::array<std::array<int, 2>, 6> kEdges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

bool is_face_triple(const std::array<int, 3>& v) {
    for (int x : v)
        if (x < 0 || x > 3) return false;
    return v[0] != v[1] && v[0] != v[2] && v[1] != v[2];
}

int missing_label(const std::array<int, 3>& v) { return 6 - v[0] - v[1] - v[2]; }

}  // namespace

int edge_index(int a, int b) {
    if (a > b) std::swap(a, b);
    for (int e = 0; e < 6; ++e)
        if (kEdges[e][0] == a && kEdges[e][1] == b) return e;
    throw PreconditionError("not a tetrahedron edge: " + std::to_string(a) + std::to_string(b));
}

std::array<int, 2> edge_vertices(int e) { return kEdges.at(static_cast<std::size_t>(e)); }

std::array<int, 3> face_vertices(int omitted) {
    std::array<int, 3> out{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != omitted) out[static_cast<std::size_t>(k++)] = v;
    return out;
}

int FaceSpot::omitted() const { return missing_label(verts); }

Triangulation::Triangulation(std::vector<std::string> names)
    : names_(std::move(names)), faces_(names_.size()) {}

std::optional<std::size_t> Triangulation::index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

void Triangulation::set_gluing(const FaceSpot& from, const FaceSpot& to) {
    if (from.tet >= size() || to.tet >= size()) throw InputError("gluing refers to a tetrahedron index out of range");
    if (!is_face_triple(from.verts) || !is_face_triple(to.verts))
        throw InputError("face labels must be three distinct vertices in 0..3");
    const int dFrom = from.omitted();
    auto& slot = faces_[from.tet][static_cast<std::size_t>(dFrom)];
    if (slot) throw InputError("duplicate gluing for face " + face_name(*this, from));
    std::array<int, 4> img{};
    for (std::size_t i = 0; i < 3; ++i) img[static_cast<std::size_t>(from.verts[i])] = to.verts[i];
    img[static_cast<std::size_t>(dFrom)] = to.omitted();
    slot = FaceTarget{to.tet, Perm4(img[0], img[1], img[2], img[3])};
}

void Triangulation::glue(const FaceSpot& from, const FaceSpot& to) {
    set_gluing(from, to);
    set_gluing(to, from);
}

void Triangulation::unset_gluing(std::size_t tet, int omitted) {
    faces_.at(tet)[static_cast<std::size_t>(omitted)].reset();
}

std::size_t Triangulation::boundary_face_count() const {
    std::size_t n = 0;
    for (const auto& tet : faces_)
        for (const auto& f : tet)
            if (!f) ++n;
    return n;
}

void Triangulation::append_disjoint(const Triangulation& other, std::string_view suffix) {
    const std::size_t offset = size();
    for (const auto& n : other.names_) names_.push_back(n + std::string(suffix));
    for (const auto& tet : other.faces_) {
        auto copy = tet;
        for (auto& f : copy)
            if (f) f->tet += offset;
        faces_.push_back(copy);
    }
}

ValidationReport validate(const Triangulation& tri) {
    ValidationReport report;
    std::map<std::pair<std::size_t, int>, std::vector<std::pair<std::size_t, int>>> preimages;
    for (std::size_t t = 0; t < tri.size(); ++t) {
        for (int d = 0; d < 4; ++d) {
            const auto& g = tri.target(t, d);
            if (!g) continue;
            const auto fv = face_vertices(d);
            const FaceSpot src{t, fv};
            const int dt = g->perm[d];
            preimages[{g->tet, dt}].push_back({t, d});
            if (g->tet == t && dt == d) {
                report.violations.push_back(
                    {ViolationKind::SelfGluing, t, d, "face " + face_name(tri, src) + " is glued to itself"});
                continue;
            }
            const FaceSpot dst{g->tet, {g->perm[fv[0]], g->perm[fv[1]], g->perm[fv[2]]}};
            const auto& back = tri.target(g->tet, dt);
            if (!back || back->tet != t || !(back->perm == g->perm.inverse())) {
                std::string why = back ? "is glued elsewhere" : "is unmapped";
                report.violations.push_back({ViolationKind::NonInvolutive, t, d,
                                             "gluing " + face_name(tri, src) + " -> " + face_name(tri, dst) +
                                                 " is not reciprocated: " + face_name(tri, dst) + " " + why});
            }
        }
    }
    for (const auto& [face, sources] : preimages) {
        if (sources.size() < 2) continue;
        const FaceSpot spot{face.first, face_vertices(face.second)};
        report.violations.push_back({ViolationKind::DuplicateFaceUse, face.first, face.second,
                                     "face " + face_name(tri, spot) + " is the target of " +
                                         std::to_string(sources.size()) + " gluings"});
    }
    return report;
}

void require_valid(const Triangulation& tri) {
    const auto report = validate(tri);
    if (!report.ok()) throw PreconditionError("invalid triangulation: " + report.violations.front().message);
}

std::string face_name(const Triangulation& tri, const FaceSpot& spot) {
    std::string out = spot.tet < tri.size() ? tri.name(spot.tet) : "#" + std::to_string(spot.tet);
    out += '(';
    for (int v : spot.verts) out += static_cast<char>('0' + v);
    out += ')';
    return out;
}

std::string edge_name(const Triangulation& tri, std::size_t tet, int a, int b) {
    return tri.name(tet) + "(" + static_cast<char>('0' + a) + static_cast<char>('0' + b) + ")";
}

}  // namespace normalsurf
