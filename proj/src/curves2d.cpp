#include "normalsurf/curves2d.hpp"

#include <algorithm>

#include "normalsurf/error.hpp"
#include "union_find.hpp"

namespace normalsurf {

namespace {

std::array<int, 2> edge_ends(int omitted) {
    std::array<int, 2> out{};
    int k = 0;
    for (int v = 0; v < 3; ++v)
        if (v != omitted) out[static_cast<std::size_t>(k++)] = v;
    return out;
}

bool is_pair(const std::array<int, 2>& v) { return v[0] != v[1] && v[0] >= 0 && v[0] < 3 && v[1] >= 0 && v[1] < 3; }

std::string spot_name(const SurfaceTriangulation& s, const EdgeSpot& e) {
    return (e.tri < s.size() ? s.name(e.tri) : "#" + std::to_string(e.tri)) + "(" + static_cast<char>('0' + e.verts[0]) +
           static_cast<char>('0' + e.verts[1]) + ")";
}

}  // namespace

SurfaceTriangulation::SurfaceTriangulation(std::vector<std::string> names)
    : names_(std::move(names)), edges_(names_.size()) {}

std::optional<std::size_t> SurfaceTriangulation::index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

void SurfaceTriangulation::set_gluing(const EdgeSpot& from, const EdgeSpot& to) {
    if (from.tri >= size() || to.tri >= size()) throw InputError("edge gluing refers to a triangle out of range");
    if (!is_pair(from.verts) || !is_pair(to.verts)) throw InputError("edge labels must be two distinct vertices in 0..2");
    auto& slot = edges_[from.tri][static_cast<std::size_t>(from.omitted())];
    if (slot) throw InputError("duplicate gluing for edge " + spot_name(*this, from));
    EdgeTarget t{to.tri, {}};
    t.perm[static_cast<std::size_t>(from.verts[0])] = to.verts[0];
    t.perm[static_cast<std::size_t>(from.verts[1])] = to.verts[1];
    t.perm[static_cast<std::size_t>(from.omitted())] = to.omitted();
    slot = t;
}

void SurfaceTriangulation::glue(const EdgeSpot& from, const EdgeSpot& to) {
    set_gluing(from, to);
    set_gluing(to, from);
}

std::vector<std::string> validate(const SurfaceTriangulation& surf) {
    std::vector<std::string> out;
    for (std::size_t t = 0; t < surf.size(); ++t)
        for (int w = 0; w < 3; ++w) {
            const auto& g = surf.target(t, w);
            if (!g) continue;
            const auto ends = edge_ends(w);
            const EdgeSpot src{t, ends};
            const EdgeSpot dst{g->tri, {g->perm[static_cast<std::size_t>(ends[0])], g->perm[static_cast<std::size_t>(ends[1])]}};
            const int wt = g->perm[static_cast<std::size_t>(w)];
            if (g->tri == t && wt == w) {
                out.push_back("edge " + spot_name(surf, src) + " is glued to itself");
                continue;
            }
            const auto& back = surf.target(g->tri, wt);
            bool inverse = back && back->tri == t;
            for (int v = 0; v < 3 && inverse; ++v)
                inverse = back->perm[static_cast<std::size_t>(g->perm[static_cast<std::size_t>(v)])] == v;
            if (!inverse) out.push_back("gluing " + spot_name(surf, src) + " -> " + spot_name(surf, dst) + " is not reciprocated");
        }
    return out;
}

MatchingSystem build_matching_system_2d(const SurfaceTriangulation& surf) {
    if (const auto bad = validate(surf); !bad.empty()) throw PreconditionError("invalid surface: " + bad.front());
    MatchingSystem sys;
    sys.variableCount = 3 * surf.size();
    for (std::size_t t = 0; t < surf.size(); ++t)
        for (int w = 0; w < 3; ++w) {
            const auto& g = surf.target(t, w);
            if (!g) continue;
            const int wt = g->perm[static_cast<std::size_t>(w)];
            if (g->tri < t || (g->tri == t && wt < w)) continue;  // emit once per edge pair
            const auto [u, v] = edge_ends(w);
            sys.equations.push_back({arc_var(t, u), arc_var(t, v), arc_var(g->tri, g->perm[static_cast<std::size_t>(u)]),
                                     arc_var(g->tri, g->perm[static_cast<std::size_t>(v)])});
        }
    return sys;
}

CurveVector curve_sum(const CurveVector& a, const CurveVector& b) {
    if (a.coords.size() != b.coords.size()) throw PreconditionError("curve_sum: length mismatch");
    CurveVector out(a.coords);
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

CurveReport analyze_curve(const SurfaceTriangulation& surf, const CurveVector& v) {
    const MatchingSystem sys = build_matching_system_2d(surf);
    if (!is_solution(sys, v.coords)) throw PreconditionError("analyze_curve: vector is not a normal curve");

    std::vector<std::size_t> base(v.coords.size() + 1, 0);
    for (std::size_t i = 0; i < v.coords.size(); ++i) base[i + 1] = base[i] + static_cast<std::size_t>(v.coords[i]);
    detail::UnionFind arcs(base.back());
    auto arc = [&](std::size_t tri, int type, Coord depth) { return base[arc_var(tri, type)] + static_cast<std::size_t>(depth - 1); };
    // Arc crossing position p (1-based, counted from vertex `from`) of the edge with ends from/other.
    auto at = [&](std::size_t tri, int from, int other, Coord p) {
        const Coord nFrom = v.arcs(tri, from);
        const Coord total = nFrom + v.arcs(tri, other);
        return p <= nFrom ? arc(tri, from, p) : arc(tri, other, total + 1 - p);
    };

    CurveReport report;
    for (std::size_t t = 0; t < surf.size(); ++t)
        for (int w = 0; w < 3; ++w) {
            const auto& g = surf.target(t, w);
            const auto [a, b] = edge_ends(w);
            const Coord crossings = v.arcs(t, a) + v.arcs(t, b);
            if (!g) {
                report.edgeWeights.push_back(crossings);
                continue;
            }
            const int wt = g->perm[static_cast<std::size_t>(w)];
            if (g->tri < t || (g->tri == t && wt < w)) continue;
            report.edgeWeights.push_back(crossings);
            const int ga = g->perm[static_cast<std::size_t>(a)];
            const int gb = g->perm[static_cast<std::size_t>(b)];
            for (Coord p = 1; p <= crossings; ++p) arcs.unite(at(t, a, b, p), at(g->tri, ga, gb, p));
        }
    for (Coord w : report.edgeWeights) report.weight += w;
    std::size_t count = 0;
    arcs.labels(&count);
    report.components = count;
    return report;
}

ConnectResult connect_boundary_points(const SurfaceTriangulation& surf, const EdgeSpot& eP, const EdgeSpot& eQ,
                                      const EnumerationOptions& opts) {
    for (const auto* e : {&eP, &eQ}) {
        if (e->tri >= surf.size() || !is_pair(e->verts)) throw InputError("bad boundary edge reference");
        if (!surf.is_boundary(e->tri, e->omitted())) throw InputError("edge " + spot_name(surf, *e) + " is not a boundary edge");
    }
    ConnectResult out;
    if (eP.tri == eQ.tri && eP.omitted() == eQ.omitted()) {
        out.connected = true;
        return out;
    }
    const MatchingSystem base = build_matching_system_2d(surf);
    LinearSystem sys = to_linear_system(base);
    const std::size_t s = base.variableCount;  // homogenizing variable: endpoints on eP = endpoints on eQ = s
    sys.variableCount = s + 1;
    for (std::size_t t = 0; t < surf.size(); ++t)
        for (int w = 0; w < 3; ++w) {
            if (!surf.is_boundary(t, w)) continue;
            const auto [a, b] = edge_ends(w);
            std::vector<LinearTerm> row{{arc_var(t, a), 1}, {arc_var(t, b), 1}};
            const bool marked = (t == eP.tri && w == eP.omitted()) || (t == eQ.tri && w == eQ.omitted());
            if (marked) row.push_back({s, -1});
            sys.rows.push_back(std::move(row));
        }
    const FundamentalSet fs = enumerate_fundamental(sys, opts);
    out.enumerated = true;
    out.fundamentalCount = fs.size();
    for (const auto& vec : fs.vectors) {
        if (vec[s] != 1) continue;
        out.connected = true;
        out.witness = CurveVector(CoordVector(vec.begin(), vec.begin() + static_cast<std::ptrdiff_t>(s)));
        break;
    }
    return out;
}

}  // namespace normalsurf
