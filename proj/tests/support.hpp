#pragma once

// Generators and independent oracles shared by the unit tests and the acceptance run.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "normalsurf/curves2d.hpp"
#include "normalsurf/hilbert.hpp"
#include "normalsurf/matching.hpp"
#include "normalsurf/triangulation.hpp"

namespace testsupport {

using namespace normalsurf;

/// Random homogeneous system on `n` variables: a mix of v_i + v_j = v_k + v_l
/// rows and general rows with small coefficients of both signs.
inline LinearSystem random_system(std::mt19937& rng, std::size_t n) {
    LinearSystem sys;
    sys.variableCount = n;
    std::uniform_int_distribution<std::size_t> var(0, n - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    const std::size_t rows = 1 + rng() % std::max<std::size_t>(1, n / 2);
    for (std::size_t r = 0; r < rows; ++r) {
        std::map<std::size_t, Coord> acc;
        if (rng() % 2) {
            acc[var(rng)] += 1;
            acc[var(rng)] += 1;
            acc[var(rng)] -= 1;
            acc[var(rng)] -= 1;
        } else {
            const std::size_t terms = 2 + rng() % 3;
            for (std::size_t t = 0; t < terms; ++t) acc[var(rng)] += coef(rng);
            // Make sure both signs occur so the row is not a plain zero pin.
            acc[var(rng)] += 1;
            acc[var(rng)] -= 1;
        }
        std::vector<LinearTerm> row;
        for (auto [v, c] : acc)
            if (c != 0) row.push_back({v, c});
        if (!row.empty()) sys.rows.push_back(row);
    }
    if (rng() % 4 == 0) sys.forcedZeros.insert(var(rng));
    return sys;
}

inline bool satisfies(const LinearSystem& sys, const CoordVector& x) {
    for (auto z : sys.forcedZeros)
        if (x[z] != 0) return false;
    for (const auto& row : sys.rows) {
        Coord s = 0;
        for (const auto& t : row) s += t.coef * x[t.var];
        if (s != 0) return false;
    }
    return true;
}

/// Every solution in the box [0, bound]^n, by plain odometer (no propagation).
inline std::vector<CoordVector> box_solutions(const LinearSystem& sys, Coord bound) {
    std::vector<CoordVector> out;
    CoordVector x(sys.variableCount, 0);
    while (true) {
        if (satisfies(sys, x)) out.push_back(x);
        std::size_t i = 0;
        while (i < x.size() && x[i] == bound) x[i++] = 0;
        if (i == x.size()) break;
        ++x[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool leq(const CoordVector& a, const CoordVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline bool is_zero(const CoordVector& v) {
    return std::all_of(v.begin(), v.end(), [](Coord c) { return c == 0; });
}

/// Nonzero solutions with no other nonzero solution below them.
inline std::vector<CoordVector> minimal_elements(const std::vector<CoordVector>& sols) {
    std::vector<CoordVector> out;
    for (const auto& s : sols) {
        if (is_zero(s)) continue;
        bool minimal = true;
        for (const auto& t : sols)
            if (!is_zero(t) && t != s && leq(t, s)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(s);
    }
    return out;
}

/// Whether `v` is a nonnegative integer combination of `basis`.
inline bool decomposes(const CoordVector& v, const std::vector<CoordVector>& basis,
                       std::set<CoordVector>& known, std::set<CoordVector>& failed) {
    if (is_zero(v) || known.count(v)) return true;
    if (failed.count(v)) return false;
    for (const auto& b : basis) {
        if (!leq(b, v)) continue;
        CoordVector rest(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) rest[i] = v[i] - b[i];
        if (decomposes(rest, basis, known, failed)) {
            known.insert(v);
            return true;
        }
    }
    failed.insert(v);
    return false;
}

/// Random surface triangulation: up to `maxTriangles` triangles, a random
/// subset of edges paired up with random orientations, the rest boundary.
inline SurfaceTriangulation random_surface(std::mt19937& rng, std::size_t maxTriangles) {
    const std::size_t n = 1 + rng() % maxTriangles;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("t" + std::to_string(i));
    SurfaceTriangulation s(names);
    std::vector<std::pair<std::size_t, int>> free;
    for (std::size_t t = 0; t < n; ++t)
        for (int w = 0; w < 3; ++w) free.emplace_back(t, w);
    std::shuffle(free.begin(), free.end(), rng);
    const std::size_t pairs = free.size() / 2 == 0 ? 0 : rng() % (free.size() / 2 + 1);
    auto ends = [](int w) { return std::array<int, 2>{w == 0 ? 1 : 0, w == 2 ? 1 : 2}; };
    for (std::size_t p = 0; p < pairs; ++p) {
        const auto [t1, w1] = free[2 * p];
        const auto [t2, w2] = free[2 * p + 1];
        auto a = ends(w1), b = ends(w2);
        if (rng() % 2) std::swap(b[0], b[1]);
        s.glue({t1, a}, {t2, b});
    }
    return s;
}

/// Triangle-adjacency components: the flood-fill oracle.
inline std::vector<std::size_t> triangle_components(const SurfaceTriangulation& s) {
    std::vector<std::size_t> comp(s.size(), SIZE_MAX);
    std::size_t next = 0;
    for (std::size_t start = 0; start < s.size(); ++start) {
        if (comp[start] != SIZE_MAX) continue;
        std::vector<std::size_t> stack{start};
        comp[start] = next;
        while (!stack.empty()) {
            const std::size_t t = stack.back();
            stack.pop_back();
            for (int w = 0; w < 3; ++w)
                if (const auto& g = s.target(t, w); g && comp[g->tri] == SIZE_MAX) {
                    comp[g->tri] = next;
                    stack.push_back(g->tri);
                }
        }
        ++next;
    }
    return comp;
}

inline std::vector<EdgeSpot> boundary_edges(const SurfaceTriangulation& s) {
    std::vector<EdgeSpot> out;
    for (std::size_t t = 0; t < s.size(); ++t)
        for (int w = 0; w < 3; ++w)
            if (s.is_boundary(t, w)) out.push_back(EdgeSpot{t, {w == 0 ? 1 : 0, w == 2 ? 1 : 2}});
    return out;
}

}  // namespace testsupport
