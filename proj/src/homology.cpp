#include "normalsurf/homology.hpp"

#include <algorithm>

#include "normalsurf/error.hpp"

namespace normalsurf {

namespace {

IntMatrix identity(std::size_t n) {
    IntMatrix out(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

BigInt abs_of(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

/// Row and column operations on A, mirrored into P (rows), Q (columns) and Q^-1 (rows).
class Reducer {
public:
    explicit Reducer(const IntMatrix& a)
        : a_(a), m_(a.size()), n_(a.empty() ? 0 : a.front().size()), P_(identity(m_)), Q_(identity(n_)), Qinv_(identity(n_)) {}

    SmithForm run() {
        SmithForm out;
        for (std::size_t t = 0; t < std::min(m_, n_); ++t) {
            if (!pivot_min(t)) break;
            for (;;) {
                for (std::size_t i = t + 1; i < m_; ++i)
                    if (a_[i][t] != 0) add_row(i, t, -(a_[i][t] / a_[t][t]));
                for (std::size_t j = t + 1; j < n_; ++j)
                    if (a_[t][j] != 0) add_col(j, t, -(a_[t][j] / a_[t][t]));
                const bool rowClean = std::all_of(a_[t].begin() + static_cast<std::ptrdiff_t>(t) + 1, a_[t].end(),
                                                  [](const BigInt& x) { return x == 0; });
                bool colClean = true;
                for (std::size_t i = t + 1; i < m_; ++i) colClean = colClean && a_[i][t] == 0;
                if (!rowClean || !colClean) {
                    pivot_cross(t);
                    continue;
                }
                // The pivot must divide the rest; fold an offending row in otherwise.
                std::size_t bad = m_;
                for (std::size_t i = t + 1; i < m_ && bad == m_; ++i)
                    for (std::size_t j = t + 1; j < n_; ++j)
                        if (a_[i][j] % a_[t][t] != 0) {
                            bad = i;
                            break;
                        }
                if (bad == m_) break;
                add_row(t, bad, 1);
            }
            if (a_[t][t] < 0) negate_row(t);
            out.diagonal.push_back(a_[t][t]);
        }
        out.P = std::move(P_);
        out.Q = std::move(Q_);
        out.Qinv = std::move(Qinv_);
        return out;
    }

private:
    /// Moves the smallest nonzero entry of the block below and right of (t,t) to (t,t).
    bool pivot_min(std::size_t t) {
        std::size_t bi = m_, bj = n_;
        BigInt best = 0;
        for (std::size_t i = t; i < m_; ++i)
            for (std::size_t j = t; j < n_; ++j)
                if (a_[i][j] != 0 && (bi == m_ || abs_of(a_[i][j]) < best)) {
                    best = abs_of(a_[i][j]);
                    bi = i;
                    bj = j;
                }
        if (bi == m_) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    /// Moves the smallest nonzero entry of row t / column t to (t,t).
    void pivot_cross(std::size_t t) {
        std::size_t bi = t, bj = t;
        BigInt best = abs_of(a_[t][t]);
        for (std::size_t i = t + 1; i < m_; ++i)
            if (a_[i][t] != 0 && abs_of(a_[i][t]) < best) {
                best = abs_of(a_[i][t]);
                bi = i;
                bj = t;
            }
        for (std::size_t j = t + 1; j < n_; ++j)
            if (a_[t][j] != 0 && abs_of(a_[t][j]) < best) {
                best = abs_of(a_[t][j]);
                bi = t;
                bj = j;
            }
        swap_rows(t, bi);
        swap_cols(t, bj);
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(a_[i], a_[j]);
        std::swap(P_[i], P_[j]);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& row : a_) std::swap(row[i], row[j]);
        for (auto& row : Q_) std::swap(row[i], row[j]);
        std::swap(Qinv_[i], Qinv_[j]);
    }
    /// row_dst += k * row_src
    void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
        for (std::size_t j = 0; j < n_; ++j) a_[dst][j] += k * a_[src][j];
        for (std::size_t j = 0; j < m_; ++j) P_[dst][j] += k * P_[src][j];
    }
    /// col_dst += k * col_src; the inverse subtracts k * row_dst from row_src.
    void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
        for (auto& row : a_) row[dst] += k * row[src];
        for (auto& row : Q_) row[dst] += k * row[src];
        for (std::size_t j = 0; j < n_; ++j) Qinv_[src][j] -= k * Qinv_[dst][j];
    }
    void negate_row(std::size_t i) {
        for (auto& x : a_[i]) x = -x;
        for (auto& x : P_[i]) x = -x;
    }

    IntMatrix a_;
    std::size_t m_, n_;
    IntMatrix P_, Q_, Qinv_;
};

std::vector<BigInt> mat_vec(const IntMatrix& m, const std::vector<BigInt>& v) {
    std::vector<BigInt> out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0 && v[j] != 0) out[i] += m[i][j] * v[j];
    return out;
}

BigInt mod_pos(const BigInt& x, const BigInt& d) {
    BigInt r = x % d;
    if (r < 0) r += d;
    return r;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    if (!a.empty())
        for (const auto& row : a)
            if (row.size() != a.front().size()) throw PreconditionError("smith_normal_form: ragged matrix");
    return Reducer(a).run();
}

ChainComplex chain_complex(const Triangulation& tri) {
    ChainComplex cc;
    cc.skeleton = compute_skeleton(tri);
    const Skeleton& sk = cc.skeleton;
    const std::size_t V = sk.vertices.size(), E = sk.edges.size(), F = sk.faces.size();
    cc.boundary1.assign(V, std::vector<BigInt>(E, 0));
    for (std::size_t e = 0; e < E; ++e) {
        cc.boundary1[sk.edges[e].end][e] += 1;
        cc.boundary1[sk.edges[e].start][e] -= 1;
    }
    cc.boundary2.assign(E, std::vector<BigInt>(F, 0));
    for (std::size_t f = 0; f < F; ++f) {
        const auto& m = sk.faces[f].members.front();
        const auto v = face_vertices(m.omitted);
        // d[v0 v1 v2] = [v1 v2] - [v0 v2] + [v0 v1]
        const std::array<std::array<int, 3>, 3> terms{{{v[1], v[2], 1}, {v[0], v[2], -1}, {v[0], v[1], 1}}};
        for (const auto& [a, b, s] : terms) {
            const auto [cls, sign] = sk.oriented_edge(m.tet, a, b);
            cc.boundary2[cls][f] += s * sign;
        }
    }
    for (std::size_t c = 0; c < V; ++c) {
        const auto& vc = sk.vertices[c];
        if (vc.kind == VertexKind::Material) continue;
        const auto& m = vc.members.front();
        cc.warnings.push_back("vertex " + tri.name(m.tet) + "(" + std::to_string(m.vertex) + ") has a link with chi = " +
                              std::to_string(vc.linkEuler) + (vc.boundary ? " (bounded)" : "") +
                              "; homology is that of the complex, not of a manifold with this vertex removed");
    }
    return cc;
}

EdgeChain edge_chain(const Skeleton& sk, std::size_t tet, int a, int b, long multiplicity) {
    EdgeChain out(sk.edges.size(), 0);
    const auto [cls, sign] = sk.oriented_edge(tet, a, b);
    out[cls] += sign * multiplicity;
    return out;
}

EdgeChain chain_of_cycle(const Triangulation& tri, const Skeleton& sk, const EdgeCycle& cycle) {
    const ResolvedComponent rc = resolve_component(tri, sk, cycle);
    EdgeChain out(sk.edges.size(), 0);
    for (const auto& [cls, sign] : rc.edges) out[cls] += sign;
    return out;
}

EdgeChain add_chains(const EdgeChain& a, const EdgeChain& b) {
    if (a.size() != b.size()) throw PreconditionError("add_chains: length mismatch");
    EdgeChain out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

bool HomologyClass::is_null() const {
    return std::all_of(torsion.begin(), torsion.end(), [](const BigInt& x) { return x == 0; }) &&
           std::all_of(free.begin(), free.end(), [](const BigInt& x) { return x == 0; });
}

H1Summary h1(const Triangulation& tri, HomologyMode mode) { return h1(chain_complex(tri), mode); }

H1Summary h1(const ChainComplex& cc, HomologyMode mode) {
    if (mode == HomologyMode::Strict && !cc.warnings.empty()) throw PreconditionError(cc.warnings.front());
    H1Summary out;
    out.warnings = cc.warnings;
    out.boundary1_ = cc.boundary1;
    const std::size_t E = cc.boundary2.size();
    out.edgeCount_ = E;
    const std::size_t F = E == 0 ? 0 : cc.boundary2.front().size();

    // ker d1 is spanned by the columns of Q1 past its rank.
    const SmithForm s1 = smith_normal_form(cc.boundary1.empty() ? IntMatrix{} : cc.boundary1);
    const std::size_t r1 = cc.boundary1.empty() ? 0 : s1.rank();
    const IntMatrix Q1inv = cc.boundary1.empty() ? identity(E) : s1.Qinv;
    const std::size_t k = E - r1;
    out.kernelCoords_.assign(Q1inv.begin() + static_cast<std::ptrdiff_t>(r1), Q1inv.end());

    // Boundaries of faces in kernel coordinates.
    IntMatrix rel(k, std::vector<BigInt>(F, 0));
    for (std::size_t f = 0; f < F; ++f) {
        std::vector<BigInt> col(E);
        for (std::size_t e = 0; e < E; ++e) col[e] = cc.boundary2[e][f];
        const auto w = mat_vec(out.kernelCoords_, col);
        for (std::size_t i = 0; i < k; ++i) rel[i][f] = w[i];
    }
    if (k > 0 && F > 0) {
        const SmithForm s2 = smith_normal_form(rel);
        out.reduce_ = s2.P;
        out.factors_ = s2.diagonal;
    } else {
        out.reduce_ = identity(k);
    }
    for (const auto& d : out.factors_)
        if (d > 1) out.torsion.push_back(d);
    out.freeRank = k - out.factors_.size();
    return out;
}

HomologyClass H1Summary::classify(const EdgeChain& chain) const {
    if (chain.size() != edgeCount_) throw PreconditionError("chain length does not match the edge classes");
    for (const auto& x : mat_vec(boundary1_, chain))
        if (x != 0) throw PreconditionError("chain is not a cycle");
    const auto y = mat_vec(reduce_, mat_vec(kernelCoords_, chain));
    HomologyClass out;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < factors_.size()) {
            if (factors_[i] > 1) out.torsion.push_back(mod_pos(y[i], factors_[i]));
        } else {
            out.free.push_back(y[i]);
        }
    }
    return out;
}

HomologyClass H1Summary::add(const HomologyClass& a, const HomologyClass& b) const {
    if (a.torsion.size() != torsion.size() || b.torsion.size() != torsion.size() || a.free.size() != freeRank ||
        b.free.size() != freeRank)
        throw PreconditionError("homology classes of a different group");
    HomologyClass out;
    for (std::size_t i = 0; i < torsion.size(); ++i) out.torsion.push_back(mod_pos(a.torsion[i] + b.torsion[i], torsion[i]));
    for (std::size_t i = 0; i < freeRank; ++i) out.free.push_back(a.free[i] + b.free[i]);
    return out;
}

std::string H1Summary::describe() const {
    std::vector<std::string> parts;
    if (freeRank == 1) parts.push_back("Z");
    if (freeRank > 1) parts.push_back("Z^" + std::to_string(freeRank));
    for (const auto& d : torsion) parts.push_back("Z/" + d.str());
    if (parts.empty()) return "0";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

bool verify_zero_pushoff(const Triangulation& tri, const EdgeCycle& cycle, HomologyMode mode) {
    const ChainComplex cc = chain_complex(tri);
    return h1(cc, mode).classify(chain_of_cycle(tri, cc.skeleton, cycle)).is_null();
}

}  // namespace normalsurf
