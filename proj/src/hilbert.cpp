#include "normalsurf/hilbert.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "normalsurf/error.hpp"
#include "union_find.hpp"

namespace normalsurf {

namespace {

using SparseRow = std::map<std::size_t, Coord>;

void add_scaled(SparseRow& into, const SparseRow& from, Coord scale) {
    for (const auto& [var, c] : from) {
        auto& slot = into[var];
        slot += scale * c;
        if (slot == 0) into.erase(var);
    }
}

void normalize(SparseRow& row) {
    Coord g = 0;
    for (const auto& [var, c] : row) g = std::gcd(g, c < 0 ? -c : c);
    if (g > 1)
        for (auto& [var, c] : row) c /= g;
}

/// Variable elimination that keeps the solution monoid isomorphic: every
/// eliminated variable is a nonnegative integer combination of the remaining
/// base variables, so expansion maps reduced solutions onto full solutions.
class Reduction {
public:
    Reduction(const LinearSystem& sys, bool admissibleOnly) : sys_(&sys), admissibleOnly_(admissibleOnly) {
        const std::size_t n = sys.variableCount;
        isBase_.assign(n, true);
        expansion_.resize(n);
        for (std::size_t v = 0; v < n; ++v) expansion_[v][v] = 1;
        for (const auto& r : sys.rows) {
            SparseRow row;
            for (const auto& t : r) {
                if (t.var >= n) throw PreconditionError("linear system refers to a variable out of range");
                row[t.var] += t.coef;
            }
            std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
            rows_.push_back(std::move(row));
        }
        for (std::size_t z : sys.forcedZeros)
            if (z < n && isBase_[z]) eliminate(z, {});
        run();
    }

    const std::vector<bool>& is_base() const { return isBase_; }
    const std::vector<SparseRow>& rows() const { return rows_; }
    const std::vector<SparseRow>& expansion() const { return expansion_; }

    /// For each base variable: the (group, variable) pairs its expansion makes nonzero.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> group_touches() const {
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out(isBase_.size());
        for (std::size_t g = 0; g < sys_->exclusiveGroups.size(); ++g)
            for (std::size_t var : sys_->exclusiveGroups[g])
                for (const auto& [base, c] : expansion_[var]) out[base].push_back({g, var});
        return out;
    }

    /// Pins original variables to zero: every base variable they depend on vanishes.
    void pin_zero(const std::vector<std::size_t>& vars) {
        for (std::size_t v : vars) {
            std::vector<std::size_t> bases;
            for (const auto& [b, c] : expansion_[v]) bases.push_back(b);
            for (std::size_t b : bases)
                if (isBase_[b]) eliminate(b, {});
        }
        run();
    }

    /// Variables not identically zero.
    std::vector<bool> live() const {
        std::vector<bool> out(expansion_.size());
        for (std::size_t v = 0; v < out.size(); ++v) out[v] = !expansion_[v].empty();
        return out;
    }

private:
    void eliminate(std::size_t x, const SparseRow& value) {
        isBase_[x] = false;
        for (auto& e : expansion_) {
            auto it = e.find(x);
            if (it == e.end()) continue;
            const Coord c = it->second;
            e.erase(it);
            add_scaled(e, value, c);
        }
        for (auto& row : rows_) {
            auto it = row.find(x);
            if (it == row.end()) continue;
            const Coord c = it->second;
            row.erase(it);
            add_scaled(row, value, c);
            normalize(row);
        }
    }

    bool step() {
        for (auto& row : rows_) {
            if (row.empty()) continue;
            const bool allPos = std::all_of(row.begin(), row.end(), [](const auto& kv) { return kv.second > 0; });
            const bool allNeg = std::all_of(row.begin(), row.end(), [](const auto& kv) { return kv.second < 0; });
            if (allPos || allNeg) {
                std::vector<std::size_t> vars;
                for (const auto& [v, c] : row) vars.push_back(v);
                for (std::size_t v : vars) eliminate(v, {});
                return true;
            }
            // A unit-coefficient variable opposed by every other term is a
            // nonnegative combination of them.
            std::size_t pick = static_cast<std::size_t>(-1);
            for (auto it = row.rbegin(); it != row.rend(); ++it) {
                const auto [v, c] = *it;
                if (c != 1 && c != -1) continue;
                const bool opposed = std::all_of(row.begin(), row.end(),
                                                 [&](const auto& kv) { return kv.first == v || (kv.second > 0) != (c > 0); });
                if (opposed) {
                    pick = v;
                    break;
                }
            }
            if (pick == static_cast<std::size_t>(-1)) continue;
            const Coord c = row.at(pick);
            SparseRow value;
            for (const auto& [v, cv] : row)
                if (v != pick) value[v] = -cv * c;
            row.clear();
            eliminate(pick, value);
            return true;
        }
        if (admissibleOnly_) {
            // A base variable whose own expansion breaks a group can never be
            // nonzero in an admissible solution.
            const auto touches = group_touches();
            for (std::size_t v = 0; v < isBase_.size(); ++v) {
                if (!isBase_[v]) continue;
                std::map<std::size_t, std::size_t> seen;
                for (const auto& [g, var] : touches[v]) {
                    auto [it, inserted] = seen.emplace(g, var);
                    if (!inserted && it->second != var) {
                        eliminate(v, {});
                        return true;
                    }
                }
            }
        }
        return false;
    }

    void run() {
        while (step()) {
        }
        std::erase_if(rows_, [](const SparseRow& r) { return r.empty(); });
    }

    const LinearSystem* sys_;
    bool admissibleOnly_;
    std::vector<bool> isBase_;
    std::vector<SparseRow> expansion_;
    std::vector<SparseRow> rows_;
};

struct VecHash {
    template <class T>
    std::size_t operator()(const std::vector<T>& v) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto x : v) {
            h ^= static_cast<std::uint64_t>(x);
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

class Budget {
public:
    explicit Budget(const EnumerationLimits& limits)
        : limits_(limits), start_(std::chrono::steady_clock::now()) {}

    void charge(std::uint64_t& counter) {
        ++counter;
        if (counter > limits_.maxCandidates)
            throw ResourceLimitError("Hilbert basis search exceeded the candidate cap of " +
                                     std::to_string(limits_.maxCandidates));
        if ((counter & 0xFFF) == 0 && limits_.timeBudget.count() > 0 &&
            std::chrono::steady_clock::now() - start_ > limits_.timeBudget)
            throw ResourceLimitError("Hilbert basis search exceeded the time budget of " +
                                     std::to_string(limits_.timeBudget.count()) + " ms");
    }

private:
    EnumerationLimits limits_;
    std::chrono::steady_clock::time_point start_;
};

/// Completion search of Contejean and Devie for minimal nonzero solutions of
/// A x = 0, x >= 0: grow candidates one unit at a time, only along directions
/// whose image points back towards the origin (<Ax, A e_j> < 0), level by
/// level in total degree, discarding anything above a known solution.
class CompletionSearch {
public:
    using Vec = std::vector<std::int32_t>;

    CompletionSearch(std::vector<std::vector<Coord>> columns, std::size_t rowCount, Budget& budget, std::uint64_t& counter)
        : columns_(std::move(columns)), rows_(rowCount), budget_(budget), counter_(counter) {}

    std::vector<Vec> run() {
        const std::size_t m = columns_.size();
        std::vector<Candidate> level;
        for (std::size_t j = 0; j < m; ++j) {
            Candidate c{Vec(m, 0), columns_[j]};
            c.x[j] = 1;
            budget_.charge(counter_);
            level.push_back(std::move(c));
        }
        while (!level.empty()) {
            for (const auto& c : level)
                if (is_zero(c.ax)) add_solution(c.x);
            std::vector<Candidate> next;
            std::unordered_map<Vec, std::size_t, VecHash> index;
            for (const auto& c : level) {
                if (is_zero(c.ax)) continue;
                for (std::size_t j = 0; j < m; ++j) {
                    if (dot(c.ax, columns_[j]) >= 0) continue;
                    Vec y = c.x;
                    ++y[j];
                    if (index.count(y) || dominated(y)) continue;
                    budget_.charge(counter_);
                    std::vector<Coord> ay = c.ax;
                    for (std::size_t r = 0; r < rows_; ++r) ay[r] += columns_[j][r];
                    index.emplace(y, next.size());
                    next.push_back({std::move(y), std::move(ay)});
                }
            }
            level = std::move(next);
        }
        return solutions_;
    }

private:
    struct Candidate {
        Vec x;
        std::vector<Coord> ax;
    };

    static bool is_zero(const std::vector<Coord>& v) {
        return std::all_of(v.begin(), v.end(), [](Coord c) { return c == 0; });
    }

    Coord dot(const std::vector<Coord>& a, const std::vector<Coord>& b) const {
        Coord s = 0;
        for (std::size_t r = 0; r < rows_; ++r) s += a[r] * b[r];
        return s;
    }

    std::vector<std::uint64_t> mask(const Vec& x) const {
        std::vector<std::uint64_t> out((x.size() + 63) / 64, 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0) out[i / 64] |= std::uint64_t{1} << (i % 64);
        return out;
    }

    void add_solution(const Vec& x) {
        solutions_.push_back(x);
        masks_.push_back(mask(x));
    }

    bool dominated(const Vec& y) const {
        const auto my = mask(y);
        for (std::size_t s = 0; s < solutions_.size(); ++s) {
            bool subset = true;
            for (std::size_t w = 0; w < my.size() && subset; ++w) subset = (masks_[s][w] & ~my[w]) == 0;
            if (!subset) continue;
            const auto& sol = solutions_[s];
            bool le = true;
            for (std::size_t i = 0; i < y.size() && le; ++i) le = sol[i] <= y[i];
            if (le) return true;
        }
        return false;
    }

    std::vector<std::vector<Coord>> columns_;
    std::size_t rows_;
    Budget& budget_;
    std::uint64_t& counter_;
    std::vector<Vec> solutions_;
    std::vector<std::vector<std::uint64_t>> masks_;
};

/// Exclusive-group test on block-local vectors: each local variable lists the
/// (group, original variable) pairs its expansion makes nonzero.
class GroupCheck {
public:
    GroupCheck() = default;
    GroupCheck(std::vector<std::vector<std::pair<std::size_t, std::size_t>>> touches, std::size_t groupCount)
        : touches_(std::move(touches)), groupCount_(groupCount) {}

    template <class V>
    bool operator()(const V& x) const {
        if (groupCount_ == 0) return true;
        std::vector<std::size_t> owner(groupCount_, kNone);
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] == 0) continue;
            for (const auto& [g, var] : touches_[j]) {
                if (owner[g] == kNone)
                    owner[g] = var;
                else if (owner[g] != var)
                    return false;
            }
        }
        return true;
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> touches_;
    std::size_t groupCount_ = 0;
};

/// Hilbert basis by intersecting with one hyperplane at a time. If H generates
/// M, the minimal solutions lambda of sum(lambda_h * (a.h)) = 0 map to a
/// generating set of M /\ {a.x = 0}, whose minimal elements are its Hilbert
/// basis. Minimal lambda are found per coefficient value: a value profile mu
/// (how many generators of each value) is minimal iff every lambda with that
/// profile is. Generators failing `keep` are dropped at every stage; this is
/// sound whenever `keep` is inherited by everything below a kept vector.
class IncrementalSearch {
public:
    using Vec = std::vector<Coord>;

    IncrementalSearch(std::vector<std::vector<Coord>> columns, std::size_t rowCount, Budget& budget, std::uint64_t& counter,
                      GroupCheck keep)
        : columns_(std::move(columns)), rows_(rowCount), budget_(budget), counter_(counter), keep_(std::move(keep)) {}

    std::vector<Vec> run() {
        const std::size_t m = columns_.size();
        std::vector<Vec> gens;
        for (std::size_t j = 0; j < m; ++j) {
            Vec e(m, 0);
            e[j] = 1;
            if (keep_(e)) gens.push_back(std::move(e));
        }
        std::vector<bool> done(rows_, false);
        for (std::size_t step = 0; step < rows_ && !gens.empty(); ++step) {
            // Next row: the one with the fewest positive-negative pairs.
            std::size_t best = rows_;
            double bestCost = 0;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (done[r]) continue;
                double pos = 0, neg = 0;
                for (const auto& g : gens) {
                    const Coord c = value(g, r);
                    pos += c > 0;
                    neg += c < 0;
                }
                if (best == rows_ || pos * neg < bestCost) {
                    best = r;
                    bestCost = pos * neg;
                }
            }
            done[best] = true;
            gens = intersect(gens, best);
        }
        return gens;
    }

private:
    Coord value(const Vec& x, std::size_t r) const {
        Coord s = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x[j] != 0) s += x[j] * columns_[j][r];
        return s;
    }

    /// Minimal nonzero solutions of sum(v * mu_v) = 0 over the given values.
    static std::vector<std::vector<Coord>> minimal_profiles(const std::vector<Coord>& values) {
        const std::size_t k = values.size();
        std::vector<std::vector<Coord>> found;
        std::vector<std::vector<Coord>> level;
        std::set<std::vector<Coord>> seen;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<Coord> mu(k, 0);
            mu[i] = 1;
            level.push_back(mu);
        }
        auto sum = [&](const std::vector<Coord>& mu) {
            Coord s = 0;
            for (std::size_t i = 0; i < k; ++i) s += mu[i] * values[i];
            return s;
        };
        while (!level.empty()) {
            std::vector<std::vector<Coord>> next;
            for (const auto& mu : level) {
                const Coord s = sum(mu);
                if (s == 0) {
                    found.push_back(mu);
                    continue;
                }
                for (std::size_t i = 0; i < k; ++i) {
                    if ((s > 0) == (values[i] > 0)) continue;
                    auto nu = mu;
                    ++nu[i];
                    const bool above = std::any_of(found.begin(), found.end(), [&](const auto& f) {
                        for (std::size_t t = 0; t < k; ++t)
                            if (f[t] > nu[t]) return false;
                        return true;
                    });
                    if (!above && seen.insert(nu).second) next.push_back(std::move(nu));
                }
            }
            level = std::move(next);
        }
        return found;
    }

    std::vector<Vec> intersect(const std::vector<Vec>& gens, std::size_t r) {
        std::vector<Vec> zero;
        std::map<Coord, std::vector<std::size_t>> byValue;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const Coord c = value(gens[g], r);
            if (c == 0)
                zero.push_back(gens[g]);
            else
                byValue[c].push_back(g);
        }
        const bool mixed = !byValue.empty() && byValue.begin()->first < 0 && byValue.rbegin()->first > 0;
        if (!mixed) return zero;

        std::vector<Coord> values;
        std::vector<const std::vector<std::size_t>*> classes;
        for (const auto& [c, members] : byValue) {
            values.push_back(c);
            classes.push_back(&members);
        }
        std::vector<Vec> images;
        std::unordered_set<Vec, VecHash> unique;
        const std::size_t m = columns_.size();
        for (const auto& mu : minimal_profiles(values)) {
            // Every multiset with this profile: per class, a nondecreasing index run.
            std::vector<std::pair<std::size_t, std::size_t>> slots;  // (class, min index)
            for (std::size_t i = 0; i < mu.size(); ++i)
                for (Coord t = 0; t < mu[i]; ++t) slots.push_back({i, 0});
            std::vector<std::size_t> pick(slots.size(), 0);
            Vec acc(m, 0);
            auto rec = [&](auto&& self, std::size_t s) -> void {
                if (s == slots.size()) {
                    budget_.charge(counter_);
                    if (keep_(acc) && unique.insert(acc).second) images.push_back(acc);
                    return;
                }
                const auto& members = *classes[slots[s].first];
                const bool sameClass = s > 0 && slots[s - 1].first == slots[s].first;
                for (std::size_t t = sameClass ? pick[s - 1] : 0; t < members.size(); ++t) {
                    pick[s] = t;
                    const Vec& g = gens[members[t]];
                    for (std::size_t j = 0; j < m; ++j) acc[j] += g[j];
                    self(self, s + 1);
                    for (std::size_t j = 0; j < m; ++j) acc[j] -= g[j];
                }
            };
            rec(rec, 0);
        }

        // Keep the images not above another element; the zero-valued
        // generators stay minimal.
        auto degree = [](const Vec& x) { return std::accumulate(x.begin(), x.end(), Coord{0}); };
        std::sort(images.begin(), images.end(), [&](const Vec& a, const Vec& b) { return degree(a) < degree(b); });
        std::vector<Vec> out = zero;
        std::vector<std::vector<std::uint64_t>> masks;
        for (const auto& z : zero) masks.push_back(mask(z));
        for (auto& y : images) {
            const auto my = mask(y);
            bool reducible = false;
            for (std::size_t s = 0; s < out.size() && !reducible; ++s) {
                bool subset = true;
                for (std::size_t w = 0; w < my.size() && subset; ++w) subset = (masks[s][w] & ~my[w]) == 0;
                if (!subset) continue;
                const auto& o = out[s];
                bool le = o != y;
                for (std::size_t i = 0; i < y.size() && le; ++i) le = o[i] <= y[i];
                reducible = le;
            }
            if (reducible) continue;
            masks.push_back(my);
            out.push_back(std::move(y));
        }
        return out;
    }

    static std::vector<std::uint64_t> mask(const Vec& x) {
        std::vector<std::uint64_t> out((x.size() + 63) / 64, 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0) out[i / 64] |= std::uint64_t{1} << (i % 64);
        return out;
    }

    std::vector<std::vector<Coord>> columns_;
    std::size_t rows_;
    Budget& budget_;
    std::uint64_t& counter_;
    GroupCheck keep_;
};

void fnv(std::uint64_t& h, std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
        h ^= (x >> (8 * b)) & 0xFF;
        h *= 1099511628211ULL;
    }
}

}  // namespace

LinearSystem to_linear_system(const MatchingSystem& sys) {
    LinearSystem out;
    out.variableCount = sys.variableCount;
    for (const auto& e : sys.equations) out.rows.push_back({{e.i, 1}, {e.j, 1}, {e.k, -1}, {e.l, -1}});
    out.forcedZeros = sys.forcedZeros;
    for (const auto& q : sys.quadTriples) out.exclusiveGroups.push_back({q[0], q[1], q[2]});
    return out;
}

std::uint64_t fingerprint(const LinearSystem& sys) {
    std::uint64_t h = 1469598103934665603ULL;
    fnv(h, sys.variableCount);
    for (const auto& row : sys.rows) {
        std::map<std::size_t, Coord> merged;
        for (const auto& t : row) merged[t.var] += t.coef;
        fnv(h, 0xA5A5A5A5ULL);
        for (const auto& [v, c] : merged) {
            fnv(h, v);
            fnv(h, static_cast<std::uint64_t>(c));
        }
    }
    fnv(h, 0x5A5A5A5AULL);
    for (std::size_t z : sys.forcedZeros) fnv(h, z);
    for (const auto& g : sys.exclusiveGroups) {
        fnv(h, 0x3C3C3C3CULL);
        for (std::size_t v : g) fnv(h, v);
    }
    return h;
}

namespace {

/// Hilbert basis of the system left by `red`, expanded to full coordinates.
void search_reduced(const Reduction& red, std::size_t n, const LinearSystem& sys, const EnumerationOptions& opts,
                    bool pruneGroups, Budget& budget, EnumerationStats& stats, std::vector<CoordVector>& out) {
    const auto& isBase = red.is_base();
    detail::UnionFind blocks(n);
    std::vector<bool> constrained(n, false);
    for (const auto& row : red.rows()) {
        const std::size_t first = row.begin()->first;
        for (const auto& [v, c] : row) {
            blocks.unite(first, v);
            constrained[v] = true;
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> blockVars;
    for (std::size_t v = 0; v < n; ++v)
        if (isBase[v]) blockVars[constrained[v] ? blocks.find(v) : n + v].push_back(v);
    std::map<std::size_t, std::vector<const SparseRow*>> blockRows;
    for (const auto& row : red.rows()) blockRows[blocks.find(row.begin()->first)].push_back(&row);

    stats.reducedVariables = std::max<std::size_t>(stats.reducedVariables, static_cast<std::size_t>(
                                                       std::count(isBase.begin(), isBase.end(), true)));
    std::vector<std::vector<std::pair<std::size_t, Coord>>> reducedBasis;
    for (const auto& [key, vars] : blockVars) {
        ++stats.blocks;
        if (key >= n) {
            budget.charge(stats.candidates);
            reducedBasis.push_back({{vars[0], 1}});
            continue;
        }
        const auto& rows = blockRows[key];
        std::vector<std::vector<Coord>> columns(vars.size(), std::vector<Coord>(rows.size(), 0));
        std::map<std::size_t, std::size_t> local;
        for (std::size_t j = 0; j < vars.size(); ++j) local[vars[j]] = j;
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [v, c] : *rows[r]) columns[local.at(v)][r] = c;
        GroupCheck keep;
        if (pruneGroups) {
            const auto touches = red.group_touches();
            std::vector<std::vector<std::pair<std::size_t, std::size_t>>> localTouches(vars.size());
            for (std::size_t j = 0; j < vars.size(); ++j) localTouches[j] = touches[vars[j]];
            keep = GroupCheck(std::move(localTouches), sys.exclusiveGroups.size());
        }
        std::vector<std::vector<Coord>> basis;
        if (opts.algorithm == Algorithm::Completion) {
            for (auto& x : CompletionSearch(std::move(columns), rows.size(), budget, stats.candidates).run())
                if (keep(x)) basis.emplace_back(x.begin(), x.end());
        } else {
            basis = IncrementalSearch(std::move(columns), rows.size(), budget, stats.candidates, std::move(keep)).run();
        }
        for (const auto& x : basis) {
            std::vector<std::pair<std::size_t, Coord>> sparse;
            for (std::size_t j = 0; j < vars.size(); ++j)
                if (x[j] != 0) sparse.push_back({vars[j], x[j]});
            reducedBasis.push_back(std::move(sparse));
        }
    }

    const auto& expansion = red.expansion();
    for (const auto& sparse : reducedBasis) {
        CoordVector full(n, 0);
        std::map<std::size_t, Coord> value(sparse.begin(), sparse.end());
        for (std::size_t u = 0; u < n; ++u)
            for (const auto& [base, c] : expansion[u]) {
                auto it = value.find(base);
                if (it != value.end()) full[u] += c * it->second;
            }
        out.push_back(std::move(full));
    }
}

/// Admissible members by case split: an admissible fundamental solution is
/// fundamental in the subsystem where its group's other members are pinned to
/// zero, and a fundamental solution of such a subsystem is fundamental overall
/// (its summands sit below it and inherit the zeros).
void search_admissible(const LinearSystem& sys, const EnumerationOptions& opts, const Reduction& red,
                       std::set<std::vector<bool>>& seen, Budget& budget, EnumerationStats& stats,
                       std::vector<CoordVector>& out) {
    const auto& expansion = red.expansion();
    for (const auto& group : sys.exclusiveGroups) {
        std::vector<std::size_t> live;
        for (std::size_t v : group)
            if (!expansion[v].empty()) live.push_back(v);
        if (live.size() < 2) continue;
        for (std::size_t keep : live) {
            std::vector<std::size_t> pinned;
            for (std::size_t v : live)
                if (v != keep) pinned.push_back(v);
            Reduction child = red;
            child.pin_zero(pinned);
            // The remaining cone depends only on which variables survive.
            if (!seen.insert(child.live()).second) continue;
            budget.charge(stats.candidates);
            search_admissible(sys, opts, child, seen, budget, stats, out);
        }
        return;
    }
    search_reduced(red, sys.variableCount, sys, opts, false, budget, stats, out);
}

}  // namespace

FundamentalSet enumerate_fundamental(const LinearSystem& sys, const EnumerationOptions& opts) {
    FundamentalSet out;
    out.systemFingerprint = fingerprint(sys);
    const std::size_t n = sys.variableCount;
    if (n == 0) return out;

    Budget budget(opts.limits);
    if (opts.admissibleOnly && opts.splitQuadCases) {
        std::set<std::vector<bool>> seen;
        search_admissible(sys, opts, Reduction(sys, true), seen, budget, out.stats, out.vectors);
    } else {
        search_reduced(Reduction(sys, opts.admissibleOnly), n, sys, opts, opts.admissibleOnly, budget, out.stats, out.vectors);
    }
    std::sort(out.vectors.begin(), out.vectors.end());
    out.vectors.erase(std::unique(out.vectors.begin(), out.vectors.end()), out.vectors.end());
    return out;
}

FundamentalSet enumerate_fundamental(const MatchingSystem& sys, const EnumerationOptions& opts) {
    return enumerate_fundamental(to_linear_system(sys), opts);
}

std::vector<CoordVector> brute_force_solutions(const LinearSystem& sys, Coord bound, std::uint64_t maxStates) {
    if (bound < 0) throw PreconditionError("brute_force_solutions: bound must be nonnegative");
    const std::size_t n = sys.variableCount;
    std::vector<bool> zero(n, false);
    for (std::size_t z : sys.forcedZeros)
        if (z < n) zero[z] = true;
    detail::UnionFind same(n);

    // Trivial propagation: same-signed rows vanish, two opposite equal terms unify.
    auto collapse = [&](const std::vector<LinearTerm>& row) {
        std::map<std::size_t, Coord> m;
        for (const auto& t : row)
            if (!zero[same.find(t.var)]) m[same.find(t.var)] += t.coef;
        std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
        return m;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& row : sys.rows) {
            const auto m = collapse(row);
            if (m.empty()) continue;
            const bool pos = std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second > 0; });
            const bool neg = std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second < 0; });
            if (pos || neg) {
                for (const auto& [v, c] : m) zero[v] = true;
                changed = true;
            } else if (m.size() == 2 && m.begin()->second == -std::next(m.begin())->second) {
                const std::size_t a = m.begin()->first, b = std::next(m.begin())->first;
                const bool z = zero[a] || zero[b];
                same.unite(a, b);
                zero[same.find(a)] = z;
                changed = true;
            }
        }
    }
    std::vector<std::size_t> freeRoots;
    std::vector<std::size_t> position(n, static_cast<std::size_t>(-1));
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t r = same.find(v);
        if (zero[r] || position[r] != static_cast<std::size_t>(-1)) continue;
        position[r] = freeRoots.size();
        freeRoots.push_back(r);
    }
    double states = 1.0;
    for (std::size_t i = 0; i < freeRoots.size(); ++i) states *= static_cast<double>(bound + 1);
    if (states > static_cast<double>(maxStates))
        throw ResourceLimitError("brute force over " + std::to_string(freeRoots.size()) + " free variables at bound " +
                                 std::to_string(bound) + " is intractable");

    // Each row is checked once its last free variable is assigned.
    std::vector<std::vector<std::vector<std::pair<std::size_t, Coord>>>> checksAt(freeRoots.size() + 1);
    for (const auto& row : sys.rows) {
        const auto m = collapse(row);
        std::vector<std::pair<std::size_t, Coord>> terms;
        std::size_t last = 0;
        for (const auto& [root, c] : m) {
            terms.push_back({position[root], c});
            last = std::max(last, position[root]);
        }
        if (!terms.empty()) checksAt[last].push_back(std::move(terms));
    }

    std::vector<Coord> value(freeRoots.size(), 0);
    std::vector<CoordVector> out;
    auto emit = [&]() {
        CoordVector full(n, 0);
        for (std::size_t v = 0; v < n; ++v) {
            const std::size_t r = same.find(v);
            if (!zero[r]) full[v] = value[position[r]];
        }
        out.push_back(std::move(full));
    };
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == freeRoots.size()) {
            emit();
            return;
        }
        for (Coord x = 0; x <= bound; ++x) {
            value[i] = x;
            bool ok = true;
            for (const auto& terms : checksAt[i]) {
                Coord s = 0;
                for (const auto& [p, c] : terms) s += c * value[p];
                if (s != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, i + 1);
        }
        value[i] = 0;
    };
    recurse(recurse, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CoordVector> brute_force_solutions(const MatchingSystem& sys, Coord bound, std::uint64_t maxStates) {
    return brute_force_solutions(to_linear_system(sys), bound, maxStates);
}

FundamentalSet filter_admissible(const FundamentalSet& fs) {
    FundamentalSet out;
    out.systemFingerprint = fs.systemFingerprint;
    out.stats = fs.stats;
    for (const auto& v : fs.vectors)
        if (is_admissible(NormalVector(v))) out.vectors.push_back(v);
    return out;
}

}  // namespace normalsurf
