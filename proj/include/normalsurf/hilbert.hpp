#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "normalsurf/matching.hpp"

namespace normalsurf {

struct LinearTerm {
    std::size_t var;
    Coord coef;
};

/// Homogeneous system  sum(coef * x[var]) = 0  over nonnegative integers,
/// with variables pinned to zero and optional exclusive groups (at most one
/// nonzero member per group; used for quadrilateral admissibility).
struct LinearSystem {
    std::size_t variableCount = 0;
    std::vector<std::vector<LinearTerm>> rows;
    std::set<std::size_t> forcedZeros;
    std::vector<std::vector<std::size_t>> exclusiveGroups;
};

LinearSystem to_linear_system(const MatchingSystem& sys);

struct EnumerationLimits {
    std::uint64_t maxCandidates = 10'000'000;
    std::chrono::milliseconds timeBudget{300'000};
};

enum class Algorithm {
    Incremental,  ///< intersect the orthant with one equation at a time
    Completion,   ///< Contejean-Devie completion
};

struct EnumerationOptions {
    EnumerationLimits limits;
    Algorithm algorithm = Algorithm::Incremental;
    /// Prune candidates that break an exclusive group. Returns exactly the
    /// Hilbert-basis members satisfying every group, without producing the
    /// others: an admissible v = a + b forces a, b <= v, so both are admissible.
    bool admissibleOnly = false;
    /// With admissibleOnly: branch on the quad type kept in each tetrahedron
    /// and merge the per-case bases; otherwise prune inside a single search.
    bool splitQuadCases = true;
};

struct EnumerationStats {
    std::size_t reducedVariables = 0;  ///< variables left after propagation and substitution
    std::size_t blocks = 0;            ///< independent blocks searched
    std::uint64_t candidates = 0;      ///< candidate vectors generated by the completion search
};

/// Canonical (lexicographically sorted, duplicate-free) fundamental solutions.
struct FundamentalSet {
    std::vector<CoordVector> vectors;
    std::uint64_t systemFingerprint = 0;
    EnumerationStats stats;

    std::size_t size() const { return vectors.size(); }
    bool empty() const { return vectors.empty(); }
};

/// Stable 64-bit hash of a system's equations, forced zeros and groups.
std::uint64_t fingerprint(const LinearSystem& sys);

/// Hilbert basis of { x >= 0 integer : rows hold, forced zeros vanish }.
/// Throws ResourceLimitError if a cap in `opts.limits` is exceeded.
FundamentalSet enumerate_fundamental(const LinearSystem& sys, const EnumerationOptions& opts = {});
FundamentalSet enumerate_fundamental(const MatchingSystem& sys, const EnumerationOptions& opts = {});

/// Every solution with all coordinates <= bound, by exhaustive search over the
/// variables left after trivial zero/equality propagation. Sorted, includes zero.
/// Throws ResourceLimitError if (bound+1)^free exceeds `maxStates`.
std::vector<CoordVector> brute_force_solutions(const LinearSystem& sys, Coord bound, std::uint64_t maxStates = 50'000'000);
std::vector<CoordVector> brute_force_solutions(const MatchingSystem& sys, Coord bound, std::uint64_t maxStates = 50'000'000);

/// Members satisfying quadrilateral admissibility (7 coordinates per tetrahedron).
FundamentalSet filter_admissible(const FundamentalSet& fs);

}  // namespace normalsurf
