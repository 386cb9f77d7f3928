#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "normalsurf/hilbert.hpp"
#include "normalsurf/homology.hpp"
#include "normalsurf/link.hpp"
#include "normalsurf/matching.hpp"
#include "normalsurf/triangulation.hpp"

namespace normalsurf {

enum class Answer { Split, NotSplit, Unknotted, Knotted, Unknown };

const char* answer_name(Answer a);

struct Verdict {
    Answer answer = Answer::Unknown;
    std::optional<NormalVector> witness;  ///< the splitting sphere, when split
    std::size_t searchedCount = 0;        ///< fundamental surfaces examined
    std::vector<CoordVector> surfaces;    ///< admissible fundamental surfaces of the restricted system
    std::string diagnostic;               ///< why the answer is Unknown
    EnumerationStats stats;
};

/// The four witness predicates, each checked from scratch.
struct WitnessCheck {
    bool admissibleSolution = false;  ///< of the link-restricted system
    bool closed = false;
    bool connected = false;
    bool sphere = false;  ///< chi = 2
    bool separating = false;
    bool all() const { return admissibleSolution && closed && connected && sphere && separating; }
};

WitnessCheck check_witness(const Triangulation& tri, const LinkSpec& link, const NormalVector& v);

/// Enumerates the admissible fundamental surfaces missing the link and returns
/// Split with the first (lexicographic) closed connected separating sphere.
/// An exhausted resource cap yields Unknown, never NotSplit.
/// Throws InputError for an invalid link.
Verdict split_link_check(const Triangulation& tri, const LinkSpec& link, const EnumerationOptions& opts = {});

/// How the 0-pushoff precondition is met.
struct PushoffEvidence {
    bool waived = false;
    /// Triangulation to compute H1 in (e.g. the bounded exterior) and the
    /// pushoff as a cycle there; defaults to the input triangulation and pushoff.
    const Triangulation* homologyTriangulation = nullptr;
    std::optional<EdgeCycle> homologyCycle;
    HomologyMode mode = HomologyMode::Strict;
};

/// Knot plus 0-pushoff: Split -> Unknotted, NotSplit -> Knotted.
/// Throws PreconditionError if the pushoff is not verified null-homologous
/// and the check is not waived.
Verdict unknot_via_pushoff(const Triangulation& tri, const LinkComponent& knot, const EdgeCycle& pushoff,
                           const PushoffEvidence& evidence, const EnumerationOptions& opts = {});

/// Disk-type variables with an arc on some boundary face.
std::set<std::size_t> boundary_meeting_variables(const Triangulation& tri);

/// Fundamental surfaces that are disks (chi = 1, one component, one boundary
/// circle) using no boundary-meeting variable outside `longitudePattern`.
/// Inadmissible members are skipped. Throws PreconditionError for closed triangulations.
std::vector<NormalVector> filter_unknotting_disks(const Triangulation& tri, const FundamentalSet& fs,
                                                  const std::set<std::size_t>& longitudePattern);

}  // namespace normalsurf
