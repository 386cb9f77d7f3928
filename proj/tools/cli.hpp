#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace normalsurf::cli {

enum class Format { Human, Json, Tsv };

enum class Command { Validate, Skeleton, Fundamental, SplitCheck, Unknot, Homology, Curve2dConnect, EmitFixtures };

struct RunConfig {
    Command command = Command::Validate;
    std::string input;                 ///< triangulation, surface, or output directory
    std::optional<std::string> link;
    std::optional<std::string> cycle;
    std::optional<std::string> exterior;       ///< unknot: triangulation to verify the pushoff in
    std::optional<std::string> exteriorCycle;  ///< unknot: the pushoff as a cycle of `exterior`
    bool waivePushoffCheck = false;
    bool allFundamental = false;  ///< fundamental: the whole Hilbert basis, not only admissible members
    bool completion = false;      ///< use the completion engine
    bool strict = false;
    std::string edgeP, edgeQ;     ///< curve2d connect, "name:ab"
    Format format = Format::Human;
    std::uint64_t maxCandidates = 10'000'000;
    std::chrono::milliseconds timeBudget{300'000};
};

/// Exit status: 0 verdict or report produced, 2 invalid input, 3 resource cap hit.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (caps default from NORMALSURF_MAX_CANDIDATES and
/// NORMALSURF_TIME_BUDGET_MS) and runs; usage errors exit 2.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace normalsurf::cli
