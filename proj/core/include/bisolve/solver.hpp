#pragma once

#include <chrono>
#include <optional>

#include "bisolve/report.hpp"

namespace bisolve {

struct SolveOptions {
    EpsilonMode mode = EpsilonMode::safe;
    std::optional<Rational> manual_eps;
    int workers = 1;
    long refinement_budget = -1;  // <0: default |epsilon_log2| + 64
    int digits = 10;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SystemInput {
    BiPoly f, g;
    std::string source;  // original text, informational
};

// The full pipeline: project on both axes (concurrently), discard extraneous
// factors, compute the zero-gap bound, isolate both projections
// (concurrently), match the candidate grid in parallel, cluster
// multiplicities, and assemble the report.
SolveReport solve(const SystemInput& input, const SolveOptions& opts = {});

}  // namespace bisolve
