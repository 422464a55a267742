#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "bisolve/bound.hpp"
#include "bisolve/isolation.hpp"

namespace bisolve {

// Grid candidate: the i-th x-projection root paired with the j-th
// y-projection root.
struct CandidatePair {
    IsolatedRoot x_root, y_root;
    int i = 0, j = 0;
};

// A certified common root of the system.
struct Solution {
    Interval x_interval, y_interval;
    bool f_certified_zero = false, g_certified_zero = false;
    std::pair<int, int> multiplicity_hint{1, 1};
    bool cluster_flag = false;
    int i = 0, j = 0;
};

struct MatchOptions {
    // Max bisections per root axis while classifying one pair; <0 selects the
    // default |epsilon_log2| + 64.
    long refinement_budget = -1;
    int workers = 1;
    std::function<void()> checkpoint;
};

// Decide whether the candidate pair is a common root. Each polynomial is
// certified independently: an interval evaluation strictly inside
// (-eps, eps) proves the exact value is zero (any nonzero value has
// magnitude >= eps), an interval excluding 0 proves it nonzero; otherwise
// both root boxes are refined and the evaluation repeated.
std::optional<Solution> classify_pair(const BiPoly& f, const BiPoly& g,
                                      const CandidatePair& pair, const BoundParams& params,
                                      const MatchOptions& opts = {});

// Classify the full u x v grid; output sorted by (i, j) and independent of
// worker count and evaluation order.
std::vector<Solution> match_all(const BiPoly& f, const BiPoly& g,
                                const std::vector<IsolatedRoot>& sx,
                                const std::vector<IsolatedRoot>& sy, const BoundParams& params,
                                const MatchOptions& opts = {});

// Merge matched pairs whose coordinate intervals are closer than epsilon in
// both axes; the merged solution keeps the interval hull and is flagged.
std::vector<Solution> multiplicity_cluster(const std::vector<Solution>& solutions,
                                           const BoundParams& params);

}  // namespace bisolve
