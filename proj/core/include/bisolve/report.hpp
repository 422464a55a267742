#pragma once

#include <string>
#include <vector>

#include "bisolve/bound.hpp"
#include "bisolve/matcher.hpp"

namespace bisolve {

struct StageTimings {
    double project_x_ms = 0, project_y_ms = 0, squarefree_ms = 0, bound_ms = 0;
    double isolate_x_ms = 0, isolate_y_ms = 0, match_ms = 0, cluster_ms = 0;
    double total_ms = 0;
};

struct RootReport {
    Interval interval;
    std::string decimal;
    int raw_multiplicity = 1;
};

struct SolutionReport {
    Interval x_interval, y_interval;
    std::string x_decimal, y_decimal;
    bool f_certified_zero = false, g_certified_zero = false;
    std::pair<int, int> multiplicity_hint{1, 1};
    bool cluster_flag = false;
    int i = 0, j = 0;
};

struct SolveReport {
    std::string f_text, g_text;  // canonical echo of the inputs
    UniPoly t_raw, t_sf, T_raw, T_sf;
    BoundParams params;
    std::vector<RootReport> sx, sy;
    std::vector<SolutionReport> solutions;
    StageTimings timings;
    int workers = 1;
    int digits = 10;
};

// Decimal string with `digits` significant digits, round to nearest.
std::string decimal_approx(const Rational& v, int digits);
// Decimal chosen to lie inside the interval (digits grow as needed); for a
// degenerate interval, the rounded point value.
std::string decimal_in_interval(const Interval& iv, int digits);
// Inverse of the decimal format ("-1.25", "3.1e-5", ...).
Rational decimal_to_rational(const std::string& s);

// Machine-readable form; rationals appear as "num/den" decimal strings so no
// consumer-side integer width limits apply. Lossless: from_json(to_json(r))
// reproduces r exactly. include_timings=false strips the timings and the
// worker count, leaving only worker-count-independent content.
std::string report_to_json(const SolveReport& r, bool include_timings = true);
SolveReport report_from_json(const std::string& json_text);

// Human-readable report mirroring the pipeline stages.
std::string report_to_text(const SolveReport& r);

}  // namespace bisolve
