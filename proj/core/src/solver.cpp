#include "bisolve/solver.hpp"

#include <future>

#include "bisolve/errors.hpp"
#include "bisolve/resultant.hpp"

namespace bisolve {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

SolveReport solve(const SystemInput& input, const SolveOptions& opts) {
    if (input.f.is_zero() || input.g.is_zero()) throw zero_polynomial_error();
    const auto t0 = Clock::now();
    std::function<void()> checkpoint;
    if (opts.deadline) {
        auto deadline = *opts.deadline;
        checkpoint = [deadline]() {
            if (Clock::now() > deadline) throw time_budget_exceeded();
        };
    }
    SolveReport r;
    r.f_text = input.f.str();
    r.g_text = input.g.str();
    r.workers = std::max(opts.workers, 1);
    r.digits = opts.digits;
    int res_workers = std::max(1, r.workers / 2);

    // Steps 1-2: the two projections are independent.
    auto tx0 = Clock::now();
    auto fut_t = std::async(std::launch::async, [&] {
        return resultant(input.f, input.g, 'y', res_workers, checkpoint);
    });
    UniPoly T_raw = resultant(input.f, input.g, 'x', res_workers, checkpoint);
    UniPoly t_raw = fut_t.get();
    r.timings.project_x_ms = r.timings.project_y_ms = ms_since(tx0);

    // Step 3: discard extraneous factors.
    auto sf0 = Clock::now();
    if (t_raw.is_zero() || T_raw.is_zero()) throw not_zero_dimensional();
    r.t_raw = t_raw;
    r.T_raw = T_raw;
    r.t_sf = square_free_part(t_raw);
    r.T_sf = square_free_part(T_raw);
    r.timings.squarefree_ms = ms_since(sf0);

    // Steps 4-5: bound parameters and the zero gap.
    auto b0 = Clock::now();
    r.params = compute_params(input.f, input.g, r.t_sf, r.T_sf, opts.mode, opts.manual_eps);
    r.timings.bound_ms = ms_since(b0);

    // Steps 6-7: isolate both projections, again independent.
    auto i0 = Clock::now();
    auto fut_sx = std::async(std::launch::async, [&] {
        return isolate_real_roots(r.t_sf, checkpoint);
    });
    std::vector<IsolatedRoot> sy = isolate_real_roots(r.T_sf, checkpoint);
    std::vector<IsolatedRoot> sx = fut_sx.get();
    // Narrow for printing up front; raw multiplicities come from the Yun
    // factors of the raw resultants.
    Rational print_width = Rational(1) / pow_int(Rational(10), static_cast<unsigned long>(opts.digits + 1));
    for (auto& root : sx) {
        root.raw_multiplicity = raw_multiplicity(t_raw, root);
        root = refine(root, print_width);
    }
    for (auto& root : sy) {
        root.raw_multiplicity = raw_multiplicity(T_raw, root);
        root = refine(root, print_width);
    }
    r.timings.isolate_x_ms = r.timings.isolate_y_ms = ms_since(i0);

    // Step 8: match the u x v candidate grid.
    auto m0 = Clock::now();
    MatchOptions mo;
    mo.refinement_budget = opts.refinement_budget;
    mo.workers = r.workers;
    mo.checkpoint = checkpoint;
    std::vector<Solution> matched = match_all(input.f, input.g, sx, sy, r.params, mo);
    r.timings.match_ms = ms_since(m0);

    // Step 9: multiplicity clustering.
    auto c0 = Clock::now();
    matched = multiplicity_cluster(matched, r.params);
    r.timings.cluster_ms = ms_since(c0);

    for (const auto& root : sx)
        r.sx.push_back({root.interval, decimal_in_interval(root.interval, opts.digits),
                        root.raw_multiplicity});
    for (const auto& root : sy)
        r.sy.push_back({root.interval, decimal_in_interval(root.interval, opts.digits),
                        root.raw_multiplicity});
    for (const auto& s : matched) {
        SolutionReport sr;
        sr.x_interval = s.x_interval;
        sr.y_interval = s.y_interval;
        sr.x_decimal = decimal_in_interval(s.x_interval, opts.digits);
        sr.y_decimal = decimal_in_interval(s.y_interval, opts.digits);
        sr.f_certified_zero = s.f_certified_zero;
        sr.g_certified_zero = s.g_certified_zero;
        sr.multiplicity_hint = s.multiplicity_hint;
        sr.cluster_flag = s.cluster_flag;
        sr.i = s.i;
        sr.j = s.j;
        r.solutions.push_back(std::move(sr));
    }
    r.timings.total_ms = ms_since(t0);
    return r;
}

}  // namespace bisolve
