#include "bisolve/matcher.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include "bisolve/errors.hpp"

namespace bisolve {

namespace {

enum class Verdict { zero, nonzero, undecided };

Verdict decide(const Interval& value, const Rational& eps) {
    if (value.lo > -eps && value.hi < eps) return Verdict::zero;
    if (sgn(value.lo) > 0 || sgn(value.hi) < 0) return Verdict::nonzero;
    return Verdict::undecided;
}

}  // namespace

std::optional<Solution> classify_pair(const BiPoly& f, const BiPoly& g,
                                      const CandidatePair& pair, const BoundParams& params,
                                      const MatchOptions& opts) {
    long budget = opts.refinement_budget >= 0
                      ? opts.refinement_budget
                      : (params.epsilon_log2 < 0 ? -params.epsilon_log2 : 0) + 64;
    IsolatedRoot xr = pair.x_root, yr = pair.y_root;

    // Exact rational candidates need no interval machinery at all.
    if (xr.is_rational() && yr.is_rational()) {
        const Rational &x0 = xr.interval.lo, &y0 = yr.interval.lo;
        if (f.eval(x0, y0) != 0 || g.eval(x0, y0) != 0) return std::nullopt;
        return Solution{xr.interval, yr.interval, true, true,
                        {xr.raw_multiplicity, yr.raw_multiplicity}, false, pair.i, pair.j};
    }

    long spent = 0, step = 1;
    bool f_zero = false, g_zero = false;
    while (true) {
        if (opts.checkpoint) opts.checkpoint();
        Verdict vf = f_zero ? Verdict::zero : decide(f.eval(xr.interval, yr.interval), params.epsilon);
        Verdict vg = g_zero ? Verdict::zero : decide(g.eval(xr.interval, yr.interval), params.epsilon);
        if (vf == Verdict::nonzero || vg == Verdict::nonzero) return std::nullopt;
        f_zero = vf == Verdict::zero;
        g_zero = vg == Verdict::zero;
        if (f_zero && g_zero)
            return Solution{xr.interval, yr.interval, true, true,
                            {xr.raw_multiplicity, yr.raw_multiplicity}, false, pair.i, pair.j};
        if (spent >= budget) throw refinement_budget_exceeded(pair.i, pair.j);
        long k = std::min(step, budget - spent);
        xr = refine_steps(xr, k);
        yr = refine_steps(yr, k);
        spent += k;
        step *= 2;
    }
}

std::vector<Solution> match_all(const BiPoly& f, const BiPoly& g,
                                const std::vector<IsolatedRoot>& sx,
                                const std::vector<IsolatedRoot>& sy, const BoundParams& params,
                                const MatchOptions& opts) {
    std::size_t u = sx.size(), v = sy.size();
    std::size_t total = u * v;
    std::vector<std::optional<Solution>> grid(total);
    int workers = std::max(opts.workers, 1);

    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&]() {
        for (std::size_t k = next.fetch_add(1); k < total; k = next.fetch_add(1)) {
            try {
                std::size_t i = k / v, j = k % v;
                CandidatePair pair{sx[i], sy[j], static_cast<int>(i) + 1,
                                   static_cast<int>(j) + 1};
                grid[k] = classify_pair(f, g, pair, params, opts);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    if (workers == 1 || total <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 1; w < workers; ++w) pool.emplace_back(work);
        work();
        for (auto& t : pool) t.join();
    }
    if (err) std::rethrow_exception(err);

    // Gather in grid order: the result is identical for any worker count.
    std::vector<Solution> out;
    for (auto& cell : grid)
        if (cell) out.push_back(*cell);
    return out;
}

std::vector<Solution> multiplicity_cluster(const std::vector<Solution>& solutions,
                                           const BoundParams& params) {
    std::vector<Solution> out;
    auto gap_below_eps = [&](const Interval& a, const Interval& b) {
        // Upper bound of the distance between the two intervals.
        Rational gap = a.lo <= b.lo ? b.lo - a.hi : a.lo - b.hi;
        return gap < params.epsilon;
    };
    for (const auto& s : solutions) {
        bool merged = false;
        for (auto& t : out) {
            if (gap_below_eps(t.x_interval, s.x_interval) &&
                gap_below_eps(t.y_interval, s.y_interval)) {
                t.x_interval = {std::min(t.x_interval.lo, s.x_interval.lo),
                                std::max(t.x_interval.hi, s.x_interval.hi)};
                t.y_interval = {std::min(t.y_interval.lo, s.y_interval.lo),
                                std::max(t.y_interval.hi, s.y_interval.hi)};
                t.multiplicity_hint = {
                    std::max(t.multiplicity_hint.first, s.multiplicity_hint.first),
                    std::max(t.multiplicity_hint.second, s.multiplicity_hint.second)};
                t.cluster_flag = true;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(s);
    }
    return out;
}

}  // namespace bisolve
