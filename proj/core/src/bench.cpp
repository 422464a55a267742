#include "bisolve/bench.hpp"

#include <atomic>
#include <iomanip>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "bisolve/errors.hpp"
#include "bisolve/resultant.hpp"

namespace bisolve {

std::string to_string(BenchFamily f) {
    switch (f) {
        case BenchFamily::dense: return "dense";
        case BenchFamily::sparse: return "sparse";
        case BenchFamily::multiple_root: return "multiple-root";
    }
    return "?";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 instance_rng(std::uint64_t seed, int instance, int attempt) {
    std::uint64_t s = splitmix64(seed);
    s = splitmix64(s ^ static_cast<std::uint64_t>(instance) << 1);
    s = splitmix64(s ^ static_cast<std::uint64_t>(attempt) << 33);
    return std::mt19937_64(s);
}

BiPoly random_dense(std::mt19937_64& rng, int degree, int bound) {
    std::uniform_int_distribution<int> coeff(-bound, bound);
    BiPoly p;
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; i + j <= degree; ++j) p.add_term(i, j, Rational(coeff(rng)));
    return p;
}

BiPoly random_sparse(std::mt19937_64& rng, int degree, int bound, int monomials) {
    std::uniform_int_distribution<int> pick_i(0, degree);
    std::uniform_int_distribution<int> coeff(1, bound);
    std::uniform_int_distribution<int> flip(0, 1);
    BiPoly p;
    for (int k = 0; k < monomials; ++k) {
        int i = pick_i(rng);
        std::uniform_int_distribution<int> pick_j(0, degree - i);
        int j = pick_j(rng);
        int c = coeff(rng) * (flip(rng) ? 1 : -1);
        if (p.coeff(i, j) == 0) p.add_term(i, j, Rational(c));
    }
    return p;
}

bool usable(const BiPoly& p) {
    if (p.is_zero() || (p.deg_x() == 0 && p.deg_y() == 0)) return false;
    // Reject nontrivial monomial content: if every term is divisible by x
    // (or y), the pair trivially shares that factor and the projection
    // vanishes.
    int min_i = p.deg_x(), min_j = p.deg_y();
    for (const auto& [e, c] : p.terms()) {
        min_i = std::min(min_i, e.first);
        min_j = std::min(min_j, e.second);
    }
    return min_i == 0 && min_j == 0;
}

// --- trivariate scaffolding for the multiple-root family ----------------

// Polynomial in z with bivariate coefficients, ascending by z power.
using TriPoly = std::vector<BiPoly>;

TriPoly random_trivariate(std::mt19937_64& rng, int degree, int bound) {
    std::uniform_int_distribution<int> coeff(-bound, bound);
    TriPoly h(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k <= degree; ++k)
        for (int i = 0; i + k <= degree; ++i)
            for (int j = 0; i + j + k <= degree; ++j)
                h[static_cast<std::size_t>(k)].add_term(i, j, Rational(coeff(rng)));
    while (!h.empty() && h.back().is_zero()) h.pop_back();
    return h;
}

TriPoly derivative_z(const TriPoly& h) {
    TriPoly d;
    for (std::size_t k = 1; k < h.size(); ++k) d.push_back(Rational(long(k)) * h[k]);
    while (!d.empty() && d.back().is_zero()) d.pop_back();
    return d;
}

// Determinant of a matrix of univariate polynomials, fraction-free.
UniPoly det_unipoly(std::vector<std::vector<UniPoly>> m, char var) {
    int n = static_cast<int>(m.size());
    if (n == 0) return UniPoly::constant(var, Rational(1));
    int det_sign = 1;
    UniPoly prev = UniPoly::constant(var, Rational(1));
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) { piv = i; break; }
            if (piv < 0) return UniPoly(var);
            std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(piv)]);
            det_sign = -det_sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = UniPoly::exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = UniPoly(var);
        }
        prev = m[k][k];
    }
    UniPoly det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return det_sign < 0 ? -det : det;
}

// Res_z(a, b) for polynomials in z over Q[x, y]: evaluate the Sylvester
// matrix entries on a line of x values, take univariate determinants in y,
// interpolate coefficient-wise back to x.
BiPoly resultant_z(const TriPoly& a, const TriPoly& b) {
    int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
    if (da < 1 || db < 0 || b.empty()) throw degenerate_instance_error();
    int dim = da + db;
    std::vector<std::vector<BiPoly>> m(static_cast<std::size_t>(dim),
                                       std::vector<BiPoly>(static_cast<std::size_t>(dim)));
    for (int r = 0; r < db; ++r)
        for (int k = 0; k <= da; ++k) m[r][r + k] = a[static_cast<std::size_t>(da - k)];
    for (int r = 0; r < da; ++r)
        for (int k = 0; k <= db; ++k) m[db + r][r + k] = b[static_cast<std::size_t>(db - k)];

    int entry_deg_x = 0;
    for (const auto& row : m)
        for (const auto& e : row) entry_deg_x = std::max(entry_deg_x, e.deg_x());
    std::size_t npoints = static_cast<std::size_t>(dim * entry_deg_x + 1);

    std::vector<Rational> nodes;
    std::vector<UniPoly> values;  // det(x_k, y) as a polynomial in y
    for (long k = 0; nodes.size() < npoints; k = k >= 0 ? -(k + 1) : -k) {
        Rational x0(k);
        std::vector<std::vector<UniPoly>> specialized(
            static_cast<std::size_t>(dim), std::vector<UniPoly>(static_cast<std::size_t>(dim)));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) specialized[i][j] = m[i][j].substitute('x', x0);
        nodes.push_back(x0);
        values.push_back(det_unipoly(std::move(specialized), 'y'));
    }

    // Newton interpolation in x of each y coefficient.
    int deg_y = -1;
    for (const auto& v : values) deg_y = std::max(deg_y, v.degree());
    BiPoly out;
    for (int jy = 0; jy <= deg_y; ++jy) {
        std::vector<Rational> dd(npoints);
        for (std::size_t k = 0; k < npoints; ++k) dd[k] = values[k].coeff(static_cast<std::size_t>(jy));
        for (std::size_t level = 1; level < npoints; ++level)
            for (std::size_t i = npoints - 1; i >= level; --i) {
                dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
                if (i == level) break;
            }
        UniPoly px('x', {dd.back()});
        for (std::size_t i = npoints - 1; i-- > 0;) {
            UniPoly lin('x', {-nodes[i], Rational(1)});
            px = px * lin + UniPoly::constant('x', dd[i]);
        }
        for (int ix = 0; ix <= px.degree(); ++ix)
            out.add_term(ix, jy, px[static_cast<std::size_t>(ix)]);
    }
    return out;
}

SystemInput generate_one(const BenchConfig& cfg, int instance) {
    for (int attempt = 0; attempt < cfg.max_regen_attempts; ++attempt) {
        auto rng = instance_rng(cfg.seed, instance, attempt);
        BiPoly f, g;
        try {
            switch (cfg.family) {
                case BenchFamily::dense:
                    f = random_dense(rng, cfg.degree, cfg.coeff_bound);
                    g = random_dense(rng, cfg.degree, cfg.coeff_bound);
                    break;
                case BenchFamily::sparse:
                    f = random_sparse(rng, cfg.degree, cfg.coeff_bound, cfg.sparse_monomials);
                    g = random_sparse(rng, cfg.degree, cfg.coeff_bound, cfg.sparse_monomials);
                    break;
                case BenchFamily::multiple_root: {
                    TriPoly h = random_trivariate(rng, cfg.degree, cfg.coeff_bound);
                    if (h.size() < 2) continue;
                    f = resultant_z(h, derivative_z(h)).primitive_normalized();
                    g = f.derivative('y');
                    break;
                }
            }
        } catch (const degenerate_instance_error&) {
            continue;
        }
        if (!usable(f) || !usable(g)) continue;
        std::ostringstream src;
        src << to_string(cfg.family) << " deg " << cfg.degree << " seed " << cfg.seed
            << " instance " << instance << " attempt " << attempt;
        return {f, g, src.str()};
    }
    throw degenerate_instance_error();
}

}  // namespace

std::vector<SystemInput> bench_generate(const BenchConfig& config) {
    std::vector<SystemInput> out;
    out.reserve(static_cast<std::size_t>(config.instances));
    for (int k = 0; k < config.instances; ++k) out.push_back(generate_one(config, k));
    return out;
}

BenchResult bench_run(const BenchConfig& config) {
    std::vector<SystemInput> systems = bench_generate(config);
    BenchResult result;
    result.config = config;
    result.rows.assign(systems.size(), BenchRow{});

    auto run_one = [&](std::size_t k) {
        const SystemInput& sys = systems[k];
        BenchRow row;
        row.instance = static_cast<int>(k) + 1;
        row.deg_f = std::max(sys.f.deg_x(), sys.f.deg_y());
        row.deg_g = std::max(sys.g.deg_x(), sys.g.deg_y());
        SolveOptions opts;
        opts.mode = config.mode;
        opts.manual_eps = config.manual_eps;
        if (config.mode == EpsilonMode::manual && !opts.manual_eps)
            opts.manual_eps = Rational(1) / pow_int(Rational(10), 30);
        opts.workers = config.parallel_instances ? 1 : config.workers;
        // A manual epsilon carries no information about the system's
        // evaluation constants, so the |log2 eps|-derived default budget can
        // run out on large dense systems; allow much deeper refinement.
        opts.refinement_budget = 1L << 14;
        auto start = std::chrono::steady_clock::now();
        opts.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                    std::chrono::duration<double>(config.time_budget_sec));
        try {
            SolveReport rep = solve(sys, opts);
            row.solutions = static_cast<int>(rep.solutions.size());
            row.status = "ok";
        } catch (const time_budget_exceeded&) {
            row.status = "?";
        } catch (const refinement_budget_exceeded&) {
            row.status = "budget";
        } catch (const not_zero_dimensional&) {
            row.status = "degenerate";
        } catch (const solver_error&) {
            row.status = "error";
        }
        row.time_sec =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        result.rows[k] = row;
    };

    if (config.parallel_instances && config.workers > 1 && systems.size() > 1) {
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            for (std::size_t k = next.fetch_add(1); k < systems.size(); k = next.fetch_add(1))
                run_one(k);
        };
        std::vector<std::thread> pool;
        for (int w = 1; w < config.workers; ++w) pool.emplace_back(work);
        work();
        for (auto& t : pool) t.join();
    } else {
        for (std::size_t k = 0; k < systems.size(); ++k) run_one(k);
    }
    return result;
}

std::string bench_table(const BenchResult& result) {
    std::ostringstream os;
    os << "family: " << to_string(result.config.family) << ", degree " << result.config.degree
       << ", coeffs in [-" << result.config.coeff_bound << ", " << result.config.coeff_bound
       << "], seed " << result.config.seed << "\n";
    os << std::left << std::setw(8) << "system" << std::setw(8) << "deg f" << std::setw(8)
       << "deg g" << std::setw(11) << "solutions" << std::setw(12) << "time(sec)" << "status\n";
    for (const auto& row : result.rows) {
        os << std::left << std::setw(8) << ("S" + std::to_string(row.instance)) << std::setw(8)
           << row.deg_f << std::setw(8) << row.deg_g << std::setw(11)
           << (row.status == "ok" ? std::to_string(row.solutions) : "?") << std::setw(12)
           << std::fixed << std::setprecision(3) << row.time_sec << row.status << "\n";
    }
    return os.str();
}

std::string bench_to_json(const BenchResult& result) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : result.rows)
        rows.push_back({{"instance", row.instance},
                        {"deg_f", row.deg_f},
                        {"deg_g", row.deg_g},
                        {"solutions", row.solutions},
                        {"time_sec", row.time_sec},
                        {"status", row.status}});
    nlohmann::json out{{"family", to_string(result.config.family)},
                       {"degree", result.config.degree},
                       {"coeff_bound", result.config.coeff_bound},
                       {"instances", result.config.instances},
                       {"seed", result.config.seed},
                       {"time_budget_sec", result.config.time_budget_sec},
                       {"mode", to_string(result.config.mode)},
                       {"rows", rows}};
    return out.dump(2);
}

}  // namespace bisolve
