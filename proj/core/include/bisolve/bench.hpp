#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bisolve/solver.hpp"

namespace bisolve {

enum class BenchFamily { dense, sparse, multiple_root };

std::string to_string(BenchFamily f);

// Random-system generator configuration. Generation is a pure function of
// the config: instance k uses an mt19937_64 seeded by splitmix64(seed, k,
// attempt), so the same config always yields byte-identical systems.
struct BenchConfig {
    BenchFamily family = BenchFamily::dense;
    int degree = 4;
    int coeff_bound = 20;  // coefficients uniform in [-bound, bound]
    int instances = 5;
    std::uint64_t seed = 1;
    double time_budget_sec = 120.0;
    int sparse_monomials = 6;  // monomial count for the sparse family
    EpsilonMode mode = EpsilonMode::manual;
    std::optional<Rational> manual_eps;  // default 10^-30 in manual mode
    int workers = 1;
    bool parallel_instances = false;
    int max_regen_attempts = 64;
};

std::vector<SystemInput> bench_generate(const BenchConfig& config);

struct BenchRow {
    int instance = 0;
    int deg_f = 0, deg_g = 0;
    int solutions = -1;
    double time_sec = 0;
    std::string status;  // "ok", "?", or an error tag
};

struct BenchResult {
    BenchConfig config;
    std::vector<BenchRow> rows;
};

BenchResult bench_run(const BenchConfig& config);

// Text table mirroring the usual deg / solutions / time layout; '?' marks an
// instance whose computation did not finish in its budget.
std::string bench_table(const BenchResult& result);
std::string bench_to_json(const BenchResult& result);

}  // namespace bisolve
