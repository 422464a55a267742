#include <benchmark/benchmark.h>

#include "bisolve/bench.hpp"
#include "bisolve/isolation.hpp"
#include "bisolve/parser.hpp"
#include "bisolve/resultant.hpp"
#include "bisolve/solver.hpp"

using namespace bisolve;

namespace {

SystemInput dense_system(int degree) {
    BenchConfig cfg;
    cfg.family = BenchFamily::dense;
    cfg.degree = degree;
    cfg.instances = 1;
    cfg.seed = 12345;
    return bench_generate(cfg)[0];
}

void BM_resultant_bareiss(benchmark::State& state) {
    SystemInput sys = dense_system(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(resultant_bareiss(sys.f, sys.g, 'y'));
}
BENCHMARK(BM_resultant_bareiss)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_resultant_interp(benchmark::State& state) {
    SystemInput sys = dense_system(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(resultant_interp(sys.f, sys.g, 'y'));
}
BENCHMARK(BM_resultant_interp)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_isolate(benchmark::State& state) {
    SystemInput sys = dense_system(static_cast<int>(state.range(0)));
    UniPoly t_sf = no_extr_res(sys.f, sys.g, 'y');
    for (auto _ : state)
        benchmark::DoNotOptimize(isolate_real_roots(t_sf));
}
BENCHMARK(BM_isolate)->Arg(4)->Arg(6)->Arg(8);

void BM_solve_worked_example(benchmark::State& state) {
    ParsedSystem s = parse_system("x^2 - y^2 - 3; 3*x^2 - 2*y^3 - 1");
    SolveOptions opts;
    opts.workers = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve({s.f, s.g, ""}, opts));
}
BENCHMARK(BM_solve_worked_example)->Arg(1)->Arg(2)->Arg(4);

void BM_solve_dense(benchmark::State& state) {
    SystemInput sys = dense_system(static_cast<int>(state.range(0)));
    SolveOptions opts;
    opts.mode = EpsilonMode::manual;
    Rational eps(1);
    for (int i = 0; i < 30; ++i) eps = eps / 10;
    opts.manual_eps = eps;
    for (auto _ : state)
        benchmark::DoNotOptimize(solve(sys, opts));
}
BENCHMARK(BM_solve_dense)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
