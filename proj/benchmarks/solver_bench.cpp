#include <benchmark/benchmark.h>

#include "neckcut/generators.hpp"
#include "neckcut/oracle.hpp"
#include "neckcut/reduction.hpp"
#include "neckcut/walk_graph.hpp"

using namespace neckcut;

static void BM_solve_irreducible(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Necklace neck = gen_irreducible(n, 2, 17, 250ll * n);
    Rng rng(5);
    AlphaVector alpha = random_alpha(neck, rng);
    for (auto _ : state) {
        CutPair pair = solve_alpha_pair(neck, alpha);
        benchmark::DoNotOptimize(pair.cut.point.data());
    }
    state.SetLabel("beads=" + std::to_string(neck.bead_count()));
}
BENCHMARK(BM_solve_irreducible)->Arg(51)->Arg(101)->Arg(201)->Arg(401);

static void BM_evaluate_cut(benchmark::State& state) {
    Necklace neck = gen_irreducible(101, 2, 3, state.range(0));
    Rng rng(7);
    Cut cut;
    for (ColourId c = 0; c < neck.colour_count(); ++c) {
        const auto& pos = neck.colour_positions(c);
        cut.point.push_back(pos[rng.uniform_int(0, static_cast<int>(pos.size()) - 1)]);
    }
    for (auto _ : state) {
        CutEvaluation ev = evaluate_cut(neck, cut);
        benchmark::DoNotOptimize(ev.alpha.target.data());
    }
}
BENCHMARK(BM_evaluate_cut)->Arg(10000)->Arg(100000);

static void BM_max_cut(benchmark::State& state) {
    MultiGraph g = irreducible_necklace_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        MaxCutResult res = max_cut_bruteforce(g);
        benchmark::DoNotOptimize(res.size);
    }
}
BENCHMARK(BM_max_cut)->Arg(12)->Arg(16)->Arg(20);

static void BM_oracle_census(benchmark::State& state) {
    Necklace neck = gen_irreducible(static_cast<int>(state.range(0)), 2, 11);
    for (auto _ : state) {
        AlphaCensus census = uniqueness_census(neck);
        benchmark::DoNotOptimize(census.total_cuts);
    }
}
BENCHMARK(BM_oracle_census)->Arg(9)->Arg(11);

BENCHMARK_MAIN();
