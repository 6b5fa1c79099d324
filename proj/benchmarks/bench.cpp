#include <benchmark/benchmark.h>

#include <pargoid/abstraction.hpp>
#include <pargoid/kleene.hpp>
#include <pargoid/models.hpp>

using namespace pargoid;

namespace {

void BM_NormalizeSOmegaI(benchmark::State& state) {
    const Term t = parse("s omega i x");
    for (auto _ : state)
        benchmark::DoNotOptimize(normalize(t));
}
BENCHMARK(BM_NormalizeSOmegaI);

// Exhausts the step budget on omega omega.
void BM_NormalizeOmegaOmega(benchmark::State& state) {
    const Term t = parse("omega omega");
    Budget b;
    b.steps = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(normalize(t, b));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_NormalizeOmegaOmega)->Arg(1'000)->Arg(10'000);

void BM_ReachableOmegaOmega(benchmark::State& state) {
    const Term t = parse("omega omega");
    for (auto _ : state)
        benchmark::DoNotOptimize(reachable(t, static_cast<std::size_t>(state.range(0))));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ReachableOmegaOmega)->Arg(1'000)->Arg(20'000);

void BM_CertifyKillerLeftPassive(benchmark::State& state) {
    auto n = modelN();
    for (auto _ : state)
        benchmark::DoNotOptimize(leftPassiveCertificate(*n, terms::killer(), {}, n->registry()));
}
BENCHMARK(BM_CertifyKillerLeftPassive);

// Fresh model each iteration so the product cache does not hide the work.
void BM_LambdaStarPropertyN(benchmark::State& state) {
    const Term p = parse("s (x k) (y x)");
    const Assignment asg{{"y", Term::var("y")}};
    for (auto _ : state) {
        NormalFormModel n;
        benchmark::DoNotOptimize(lambdaStarProperty(n, p, "x", asg, terms::i(), {}));
    }
}
BENCHMARK(BM_LambdaStarPropertyN);

void BM_KleeneRunS(benchmark::State& state) {
    using namespace pargoid::kleene;
    const Nat s = encode(*sProgram());
    for (auto _ : state)
        benchmark::DoNotOptimize(run(s, 12345));
}
BENCHMARK(BM_KleeneRunS);

void BM_KleeneRunGCompose(benchmark::State& state) {
    using namespace pargoid::kleene;
    const Nat g = gCompose(constProg(5), encode(*input()));
    for (auto _ : state)
        benchmark::DoNotOptimize(run(g, 77));
}
BENCHMARK(BM_KleeneRunGCompose);

void BM_Sweep(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(prop53Search(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Sweep)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
