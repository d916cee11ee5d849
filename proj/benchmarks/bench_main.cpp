#include <benchmark/benchmark.h>

#include <random>

#include "origami/closure.hpp"
#include "origami/literal.hpp"
#include "origami/numtheory.hpp"
#include "origami/synth.hpp"

using namespace origami;

namespace {

CycNum sample(const FieldPtr& field, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::vector<Rational> coeffs(field->degree());
    for (auto& c : coeffs) c = Rational(num(rng), 1 + (rng() % 3));
    return CycNum(field, RationalPoly(std::move(coeffs)));
}

void BM_FieldConstruction(benchmark::State& state) {
    const unsigned conductor = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(Field::make(conductor));
}
BENCHMARK(BM_FieldConstruction)->Arg(6)->Arg(24)->Arg(48);

void BM_CycMul(benchmark::State& state) {
    FieldPtr f = Field::make(static_cast<unsigned>(state.range(0)));
    std::mt19937_64 rng(1);
    CycNum a = sample(f, rng), b = sample(f, rng);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycMul)->Arg(6)->Arg(16)->Arg(24);

void BM_CycInv(benchmark::State& state) {
    FieldPtr f = Field::make(static_cast<unsigned>(state.range(0)));
    std::mt19937_64 rng(2);
    CycNum a = sample(f, rng);
    while (a.is_zero()) a = sample(f, rng);
    for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(BM_CycInv)->Arg(6)->Arg(16)->Arg(24);

void BM_Intersect(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    FieldPtr f = Field::make(2 * n);
    std::mt19937_64 rng(3);
    CycNum p = sample(f, rng), q = sample(f, rng);
    const Angle u(n, 1), v(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(intersect(u, v, p, q));
}
BENCHMARK(BM_Intersect)->Arg(3)->Arg(8)->Arg(12);

void BM_ClosureGenerate(benchmark::State& state) {
    const unsigned depth = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        ClosureSet cs = ClosureSet::generate(3, depth);
        benchmark::DoNotOptimize(cs.size());
    }
}
BENCHMARK(BM_ClosureGenerate)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_DecomposeSynthVerify(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    FieldPtr f = Field::make(2 * n);
    CycNum x = CycNum::from_rational(f, Rational(1, n)) + CycNum::zeta_pow(f, 2).scaled(3);
    for (auto _ : state) {
        FoldProgram prog = synth_element(decompose(x, n));
        benchmark::DoNotOptimize(verify(prog, x).ok);
    }
}
BENCHMARK(BM_DecomposeSynthVerify)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ParseLiteral(benchmark::State& state) {
    FieldPtr f = Field::make(16);
    const std::string text = "1/2*z^0 + -2/3*z^5 + 7*z^11 + -9/4*z^2";
    for (auto _ : state) benchmark::DoNotOptimize(parse_exact_literal(text, f));
}
BENCHMARK(BM_ParseLiteral);

}  // namespace

BENCHMARK_MAIN();
