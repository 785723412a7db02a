#include <benchmark/benchmark.h>

#include <hotplug/bounds.hpp>
#include <hotplug/linalg.hpp>
#include <hotplug/schemes.hpp>
#include <hotplug/verifier.hpp>

#include <random>
#include <vector>

using namespace hotplug;

namespace {

FieldMatrix random_matrix(int rows, int cols, PrimeField field,
                          std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Fe> dist(0, field.order() - 1);
    std::vector<std::vector<Fe>> data(rows, std::vector<Fe>(cols));
    for (auto& row : data)
        for (auto& v : row) v = dist(rng);
    return FieldMatrix::from_rows(data, field);
}

}  // namespace

static void BM_MatrixRank(benchmark::State& state) {
    auto m = random_matrix(40, 40, PrimeField(101), 7);
    for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_MatrixRank);

static void BM_MatrixInverse(benchmark::State& state) {
    auto m = vandermonde_mds(30, 30, PrimeField(101));
    for (auto _ : state) benchmark::DoNotOptimize(inverse(m));
}
BENCHMARK(BM_MatrixInverse);

static void BM_MdsGeneratorCheck(benchmark::State& state) {
    auto g = vandermonde_mds(20, 4, PrimeField(23));
    for (auto _ : state) benchmark::DoNotOptimize(is_mds_generator(g, 5000));
}
BENCHMARK(BM_MdsGeneratorCheck);

static void BM_ExhaustiveVerifyNew1(benchmark::State& state) {
    auto scheme = make_scheme(SchemeId::new1, 4, 3, 3, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(exhaustive_report(*scheme, 42));
}
BENCHMARK(BM_ExhaustiveVerifyNew1);

static void BM_ExhaustiveVerifyRemark2(benchmark::State& state) {
    auto scheme = make_scheme(SchemeId::remark2, 5, 3, 3, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(exhaustive_report(*scheme, 42));
}
BENCHMARK(BM_ExhaustiveVerifyRemark2);

static void BM_YmaConverseBuild(benchmark::State& state) {
    for (auto _ : state) {
        YmaConverse converse(20, 5);
        benchmark::DoNotOptimize(converse.eval(rat(1)));
    }
}
BENCHMARK(BM_YmaConverseBuild);

static void BM_YmaConverseEval(benchmark::State& state) {
    YmaConverse converse(20, 5);
    Rational m = rat(7, 3);
    for (auto _ : state) benchmark::DoNotOptimize(converse.eval(m));
}
BENCHMARK(BM_YmaConverseEval);

static void BM_CombinedEnvelope(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            lower_convex_envelope(combined_achievable_points(10, 5, 20)));
}
BENCHMARK(BM_CombinedEnvelope);

static void BM_GapCertificate(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(gap_certificate(4, 2, 2, 201, 200));
}
BENCHMARK(BM_GapCertificate);

BENCHMARK_MAIN();
