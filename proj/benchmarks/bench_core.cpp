#include <benchmark/benchmark.h>

#include <random>

#include "cosetgb/decode.hpp"
#include "cosetgb/equiv.hpp"
#include "cosetgb/json_io.hpp"

#ifndef COSETGB_FIXTURE_DIR
#define COSETGB_FIXTURE_DIR "tests/fixtures"
#endif

using namespace cosetgb;

namespace {

Code fixture(const char* name) {
    return load_code_file(std::string(COSETGB_FIXTURE_DIR) + "/" + name);
}

AdmissibleOrder drl_for(const Code& code) {
    return AdmissibleOrder::natural(OrderKind::drl, code.num_variables());
}

} // namespace

static void BM_BuildMatphi(benchmark::State& state, const char* name) {
    const Code code = fixture(name);
    const AdmissibleOrder order = drl_for(code);
    for (auto _ : state) benchmark::DoNotOptimize(build_matphi(code, order));
}
BENCHMARK_CAPTURE(BM_BuildMatphi, cf2, "cf2.json");
BENCHMARK_CAPTURE(BM_BuildMatphi, cf3, "cf3.json");

static void BM_BuildReducedBasis(benchmark::State& state, const char* name) {
    const Code code = fixture(name);
    const AdmissibleOrder order = drl_for(code);
    for (auto _ : state) benchmark::DoNotOptimize(build_reduced_basis(code, order));
}
BENCHMARK_CAPTURE(BM_BuildReducedBasis, cf2, "cf2.json");
BENCHMARK_CAPTURE(BM_BuildReducedBasis, cf4, "cf4.json");

static void BM_CanonicalFormBinary(benchmark::State& state) {
    const Code code = fixture("cf2.json");
    const ReducedBasis basis = build_reduced_basis(code, drl_for(code));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> exp(0, 2);
    std::vector<Word> words;
    for (int i = 0; i < 256; ++i) {
        std::vector<int> exps(10);
        for (int& e : exps) e = exp(rng);
        words.push_back(Word::from_exponents(exps));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form_binary(basis, words[i]));
        i = (i + 1) % words.size();
    }
}
BENCHMARK(BM_CanonicalFormBinary);

static void BM_DecodeBinary(benchmark::State& state) {
    const Code code = fixture("cf2.json");
    const ReducedBasis basis = build_reduced_basis(code, drl_for(code));
    const VectorFq received = parse_vector_literal(code, "1,1,1,1,0,0,0,0,1,1");
    for (auto _ : state) benchmark::DoNotOptimize(decode_binary(basis, code, received));
}
BENCHMARK(BM_DecodeBinary);

static void BM_FindPermutation(benchmark::State& state) {
    const Code a = fixture("cf2.json");
    const Code b = fixture("sigma_cf2_1.json");
    for (auto _ : state) benchmark::DoNotOptimize(find_permutation(a, b));
}
BENCHMARK(BM_FindPermutation);

BENCHMARK_MAIN();
