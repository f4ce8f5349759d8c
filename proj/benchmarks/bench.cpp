#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "trigzero/ingest.hpp"
#include "trigzero/oracle.hpp"
#include "trigzero/sturm.hpp"
#include "trigzero/trigpoly.hpp"

using namespace trigzero;

namespace {

TrigPoly dense_poly(int n, int max_degree) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  std::vector<Harmonic> hs;
  for (int k = n; k <= max_degree; ++k) hs.push_back({k, g(rng), g(rng)});
  return TrigPoly::from_harmonics(std::move(hs));
}

void BM_eval_degree32(benchmark::State& state) {
  const TrigPoly p = dense_poly(1, 32);
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(p.eval(x));
    x += 1e-3;
  }
}
BENCHMARK(BM_eval_degree32);

void BM_analyze_1024(benchmark::State& state) {
  const SampledSignal s(synthesize(dense_poly(1, 32), 1024));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(s));
}
BENCHMARK(BM_analyze_1024);

void BM_oracle_scan(benchmark::State& state) {
  const TrigPoly p = dense_poly(1, 8);
  for (auto _ : state)
    benchmark::DoNotOptimize(count_sign_changes(p, 4096));
}
BENCHMARK(BM_oracle_scan);

void BM_certify_n2(benchmark::State& state) {
  const TrigPoly p = dense_poly(2, 8);
  for (auto _ : state) benchmark::DoNotOptimize(certify(p));
}
BENCHMARK(BM_certify_n2);

void BM_certify_tight_n2(benchmark::State& state) {
  const TrigPoly p = dense_poly(2, 8);
  CertifyConfig cfg;
  cfg.mode = EllMode::Tight;
  for (auto _ : state) benchmark::DoNotOptimize(certify(p, cfg));
}
BENCHMARK(BM_certify_tight_n2);

}  // namespace

BENCHMARK_MAIN();
