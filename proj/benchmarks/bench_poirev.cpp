#include <benchmark/benchmark.h>

#include "poirev/campaign.hpp"
#include "poirev/enumerate.hpp"

using namespace poirev;

static void BM_EnumerateTpos(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) {
    std::size_t count = 0;
    for_each_tpo(n, [&](const Tpo&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateTpos)->DenseRange(3, 6);

static void BM_EnumeratePois(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) {
    std::size_t count = 0;
    for_each_poi(n, [&](const PoiAssignment&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumeratePois)->DenseRange(2, 4);

static void BM_PoiRevise(benchmark::State& st) {
  const auto pois = enumerate_pois(4);
  const WorldSet a(4, 0b0101);
  for (auto _ : st) {
    for (const auto& p : pois) benchmark::DoNotOptimize(poi_revise(p, a));
  }
  st.SetItemsProcessed(static_cast<int64_t>(st.iterations() * pois.size()));
}
BENCHMARK(BM_PoiRevise);

static void BM_VerifyPostulate(benchmark::State& st, const char* id) {
  const auto states = family_states(Family::poi, 3);
  const RevisionOperator op = family_operator(Family::poi);
  for (auto _ : st) {
    for (const auto& s : states) {
      Evaluator ev(op, s);
      benchmark::DoNotOptimize(verify_all(postulate(id), ev).instances);
    }
  }
}
BENCHMARK_CAPTURE(BM_VerifyPostulate, c1, "c1");
BENCHMARK_CAPTURE(BM_VerifyPostulate, alpha3, "alpha3");
BENCHMARK_CAPTURE(BM_VerifyPostulate, beta3s, "beta3s");

static void BM_Campaign(benchmark::State& st) {
  std::vector<std::string> ids;
  for (const auto& p : registry()) ids.push_back(p.id);
  const auto jobs = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) {
    benchmark::DoNotOptimize(campaign({Family::poi}, 3, ids, jobs).all_hold());
  }
}
BENCHMARK(BM_Campaign)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
