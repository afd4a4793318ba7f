#include <benchmark/benchmark.h>

#include "geolang/catalog.hpp"
#include "geolang/coset.hpp"
#include "geolang/engines.hpp"
#include "geolang/geodesics.hpp"
#include "geolang/oracle.hpp"

using namespace geolang;

static void BM_CosetZ9Z3(benchmark::State& state) {
  Presentation p({"a", "b"}, {"a b a^-1 b b", "b a b^-1 a a"});
  for (auto _ : state) {
    benchmark::DoNotOptimize(coset_enumerate(p, 20000));
  }
}
BENCHMARK(BM_CosetZ9Z3);

static void BM_CosetCapBS12(benchmark::State& state) {
  Presentation p({"a", "b"}, {"a b a^-1 b b", "b a b^-1 a^-1 b"});
  for (auto _ : state) {
    benchmark::DoNotOptimize(coset_enumerate(p, state.range(0)));
  }
}
BENCHMARK(BM_CosetCapBS12)->Arg(2000)->Arg(20000);

static void BM_BallBS12(benchmark::State& state) {
  auto gs = builtin_genset(std::make_shared<BS12Engine const>());
  for (auto _ : state) {
    benchmark::DoNotOptimize(ball(gs, state.range(0)));
  }
}
BENCHMARK(BM_BallBS12)->DenseRange(4, 8, 2);

static void BM_BallZ2C2(benchmark::State& state) {
  auto gs = builtin_genset(
      std::make_shared<ZnC2Engine const>(2, Phi::swap(1, 2)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ball(gs, state.range(0)));
  }
}
BENCHMARK(BM_BallZ2C2)->Arg(10)->Arg(20);

static void BM_GeodesicsSL23(benchmark::State& state) {
  auto gs = builtin_genset(table_engine(sl2_3_presented(), "SL2(3)"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(geodesic_language(gs, std::nullopt));
  }
}
BENCHMARK(BM_GeodesicsSL23);

static void BM_NaiveOracleBS12(benchmark::State& state) {
  auto gs = builtin_genset(std::make_shared<BS12Engine const>());
  for (auto _ : state) {
    benchmark::DoNotOptimize(naive_distances(gs, state.range(0)));
  }
}
BENCHMARK(BM_NaiveOracleBS12)->Arg(4)->Arg(6);

static void BM_AvoidLanguage(benchmark::State& state) {
  auto A = alphabet_with_inverses({"a", "b", "c"});
  WordSet f;
  for (LetterId x = 0; x < A.size(); ++x) {
    f.insert(Word{x, A.inverse(x)});
    f.insert(Word{x, x, x});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(avoid_language(f, A, state.range(0)));
  }
}
BENCHMARK(BM_AvoidLanguage)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
