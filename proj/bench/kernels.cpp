// Serial reference vs OpenMP kernel for the hot paths. Both paths produce
// identical results; the comparison is wall time only.
#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "frost/docstore/store.hpp"
#include "frost/fridgesim/fridgesim.hpp"
#include "frost/neural/network.hpp"
#include "frost/neural/train.hpp"
#include "support/random_docs.hpp"
#include "support/temp_dir.hpp"

namespace {

using frost::Exec;

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

struct GradientFixture {
  frost::neural::NetworkSpec spec{{{frost::neural::CellKind::lstm, 32}, {frost::neural::CellKind::lstm, 32}},
                                  frost::neural::HeadKind::linear, 32, 3};
  frost::neural::ParamSet params = frost::neural::init_params(spec, 1);
  frost::neural::SequenceSet data{32, 3, {}, {}};
  std::vector<std::size_t> batch;

  GradientFixture() {
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    std::vector<double> x(32 * 3);
    for (int i = 0; i < 256; ++i) {
      for (auto& v : x) v = g(rng);
      data.push(x, g(rng));
    }
    batch.resize(256);
    std::iota(batch.begin(), batch.end(), 0);
  }
};

void BM_LossAndGradient(benchmark::State& state) {
  static GradientFixture f;
  std::vector<double> grad;
  for (auto _ : state)
    benchmark::DoNotOptimize(frost::neural::loss_and_gradient(f.spec, f.params, f.data, f.batch,
                                                              frost::neural::LossKind::mae, grad, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.batch.size()));
}
BENCHMARK(BM_LossAndGradient)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PredictBatch(benchmark::State& state) {
  static GradientFixture f;
  frost::neural::ModelArtifact model;
  model.spec = f.spec;
  model.params = f.params;
  model.normalizer = frost::neural::fit_normalizer(f.data, f.batch, true);
  for (auto _ : state) benchmark::DoNotOptimize(frost::neural::predict_batch(model, f.data, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.data.size()));
}
BENCHMARK(BM_PredictBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Aggregate(benchmark::State& state) {
  static frost::testing::TempDir dir("bench-store");
  static frost::docstore::Store store = [] {
    auto s = frost::docstore::Store::open(dir.path(), {frost::docstore::OpenMode::write});
    frost::testing::DocGen gen(3);
    s.insert_many("docs", gen.documents(20000));
    return s;
  }();
  const auto pipeline = frost::docstore::Pipeline::parse(
      R"([{"$match": {"x": {"$gt": 0}}}, {"$sort": {"n": -1, "_id": 1}}, {"$project": {"n": 1, "x": 1}}])");
  for (auto _ : state) benchmark::DoNotOptimize(store.aggregate("docs", pipeline, exec_of(state)));
}
BENCHMARK(BM_Aggregate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SimulateFleet(benchmark::State& state) {
  frost::fridgesim::SimConfig c;
  c.n_fridges = 8;
  c.days = 7;
  c.seed = 4;
  for (auto _ : state) benchmark::DoNotOptimize(frost::fridgesim::simulate_fleet(c, exec_of(state)));
}
BENCHMARK(BM_SimulateFleet)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
