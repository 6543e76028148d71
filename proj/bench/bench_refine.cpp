#include <benchmark/benchmark.h>

#include <random>

#include "slcs/io.hpp"
#include "slcs/minimize.hpp"

namespace {

slcs::Model noisy_image(std::size_t side) {
  std::mt19937 rng(1234);
  slcs::Image img(side, side, {0, 0, 255});
  for (auto& px : img.pixels)
    if (rng() % 4 == 0) px = {255, 0, 0};
  return slcs::io::image_to_model(img);
}

void BM_RefineStepParallel(benchmark::State& state) {
  const slcs::Model m = noisy_image(static_cast<std::size_t>(state.range(0)));
  const slcs::Partition q = slcs::partition_refine(m).rounds[0];
  for (auto _ : state) benchmark::DoNotOptimize(slcs::refine_step(m, q));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.size()));
}

void BM_RefineStepSerial(benchmark::State& state) {
  const slcs::Model m = noisy_image(static_cast<std::size_t>(state.range(0)));
  const slcs::Partition q = slcs::partition_refine(m).rounds[0];
  for (auto _ : state) benchmark::DoNotOptimize(slcs::refine_step_serial(m, q));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.size()));
}

}  // namespace

BENCHMARK(BM_RefineStepParallel)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(BM_RefineStepSerial)->Arg(64)->Arg(256)->Arg(512);

BENCHMARK_MAIN();
