#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "atdelfi/instructions.hpp"
#include "atdelfi/pipeline.hpp"

using namespace atdelfi;

namespace {

const LoadedGame& game(const std::string& name) {
  static std::map<std::string, LoadedGame> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, load_game(std::string(ATDELFI_GAMES_DIR) + "/" + name + ".vgdl")).first;
  return it->second;
}

std::string source(const std::string& name) {
  std::ifstream in(std::string(ATDELFI_GAMES_DIR) + "/" + name + ".vgdl");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void BM_Parse(benchmark::State& state) {
  const auto src = source("aliens");
  for (auto _ : state) benchmark::DoNotOptimize(vgdl::parse_game(src));
}
BENCHMARK(BM_Parse);

void BM_BuildAndAnalyze(benchmark::State& state) {
  const auto& g = game("aliens").game;
  for (auto _ : state) {
    auto r = analysis::analyze(graph::build_graph(g));
    benchmark::DoNotOptimize(instructions::render_doc(r));
  }
}
BENCHMARK(BM_BuildAndAnalyze);

void BM_Step(benchmark::State& state) {
  const auto& lg = game("aliens");
  sim::Simulator sim(lg.game, lg.graph, lg.name);
  auto fresh = sim.initial_state(lg.levels[0], 1);
  auto s = fresh;
  for (auto _ : state) {
    if (s.status != sim::Status::Running) {
      state.PauseTiming();
      s = fresh;
      state.ResumeTiming();
    }
    sim.step(s, sim::Action::Use);
  }
}
BENCHMARK(BM_Step);

void BM_Episode(benchmark::State& state) {
  const auto& lg = game("aliens");
  sim::Simulator sim(lg.game, lg.graph, lg.name);
  const auto kind = static_cast<sim::AgentKind>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sim::run_episode(sim, lg.levels[0], {kind}, seed++, 500));
}
BENCHMARK(BM_Episode)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
