#include "atdelfi/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

namespace atdelfi {

namespace fs = std::filesystem;

std::vector<std::string> discover_levels(const std::string& game_path) {
  const fs::path game(game_path);
  const std::string prefix = game.stem().string() + "_lvl";
  std::vector<std::string> out;
  const fs::path dir = game.has_parent_path() ? game.parent_path() : fs::path(".");
  if (!fs::is_directory(dir)) return out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (entry.is_regular_file() && name.starts_with(prefix) && entry.path().extension() == ".txt") {
      out.push_back(entry.path().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LoadedGame load_game(const std::string& game_path, const std::vector<std::string>& level_paths) {
  LoadedGame g;
  g.name = fs::path(game_path).stem().string();
  g.game = vgdl::load_game_file(game_path);
  g.graph = graph::build_graph(g.game);
  for (const auto& p : level_paths.empty() ? discover_levels(game_path) : level_paths) {
    g.levels.push_back(vgdl::load_level_file(p, g.game));
  }
  return g;
}

std::vector<std::string> discover_games(const std::string& dir) {
  std::vector<std::string> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".vgdl") out.push_back(entry.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

demos::TraceStore run_plan(const sim::Simulator& sim, const std::vector<vgdl::LevelGrid>& levels,
                           const EpisodePlan& plan) {
  demos::TraceStore store;
  for (const auto& agent : plan.agents) {
    for (const auto& level : levels) {
      for (int e = 0; e < plan.episodes; ++e) {
        store.add(sim::run_episode(sim, level, agent, plan.first_seed + static_cast<std::uint64_t>(e),
                                   plan.max_ticks));
      }
    }
  }
  return store;
}

std::vector<sim::AgentConfig> parse_agents(const std::string& list) {
  std::vector<sim::AgentConfig> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto kind = sim::agent_from_string(item);
    if (!kind) throw std::invalid_argument("unknown agent '" + item + "'");
    out.push_back({*kind});
  }
  return out;
}

}  // namespace atdelfi
