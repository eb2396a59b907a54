#pragma once

// Glue used by the CLI and tests: load a game with its levels, analyse it,
// and play an agent mix to fill a trace store.

#include <string>
#include <vector>

#include "atdelfi/analysis.hpp"
#include "atdelfi/demos.hpp"
#include "atdelfi/simulator.hpp"

namespace atdelfi {

struct LoadedGame {
  std::string name;  // file stem
  vgdl::GameDescription game;
  graph::MechanicGraph graph;  // as built, before merging
  std::vector<vgdl::LevelGrid> levels;
};

/// Level files next to a game: `<stem>_lvl*.txt`, sorted by name.
std::vector<std::string> discover_levels(const std::string& game_path);

/// Parses the game and the given levels (or the discovered ones when empty).
LoadedGame load_game(const std::string& game_path, const std::vector<std::string>& level_paths = {});

/// Games in a corpus directory (`*.vgdl`), sorted by name.
std::vector<std::string> discover_games(const std::string& dir);

struct EpisodePlan {
  std::vector<sim::AgentConfig> agents{{sim::AgentKind::DoNothing},
                                       {sim::AgentKind::OneStepLookahead},
                                       {sim::AgentKind::BudgetedRollout}};
  int episodes = 2;  // seeds per (agent, level)
  std::uint64_t first_seed = 1;
  int max_ticks = sim::kDefaultMaxTicks;
};

/// Episode count is agents x levels x episodes; seeds run first_seed upward.
demos::TraceStore run_plan(const sim::Simulator& sim, const std::vector<vgdl::LevelGrid>& levels,
                           const EpisodePlan& plan);

/// Comma separated agent names, e.g. "doNothing,budgetedRollout".
std::vector<sim::AgentConfig> parse_agents(const std::string& list);

}  // namespace atdelfi
