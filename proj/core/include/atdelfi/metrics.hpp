#pragma once

// Per-game statistics and first-occurrence timing over a trace corpus.

#include <optional>
#include <string>
#include <vector>

#include "atdelfi/analysis.hpp"
#include "atdelfi/demos.hpp"

namespace atdelfi::metrics {

using graph::MechanicId;

struct StatsRecord {
  int sprite_count = 0;
  int hierarchy_depth = 0;
  int interaction_count = 0;
  int win_length = 0;   // mechanics on the longest win path
  int lose_length = 0;  // mechanics on the longest lose path
  int merged_interactions = 0;  // primitives folded into surviving merged mechanics
  int point_rules = 0;

  int win_node_length() const { return 3 * win_length; }
  int lose_node_length() const { return 3 * lose_length; }
  bool operator==(const StatsRecord&) const = default;
};

StatsRecord graph_stats(const vgdl::GameDescription& game, const analysis::AnalysisResult& analysis);

/// Earliest tick at which any primitive behind `mechanic` fired in the trace.
std::optional<int> first_occurrence(const sim::EventTrace& trace, const graph::MechanicGraph& g, MechanicId mechanic);

/// First-occurrence ticks of each path mechanic in one trace.
std::vector<std::optional<int>> path_occurrences(const sim::EventTrace& trace, const graph::MechanicGraph& g,
                                                 const analysis::CriticalPath& path);

struct PathTiming {
  std::size_t terminal = 0;  // termination index
  std::vector<MechanicId> mechanics;
  std::vector<std::optional<double>> mean_tick;  // per mechanic; nullopt when never observed
  int traces = 0;  // Won traces that ended on this terminal
};

struct GameReport {
  std::string game;
  StatsRecord stats;
  int episodes = 0;
  int won = 0;
  std::vector<PathTiming> timings;  // one per win path
  bool timing_available() const { return won > 0; }
};

struct CorpusReport {
  std::vector<GameReport> games;
};

/// Means use Won traces whose ending terminal is the path's terminal.
GameReport game_report(const std::string& name, const vgdl::GameDescription& game,
                       const analysis::AnalysisResult& analysis, const demos::TraceStore& traces);

/// Mean rounded to two decimals, as text.
std::string format_mean(double v);

/// Tab-separated table: one row per game, then one row per win-path mechanic timing.
std::string to_tsv(const CorpusReport& report);

}  // namespace atdelfi::metrics
