#include "atdelfi/metrics.hpp"

#include <algorithm>
#include <cstdio>

namespace atdelfi::metrics {

StatsRecord graph_stats(const vgdl::GameDescription& game, const analysis::AnalysisResult& analysis) {
  StatsRecord r;
  r.sprite_count = static_cast<int>(game.sprites.size());
  r.hierarchy_depth = vgdl::hierarchy_depth(game);
  r.interaction_count = static_cast<int>(game.interactions.size());
  for (const auto& p : analysis.win_paths) r.win_length = std::max(r.win_length, static_cast<int>(p.mechanics.size()));
  for (const auto& p : analysis.lose_paths) r.lose_length = std::max(r.lose_length, static_cast<int>(p.mechanics.size()));
  for (const auto& m : analysis.merged.mechanics) {
    if (m.active() && !m.merged_from.empty()) r.merged_interactions += static_cast<int>(m.merged_from.size());
  }
  r.point_rules = static_cast<int>(analysis.point_mechanics.size());
  return r;
}

std::optional<int> first_occurrence(const sim::EventTrace& trace, const graph::MechanicGraph& g, MechanicId mechanic) {
  const auto prims = analysis::primitives_of(g, mechanic);
  for (const auto& e : trace.events) {
    if (std::find(prims.begin(), prims.end(), e.mechanic) != prims.end()) return e.tick;
  }
  return std::nullopt;
}

std::vector<std::optional<int>> path_occurrences(const sim::EventTrace& trace, const graph::MechanicGraph& g,
                                                 const analysis::CriticalPath& path) {
  std::vector<std::optional<int>> out;
  for (MechanicId m : path.mechanics) out.push_back(first_occurrence(trace, g, m));
  return out;
}

GameReport game_report(const std::string& name, const vgdl::GameDescription& game,
                       const analysis::AnalysisResult& analysis, const demos::TraceStore& traces) {
  GameReport r;
  r.game = name;
  r.stats = graph_stats(game, analysis);
  r.episodes = static_cast<int>(traces.traces().size());
  for (const auto& t : traces.traces()) r.won += t.outcome == sim::Outcome::Won ? 1 : 0;
  const auto& g = analysis.merged;
  for (const auto& path : analysis.win_paths) {
    PathTiming timing;
    timing.terminal = path.terminal;
    timing.mechanics = path.mechanics;
    const MechanicId terminal = g.termination_mechanics.at(path.terminal);
    std::vector<long long> sums(path.mechanics.size(), 0);
    std::vector<int> counts(path.mechanics.size(), 0);
    for (const auto& t : traces.traces()) {
      if (t.outcome != sim::Outcome::Won || t.terminal != terminal) continue;
      ++timing.traces;
      auto occ = path_occurrences(t, g, path);
      for (std::size_t i = 0; i < occ.size(); ++i) {
        if (!occ[i]) continue;
        sums[i] += *occ[i];
        ++counts[i];
      }
    }
    for (std::size_t i = 0; i < sums.size(); ++i) {
      if (counts[i] == 0) {
        timing.mean_tick.push_back(std::nullopt);
      } else {
        timing.mean_tick.push_back(static_cast<double>(sums[i]) / counts[i]);
      }
    }
    r.timings.push_back(std::move(timing));
  }
  return r;
}

std::string format_mean(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string to_tsv(const CorpusReport& report) {
  std::string out =
      "game\tsprite_count\thierarchy_depth\tinteraction_count\twin_length\tlose_length\t"
      "merged_interactions\tpoint_rules\tepisodes\twon\n";
  for (const auto& g : report.games) {
    const auto& s = g.stats;
    out += g.game;
    for (int v : {s.sprite_count, s.hierarchy_depth, s.interaction_count, s.win_length, s.lose_length,
                  s.merged_interactions, s.point_rules, g.episodes, g.won}) {
      out += "\t" + std::to_string(v);
    }
    out += "\n";
  }
  out += "\ngame\tterminal\tposition\tmechanic\tmean_first_tick\twon_traces\n";
  for (const auto& g : report.games) {
    for (const auto& t : g.timings) {
      for (std::size_t i = 0; i < t.mechanics.size(); ++i) {
        out += g.game + "\t" + std::to_string(t.terminal) + "\t" + std::to_string(i) + "\t" +
               std::to_string(t.mechanics[i]) + "\t" +
               (g.timing_available() && t.mean_tick[i] ? format_mean(*t.mean_tick[i]) : std::string("n/a")) +
               "\t" + std::to_string(t.traces) + "\n";
      }
    }
  }
  return out;
}

}  // namespace atdelfi::metrics
