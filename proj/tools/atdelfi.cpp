// atdelfi: tutorial generation from VGDL games.
//
// Exit codes: 0 success, 2 game or level could not be read or parsed,
// 3 analysis or simulation failed.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "atdelfi/card.hpp"
#include "atdelfi/instructions.hpp"
#include "atdelfi/metrics.hpp"
#include "atdelfi/pipeline.hpp"
#include "atdelfi/serialize.hpp"

namespace fs = std::filesystem;
using namespace atdelfi;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitAnalysis = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

LoadedGame load_or_throw(const std::string& game, const std::vector<std::string>& levels) {
  if (!fs::exists(game)) throw InputError("no such file: " + game);
  for (const auto& l : levels) {
    if (!fs::exists(l)) throw InputError("no such file: " + l);
  }
  return load_game(game, levels);
}

analysis::PathStrategy strategy_from(const std::string& s) {
  return s == "shortest" ? analysis::PathStrategy::Shortest : analysis::PathStrategy::LongestShortest;
}

void print_warnings(const Diagnostics& diag) {
  for (const auto& w : diag.warnings) std::cerr << "warning: " << w << "\n";
}

struct GenerateOpts {
  std::string game;
  std::vector<std::string> levels;
  std::string format = "card";
  bool emit_graph = false;
  bool emit_analysis = false;
  bool keep_traces = false;
  std::uint64_t seed = 1;
  std::string agents = "doNothing,oneStepLookahead,budgetedRollout";
  int episodes = 2;
  int max_ticks = sim::kDefaultMaxTicks;
  std::string path_strategy = "longest-shortest";
  std::string outdir = "atdelfi-out";
};

int generate(const GenerateOpts& o) {
  auto loaded = load_or_throw(o.game, o.levels);
  Diagnostics diag;
  auto result = analysis::analyze(loaded.graph, strategy_from(o.path_strategy), &diag);
  auto doc = instructions::render_doc(result, &diag);
  print_warnings(diag);
  const fs::path out(o.outdir);
  if (o.emit_graph) write_file(out / "graph.json", io::graph_json(loaded.graph));
  if (o.emit_analysis) write_file(out / "analysis.json", io::analysis_json(result));
  if (o.format == "text") {
    std::cout << instructions::to_text(doc);
    return 0;
  }

  sim::Simulator simulator(loaded.game, loaded.graph, loaded.name);
  EpisodePlan plan;
  plan.agents = parse_agents(o.agents);
  plan.episodes = o.episodes;
  plan.first_seed = o.seed;
  plan.max_ticks = o.max_ticks;
  auto store = run_plan(simulator, loaded.levels, plan);
  if (o.keep_traces) {
    for (const auto& t : store.traces()) {
      write_file(out / "traces" / loaded.name / (t.level + "-" + t.agent + "-" + std::to_string(t.seed) + ".json"),
                 io::trace_json(t));
    }
  }
  auto clips = demos::extract_demos(result, store);
  for (const auto& c : clips) {
    if (c.missing) continue;
    write_file(out / "clips" / (std::to_string(c.mechanic) + "-" + std::to_string(c.primitive) + ".txt"),
               demos::to_animation(c));
  }
  auto card = card::assemble_card(doc, clips, loaded.name);
  write_file(out / "card.json", io::card_json(card));
  write_file(out / "card.md", card::to_markdown(card));

  int won = 0, missing = 0;
  for (const auto& t : store.traces()) won += t.outcome == sim::Outcome::Won;
  for (const auto& c : clips) missing += c.missing;
  std::cout << loaded.name << ": " << store.traces().size() << " episodes, " << won << " won, " << clips.size()
            << " clips (" << missing << " missing) -> " << (out / "card.md").string() << "\n";
  return 0;
}

int stats(const std::string& game, bool as_json) {
  auto loaded = load_or_throw(game, {});
  auto result = analysis::analyze(loaded.graph);
  auto s = metrics::graph_stats(loaded.game, result);
  if (as_json) {
    std::cout << io::stats_json(s, loaded.name) << "\n";
    return 0;
  }
  std::cout << "game=" << loaded.name << "\n"
            << "sprite_count=" << s.sprite_count << "\n"
            << "hierarchy_depth=" << s.hierarchy_depth << "\n"
            << "interaction_count=" << s.interaction_count << "\n"
            << "win_length=" << s.win_length << "\n"
            << "lose_length=" << s.lose_length << "\n"
            << "win_node_length=" << s.win_node_length() << "\n"
            << "lose_node_length=" << s.lose_node_length() << "\n"
            << "merged_interactions=" << s.merged_interactions << "\n"
            << "point_rules=" << s.point_rules << "\n";
  return 0;
}

int simulate(const std::string& game, const std::string& level, const std::string& agent, std::uint64_t seed,
             int max_ticks, const std::string& output) {
  auto loaded = load_or_throw(game, {level});
  auto kind = sim::agent_from_string(agent);
  if (!kind) throw std::invalid_argument("unknown agent '" + agent + "'");
  sim::Simulator simulator(loaded.game, loaded.graph, loaded.name);
  auto trace = sim::run_episode(simulator, loaded.levels.front(), {*kind}, seed, max_ticks);
  if (output.empty()) {
    std::cout << io::trace_json(trace) << "\n";
  } else {
    write_file(output, io::trace_json(trace));
  }
  return 0;
}

int report(const std::string& corpus, const std::string& outdir, const EpisodePlan& plan) {
  if (!fs::is_directory(corpus)) throw InputError("not a directory: " + corpus);
  metrics::CorpusReport rep;
  for (const auto& path : discover_games(corpus)) {
    auto loaded = load_or_throw(path, {});
    auto result = analysis::analyze(loaded.graph);
    sim::Simulator simulator(loaded.game, loaded.graph, loaded.name);
    auto store = run_plan(simulator, loaded.levels, plan);
    rep.games.push_back(metrics::game_report(loaded.name, loaded.game, result, store));
  }
  std::cout << metrics::to_tsv(rep);
  write_file(fs::path(outdir) / "report.json", io::report_json(rep));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate game tutorials from VGDL descriptions"};
  app.require_subcommand(1);

  GenerateOpts gen;
  auto* g = app.add_subcommand("generate", "Build the tutorial text or card for a game");
  g->add_option("game", gen.game, "Game description (.vgdl)")->required();
  g->add_option("levels", gen.levels, "Level files (default: <game>_lvl*.txt next to the game)");
  g->add_option("--format", gen.format, "text: instructions only; card: play episodes and build the card")
      ->check(CLI::IsMember({"text", "card"}));
  g->add_flag("--emit-graph", gen.emit_graph, "Write graph.json to the output directory");
  g->add_flag("--emit-analysis", gen.emit_analysis, "Write analysis.json to the output directory");
  g->add_flag("--keep-traces", gen.keep_traces, "Write every episode trace under traces/");
  g->add_option("--seed", gen.seed, "First episode seed");
  g->add_option("--agents", gen.agents, "Comma separated agents (doNothing, oneStepLookahead, budgetedRollout)");
  g->add_option("--episodes", gen.episodes, "Seeds per agent and level")->check(CLI::PositiveNumber);
  g->add_option("--max-ticks", gen.max_ticks, "Episode length cap")->check(CLI::PositiveNumber);
  g->add_option("--path-strategy", gen.path_strategy, "Win path selection")
      ->check(CLI::IsMember({"shortest", "longest-shortest"}));
  g->add_option("-o,--outdir", gen.outdir, "Output directory");

  std::string stats_game;
  bool stats_json = false;
  auto* st = app.add_subcommand("stats", "Print the game's graph statistics");
  st->add_option("game", stats_game, "Game description (.vgdl)")->required();
  st->add_flag("--json", stats_json, "Print a JSON document instead of key=value lines");

  std::string sim_game, sim_level, sim_agent = "doNothing", sim_out;
  std::uint64_t sim_seed = 1;
  int sim_ticks = sim::kDefaultMaxTicks;
  auto* sm = app.add_subcommand("simulate", "Play one episode and print its trace");
  sm->add_option("game", sim_game, "Game description (.vgdl)")->required();
  sm->add_option("level", sim_level, "Level file")->required();
  sm->add_option("--agent", sim_agent, "doNothing, oneStepLookahead or budgetedRollout");
  sm->add_option("--seed", sim_seed, "Episode seed");
  sm->add_option("--max-ticks", sim_ticks, "Episode length cap")->check(CLI::PositiveNumber);
  sm->add_option("-o,--output", sim_out, "Write the trace here instead of stdout");

  std::string corpus, report_out = "atdelfi-out";
  EpisodePlan plan;
  std::string report_agents = "doNothing,oneStepLookahead,budgetedRollout";
  auto* rp = app.add_subcommand("report", "Statistics and first-occurrence timing for a corpus");
  rp->add_option("corpus", corpus, "Directory of .vgdl games with their level files")->required();
  rp->add_option("-o,--outdir", report_out, "Directory for report.json");
  rp->add_option("--episodes", plan.episodes, "Seeds per agent and level")->check(CLI::PositiveNumber);
  rp->add_option("--seed", plan.first_seed, "First episode seed");
  rp->add_option("--agents", report_agents, "Comma separated agents");
  rp->add_option("--max-ticks", plan.max_ticks, "Episode length cap")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (g->parsed()) return generate(gen);
    if (st->parsed()) return stats(stats_game, stats_json);
    if (sm->parsed()) return simulate(sim_game, sim_level, sim_agent, sim_seed, sim_ticks, sim_out);
    if (rp->parsed()) {
      plan.agents = parse_agents(report_agents);
      return report(corpus, report_out, plan);
    }
  } catch (const vgdl::VgdlError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAnalysis;
  }
  return 0;
}
