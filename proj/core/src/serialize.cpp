#include "atdelfi/serialize.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace atdelfi::io {

using nlohmann::json;

namespace {

std::string join_rows(const sim::Grid& g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out += '\n';
    out += g[i];
  }
  return out;
}

sim::Grid split_rows(const std::string& text) {
  sim::Grid g;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string::npos) nl = text.size();
    g.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return g;
}

json mechanic_json(const graph::MechanicGraph& g, const graph::Mechanic& m) {
  json j;
  j["id"] = m.id;
  j["inputs"] = m.inputs;
  j["condition"] = m.condition;
  j["action"] = m.action;
  j["outputs"] = m.outputs;
  j["condition_kind"] = graph::to_string(g.condition(m).kind);
  j["action_kind"] = graph::to_string(g.action(m).kind);
  j["effect"] = g.action(m).effect;
  j["score_delta"] = m.score_delta;
  j["origin"] = {{"kind", graph::to_string(m.origin.kind)}, {"index", m.origin.index}};
  j["merged_from"] = m.merged_from;
  j["absorbed_by"] = m.absorbed_by ? json(*m.absorbed_by) : json(nullptr);
  return j;
}

json path_json(const analysis::CriticalPath& p) {
  json j;
  j["kind"] = p.kind == analysis::PathKind::Win ? "win" : "lose";
  j["terminal"] = p.terminal;
  j["mechanics"] = p.mechanics;
  j["avatar"] = p.avatar ? json(*p.avatar) : json(nullptr);
  j["incomplete"] = p.incomplete;
  return j;
}

json clip_json(const demos::DemoClip& c) {
  json j;
  j["mechanic"] = c.mechanic;
  j["primitive"] = c.primitive;
  j["missing"] = c.missing;
  if (c.source) {
    j["source"] = {{"agent", c.source->agent}, {"level", c.source->level}, {"seed", c.source->seed},
                   {"tick", c.source->tick}};
  } else {
    j["source"] = nullptr;
  }
  json frames = json::array();
  for (const auto& f : c.frames) frames.push_back(join_rows(f));
  j["frames"] = frames;
  return j;
}

json stats_object(const metrics::StatsRecord& s) {
  return {{"sprite_count", s.sprite_count},
          {"hierarchy_depth", s.hierarchy_depth},
          {"interaction_count", s.interaction_count},
          {"win_length", s.win_length},
          {"lose_length", s.lose_length},
          {"win_node_length", s.win_node_length()},
          {"lose_node_length", s.lose_node_length()},
          {"merged_interactions", s.merged_interactions},
          {"point_rules", s.point_rules}};
}

}  // namespace

std::string graph_json(const graph::MechanicGraph& g) {
  json j;
  j["schema"] = kGraphSchema;
  json nodes = json::array();
  for (const auto& n : g.nodes) {
    json jn{{"id", n.id}, {"kind", graph::to_string(n.kind)}, {"label", n.label}};
    if (const auto* o = std::get_if<graph::ObjectInfo>(&n.payload)) {
      jn["sprite_class"] = vgdl::to_string(o->sprite_class);
      jn["parent"] = o->parent;
      jn["builtin"] = o->builtin;
    }
    nodes.push_back(std::move(jn));
  }
  j["nodes"] = nodes;
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({e.from, e.to});
  j["edges"] = edges;
  json mechs = json::array();
  for (const auto& m : g.mechanics) mechs.push_back(mechanic_json(g, m));
  j["mechanics"] = mechs;
  j["avatars"] = g.avatars;
  return j.dump(2);
}

std::string analysis_json(const analysis::AnalysisResult& a) {
  json j;
  j["schema"] = kAnalysisSchema;
  json controls = json::array();
  for (const auto& c : a.controls) {
    controls.push_back({{"avatar", c.avatar},
                        {"avatar_class", vgdl::to_string(c.avatar_class)},
                        {"movement_text", c.movement_text},
                        {"action_text", c.action_text ? json(*c.action_text) : json(nullptr)}});
  }
  j["controls"] = controls;
  json win = json::array(), lose = json::array();
  for (const auto& p : a.win_paths) win.push_back(path_json(p));
  for (const auto& p : a.lose_paths) lose.push_back(path_json(p));
  j["win_paths"] = win;
  j["lose_paths"] = lose;
  j["point_mechanics"] = a.point_mechanics;
  json merges = json::array();
  for (const auto& m : a.merged.mechanics) {
    if (!m.merged_from.empty()) merges.push_back(mechanic_json(a.merged, m));
  }
  j["merges"] = merges;
  return j.dump(2);
}

std::string trace_json(const sim::EventTrace& t) {
  json j;
  j["schema"] = kTraceSchema;
  j["game"] = t.game;
  j["level"] = t.level;
  j["agent"] = t.agent;
  j["seed"] = t.seed;
  j["max_ticks"] = t.max_ticks;
  j["outcome"] = sim::to_string(t.outcome);
  j["final_score"] = t.final_score;
  j["final_tick"] = t.final_tick;
  j["terminal"] = t.terminal ? json(*t.terminal) : json(nullptr);
  json events = json::array();
  for (const auto& e : t.events) {
    events.push_back({{"tick", e.tick},
                      {"mechanic", e.mechanic},
                      {"sprites_involved", e.sprites_involved},
                      {"score_delta", e.score_delta},
                      {"snapshot", join_rows(t.snapshot(e.tick))}});
  }
  j["events"] = events;
  json frames = json::object();
  for (const auto& [tick, grid] : t.frames) frames[std::to_string(tick)] = join_rows(grid);
  j["frames"] = frames;
  return j.dump(2);
}

sim::EventTrace trace_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.value("schema", "") != kTraceSchema) throw std::runtime_error("not a trace document");
  sim::EventTrace t;
  t.game = j.at("game").get<std::string>();
  t.level = j.at("level").get<std::string>();
  t.agent = j.at("agent").get<std::string>();
  t.seed = j.at("seed").get<std::uint64_t>();
  t.max_ticks = j.at("max_ticks").get<int>();
  auto outcome = sim::outcome_from_string(j.at("outcome").get<std::string>());
  if (!outcome) throw std::runtime_error("unknown outcome");
  t.outcome = *outcome;
  t.final_score = j.at("final_score").get<int>();
  t.final_tick = j.at("final_tick").get<int>();
  if (!j.at("terminal").is_null()) t.terminal = j.at("terminal").get<int>();
  for (const auto& e : j.at("events")) {
    t.events.push_back({e.at("tick").get<int>(), e.at("mechanic").get<int>(),
                        e.at("sprites_involved").get<std::vector<int>>(), e.at("score_delta").get<int>()});
  }
  for (const auto& [tick, grid] : j.at("frames").items()) {
    t.frames.emplace(std::stoi(tick), split_rows(grid.get<std::string>()));
  }
  return t;
}

std::string card_json(const card::CardDocument& c) {
  json j;
  j["schema"] = kCardSchema;
  j["game"] = c.game;
  json sections = json::array();
  for (const auto& sec : c.sections) {
    json js;
    js["section"] = instructions::to_string(sec.section);
    js["note"] = sec.note ? json(*sec.note) : json(nullptr);
    json lines = json::array();
    for (const auto& l : sec.lines) {
      json jl;
      jl["text"] = l.text;
      jl["mechanic"] = l.mechanic ? json(*l.mechanic) : json(nullptr);
      jl["no_demo"] = l.no_demo;
      json clips = json::array();
      for (const auto& clip : l.clips) clips.push_back(clip_json(clip));
      jl["clips"] = clips;
      lines.push_back(std::move(jl));
    }
    js["lines"] = lines;
    sections.push_back(std::move(js));
  }
  j["sections"] = sections;
  return j.dump(2);
}

std::string stats_json(const metrics::StatsRecord& s, const std::string& game) {
  json j = stats_object(s);
  j["schema"] = kStatsSchema;
  j["game"] = game;
  return j.dump(2);
}

std::string report_json(const metrics::CorpusReport& r) {
  json j;
  j["schema"] = kReportSchema;
  json games = json::array();
  for (const auto& g : r.games) {
    json jg;
    jg["game"] = g.game;
    jg["stats"] = stats_object(g.stats);
    jg["episodes"] = g.episodes;
    jg["won"] = g.won;
    jg["timing_available"] = g.timing_available();
    json timings = json::array();
    for (const auto& t : g.timings) {
      json means = json::array();
      for (const auto& m : t.mean_tick) {
        means.push_back(g.timing_available() && m ? json(std::round(*m * 100.0) / 100.0) : json(nullptr));
      }
      timings.push_back({{"terminal", t.terminal}, {"mechanics", t.mechanics}, {"mean_first_tick", means},
                         {"won_traces", t.traces}});
    }
    jg["win_path_timing"] = timings;
    games.push_back(std::move(jg));
  }
  j["games"] = games;
  return j.dump(2);
}

}  // namespace atdelfi::io
