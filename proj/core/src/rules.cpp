// Compiles a game description into the simulator's rule tables.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "atdelfi/simulator.hpp"

namespace atdelfi::sim {

using vgdl::SpriteClass;

namespace {

int int_param(const vgdl::Params& p, const std::string& key, int fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw SimulationError("parameter " + key + "=" + it->second + " is not an integer");
  }
}

double real_param(const vgdl::Params& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw SimulationError("parameter " + key + "=" + it->second + " is not a number");
  }
}

bool supported(SpriteClass c) { return c != SpriteClass::Opaque && c != SpriteClass::Abstract; }

}  // namespace

Simulator::Simulator(const vgdl::GameDescription& game, const graph::MechanicGraph& graph, std::string name)
    : name_(std::move(name)), graph_(graph) {
  const int n = static_cast<int>(game.sprites.size());
  types_.resize(static_cast<std::size_t>(n));
  isa_.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  const auto avatars = game.avatars();
  for (int i = 0; i < n; ++i) {
    const auto& def = game.sprites[static_cast<std::size_t>(i)];
    auto& t = types_[static_cast<std::size_t>(i)];
    const auto params = game.resolved_params(def.name);
    t.name = def.name;
    t.cls = def.sprite_class;
    if (auto it = params.find("stype"); it != params.end()) t.stype = static_cast<int>(*game.index_of(it->second));
    t.cooldown = std::max(1, int_param(params, "cooldown", 1));
    t.prob = real_param(params, "prob", 1.0);
    t.total = int_param(params, "total", 0);
    const double speed = real_param(params, "speed", 1.0);
    t.move_interval = speed > 0 ? std::max(1, static_cast<int>(std::lround(1.0 / speed))) : 1;
    std::string orient = params.count("orientation") ? params.at("orientation") : "";
    if (orient == "UP") t.dy = -1;
    else if (orient == "DOWN") t.dy = 1;
    else if (orient == "LEFT") t.dx = -1;
    else if (orient == "RIGHT" || t.cls == SpriteClass::Missile || t.cls == SpriteClass::Bomber) t.dx = 1;
    else if (vgdl::is_avatar_class(t.cls)) t.dy = -1;
    t.singleton = params.count("singleton") && params.at("singleton") == "True";
    t.avatar = std::find(avatars.begin(), avatars.end(), def.name) != avatars.end();
    t.glyph = static_cast<char>(std::tolower(static_cast<unsigned char>(def.name.front())));
    for (const auto& [ch, names] : game.level_mapping) {
      if (std::find(names.begin(), names.end(), def.name) != names.end()) {
        t.glyph = ch;
        break;
      }
    }
    if (t.avatar) t.glyph = static_cast<char>(std::toupper(static_cast<unsigned char>(t.glyph)));
    t.input_rule = graph_.input_rule_for(i);
    t.behavior = graph_.behavior_for(i);
    for (int j = 0; j < n; ++j) {
      isa_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          game.is_a(def.name, game.sprites[static_cast<std::size_t>(j)].name) ? 1 : 0;
    }
  }

  // Every sprite that can come into existence must have simulated behavior.
  std::set<int> reachable;
  for (const auto& [ch, names] : game.level_mapping) {
    for (const auto& nm : names) {
      reachable.insert(static_cast<int>(*game.index_of(nm)));
      mapping_[ch].push_back(static_cast<int>(*game.index_of(nm)));
    }
  }
  for (std::size_t i = 0; i < game.interactions.size(); ++i) {
    const auto& in = game.interactions[i];
    Rule r;
    r.subject = static_cast<int>(*game.index_of(in.subject));
    r.object = in.object == vgdl::kEndOfScreen ? -1 : static_cast<int>(*game.index_of(in.object));
    r.score = in.score_delta;
    r.mechanic = graph_.interaction_mechanics.at(i);
    if (auto it = in.params.find("stype"); it != in.params.end()) r.stype = static_cast<int>(*game.index_of(it->second));
    if (in.effect == "killSprite") r.effect = Effect::Kill;
    else if (in.effect == "transformTo") r.effect = Effect::TransformTo;
    else if (in.effect == "cloneSprite") r.effect = Effect::Clone;
    else if (in.effect == "spawn") r.effect = Effect::Spawn;
    else if (in.effect == "stepBack") r.effect = Effect::StepBack;
    else if (in.effect == "turnAround") r.effect = Effect::TurnAround;
    else if (in.effect == "reverseDirection") r.effect = Effect::ReverseDirection;
    else throw UnsupportedEffect("effect '" + in.effect + "' is not simulated");
    if ((r.effect == Effect::TransformTo || r.effect == Effect::Spawn) && r.stype < 0) {
      throw SimulationError("effect '" + in.effect + "' needs stype");
    }
    if (r.stype >= 0) reachable.insert(r.stype);
    rules_.push_back(r);
  }
  for (std::size_t i = 0; i < game.terminations.size(); ++i) {
    const auto& td = game.terminations[i];
    Terminal t{td.kind, {}, td.limit, td.win, graph_.termination_mechanics.at(i)};
    for (const auto& nm : td.sprites) t.types.push_back(static_cast<int>(*game.index_of(nm)));
    terminals_.push_back(std::move(t));
  }

  // Close over spawn targets of reachable sprites.
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : std::vector<int>(reachable.begin(), reachable.end())) {
      const auto& t = types_[static_cast<std::size_t>(i)];
      bool spawns = t.avatar || vgdl::is_spawner_class(t.cls);
      if (spawns && t.stype >= 0 && reachable.insert(t.stype).second) grew = true;
    }
  }
  for (int i : reachable) {
    const auto& t = types_[static_cast<std::size_t>(i)];
    if (!supported(t.cls)) {
      throw UnsupportedSpriteClass("sprite '" + t.name + "' has class " +
                                   (game.sprites[static_cast<std::size_t>(i)].class_token.value_or(
                                       std::string(vgdl::to_string(t.cls)))) +
                                   ", which the simulator does not support");
    }
  }
}

bool Simulator::is_a(int type, int ancestor) const {
  return isa_[static_cast<std::size_t>(type)][static_cast<std::size_t>(ancestor)] != 0;
}

bool Simulator::is_avatar(int type) const { return types_[static_cast<std::size_t>(type)].avatar; }

}  // namespace atdelfi::sim
