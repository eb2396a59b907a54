#include "atdelfi/mechanic_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace atdelfi::graph {

std::string_view to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Object: return "object";
    case NodeKind::Condition: return "condition";
    case NodeKind::Action: return "action";
  }
  return "object";
}

std::string_view to_string(ConditionKind k) {
  switch (k) {
    case ConditionKind::Collision: return "Collision";
    case ConditionKind::SpriteCounter: return "SpriteCounter";
    case ConditionKind::MultiSpriteCounter: return "MultiSpriteCounter";
    case ConditionKind::Timeout: return "Timeout";
    case ConditionKind::PlayerInput: return "PlayerInput";
    case ConditionKind::Behavior: return "Behavior";
  }
  return "Collision";
}

std::string_view to_string(ActionKind k) {
  switch (k) {
    case ActionKind::KillSprite: return "KillSprite";
    case ActionKind::TransformTo: return "TransformTo";
    case ActionKind::Spawn: return "Spawn";
    case ActionKind::StepBack: return "StepBack";
    case ActionKind::Win: return "Win";
    case ActionKind::Lose: return "Lose";
    case ActionKind::Other: return "Other";
  }
  return "Other";
}

std::string_view to_string(OriginKind k) {
  switch (k) {
    case OriginKind::Interaction: return "interaction";
    case OriginKind::Termination: return "termination";
    case OriginKind::InputRule: return "input";
    case OriginKind::Behavior: return "behavior";
    case OriginKind::Merged: return "merged";
  }
  return "interaction";
}

ActionKind action_kind_for_effect(std::string_view effect) {
  if (effect == "killSprite") return ActionKind::KillSprite;
  if (effect == "transformTo") return ActionKind::TransformTo;
  if (effect == "cloneSprite" || effect == "spawn") return ActionKind::Spawn;
  if (effect == "stepBack") return ActionKind::StepBack;
  return ActionKind::Other;
}

const ObjectInfo& MechanicGraph::object(NodeId id) const {
  return std::get<ObjectInfo>(nodes.at(static_cast<std::size_t>(id)).payload);
}

const ConditionInfo& MechanicGraph::condition(const Mechanic& m) const {
  return std::get<ConditionInfo>(nodes.at(static_cast<std::size_t>(m.condition)).payload);
}

const ActionInfo& MechanicGraph::action(const Mechanic& m) const {
  return std::get<ActionInfo>(nodes.at(static_cast<std::size_t>(m.action)).payload);
}

std::optional<NodeId> MechanicGraph::object_node(std::string_view sprite) const {
  for (const auto& n : nodes) {
    if (n.kind == NodeKind::Object && std::get<ObjectInfo>(n.payload).sprite == sprite) return n.id;
  }
  return std::nullopt;
}

std::vector<NodeId> MechanicGraph::children(NodeId id) const {
  std::vector<NodeId> out;
  for (const auto& n : nodes) {
    if (n.kind == NodeKind::Object && std::get<ObjectInfo>(n.payload).parent == id) out.push_back(n.id);
  }
  return out;
}

bool MechanicGraph::is_a(NodeId id, NodeId ancestor) const {
  for (NodeId cur = id; cur >= 0; cur = object(cur).parent) {
    if (cur == ancestor) return true;
  }
  return false;
}

int MechanicGraph::depth(NodeId id) const {
  int d = 0;
  for (NodeId cur = object(id).parent; cur >= 0; cur = object(cur).parent) ++d;
  return d;
}

bool MechanicGraph::is_terminal(const Mechanic& m) const {
  auto kind = action(m).kind;
  return kind == ActionKind::Win || kind == ActionKind::Lose;
}

std::vector<MechanicId> MechanicGraph::active_mechanics() const {
  std::vector<MechanicId> out;
  for (const auto& m : mechanics) {
    if (m.active()) out.push_back(m.id);
  }
  return out;
}

std::optional<MechanicId> MechanicGraph::input_rule_for(NodeId avatar) const {
  for (auto id : input_rules) {
    if (mechanics[static_cast<std::size_t>(id)].inputs.front() == avatar) return id;
  }
  return std::nullopt;
}

std::optional<MechanicId> MechanicGraph::behavior_for(NodeId sprite) const {
  for (auto id : behavior_rules) {
    if (mechanics[static_cast<std::size_t>(id)].inputs.front() == sprite) return id;
  }
  return std::nullopt;
}

std::optional<std::size_t> MechanicGraph::termination_index(MechanicId id) const {
  auto it = std::find(termination_mechanics.begin(), termination_mechanics.end(), id);
  if (it == termination_mechanics.end()) return std::nullopt;
  return static_cast<std::size_t>(it - termination_mechanics.begin());
}

std::vector<NodeId> derive_outputs(const MechanicGraph& g, const ActionInfo& action,
                                   const std::vector<NodeId>& inputs) {
  auto stype_node = [&]() -> std::optional<NodeId> {
    auto it = action.params.find("stype");
    if (it == action.params.end()) return std::nullopt;
    return g.object_node(it->second);
  };
  std::vector<NodeId> out;
  switch (action.kind) {
    case ActionKind::Win:
    case ActionKind::Lose:
      break;
    case ActionKind::TransformTo:
      out.push_back(inputs.front());
      if (auto s = stype_node()) out.push_back(*s);
      break;
    case ActionKind::Spawn: {
      auto s = stype_node();
      out.push_back(s ? *s : inputs.front());
      // Spawners with a finite budget disappear after their last spawn.
      if (auto it = action.params.find("total"); it != action.params.end() && it->second != "0") {
        out.push_back(inputs.front());
      }
      break;
    }
    case ActionKind::KillSprite:
    case ActionKind::StepBack:
    case ActionKind::Other:
      out.push_back(inputs.front());
      break;
  }
  return out;
}

std::string display_name(const MechanicGraph& g, NodeId id) {
  const auto& obj = g.object(id);
  if (vgdl::is_avatar_class(obj.sprite_class)) {
    return obj.sprite + " (" + std::string(vgdl::to_string(obj.sprite_class)) + ")";
  }
  if (obj.sprite_class == vgdl::SpriteClass::Opaque && obj.class_token &&
      obj.class_token->ends_with("Avatar")) {
    return obj.sprite + " (" + *obj.class_token + ")";
  }
  if (obj.parent >= 0) return obj.sprite + " (" + g.sprite(obj.parent) + ")";
  return obj.sprite;
}

namespace {

std::string condition_label(const MechanicGraph& g, const std::vector<NodeId>& inputs,
                            const ConditionInfo& c) {
  std::string names;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (i) names += ", ";
    names += g.sprite(inputs[i]);
  }
  switch (c.kind) {
    case ConditionKind::Collision: return "collide(" + names + ")";
    case ConditionKind::SpriteCounter:
    case ConditionKind::MultiSpriteCounter:
      return "count(" + names + ") <= " + std::to_string(c.limit);
    case ConditionKind::Timeout: return "time >= " + std::to_string(c.limit);
    case ConditionKind::PlayerInput: return "press space";
    case ConditionKind::Behavior: return "behavior(" + names + ")";
  }
  return names;
}

NodeId add_node(MechanicGraph& g, NodeKind kind, std::string label,
                std::variant<ObjectInfo, ConditionInfo, ActionInfo> payload) {
  const auto id = static_cast<NodeId>(g.nodes.size());
  g.nodes.push_back({id, kind, std::move(label), std::move(payload)});
  return id;
}

NodeId node_for(const MechanicGraph& g, const std::string& sprite) {
  if (sprite == vgdl::kEndOfScreen) return g.eos_node;
  auto id = g.object_node(sprite);
  if (!id) throw vgdl::ReferenceError(sprite, 0);
  return *id;
}

}  // namespace

MechanicId add_mechanic(MechanicGraph& g, std::vector<NodeId> inputs, ConditionInfo condition,
                        ActionInfo action, Origin origin) {
  Mechanic m;
  m.id = static_cast<MechanicId>(g.mechanics.size());
  m.outputs = derive_outputs(g, action, inputs);
  m.score_delta = action.score_delta;
  m.origin = origin;
  m.condition = add_node(g, NodeKind::Condition, condition_label(g, inputs, condition), condition);
  std::string action_label = action.effect;
  for (auto out : m.outputs) action_label += " " + g.sprite(out);
  m.action = add_node(g, NodeKind::Action, std::move(action_label), std::move(action));
  for (auto in : inputs) g.edges.push_back({in, m.condition});
  g.edges.push_back({m.condition, m.action});
  for (auto out : m.outputs) g.edges.push_back({m.action, out});
  m.inputs = std::move(inputs);
  g.mechanics.push_back(std::move(m));
  return g.mechanics.back().id;
}

MechanicGraph build_graph(const vgdl::GameDescription& game) {
  MechanicGraph g;
  for (const auto& s : game.sprites) {
    ObjectInfo info{s.name, s.sprite_class, s.class_token, -1, false, game.resolved_params(s.name)};
    if (s.parent) info.parent = static_cast<NodeId>(*game.index_of(*s.parent));
    add_node(g, NodeKind::Object, s.name, std::move(info));
  }
  g.time_node = add_node(g, NodeKind::Object, "Time",
                         ObjectInfo{"Time", vgdl::SpriteClass::Immovable, std::nullopt, -1, true, {}});
  if (game.uses_end_of_screen()) {
    g.eos_node = add_node(g, NodeKind::Object, std::string(vgdl::kEndOfScreen),
                          ObjectInfo{std::string(vgdl::kEndOfScreen), vgdl::SpriteClass::Immovable,
                                     std::nullopt, -1, true, {}});
  }
  for (const auto& name : game.avatars()) g.avatars.push_back(*g.object_node(name));

  for (std::size_t i = 0; i < game.interactions.size(); ++i) {
    const auto& in = game.interactions[i];
    ActionInfo action{action_kind_for_effect(in.effect), in.effect, in.params, in.score_delta};
    g.interaction_mechanics.push_back(add_mechanic(
        g, {node_for(g, in.subject), node_for(g, in.object)}, {ConditionKind::Collision, 0},
        std::move(action), {OriginKind::Interaction, static_cast<int>(i)}));
  }

  for (std::size_t i = 0; i < game.terminations.size(); ++i) {
    const auto& t = game.terminations[i];
    std::vector<NodeId> inputs;
    ConditionInfo cond{ConditionKind::Timeout, t.limit};
    switch (t.kind) {
      case vgdl::TerminationKind::Timeout:
        inputs.push_back(g.time_node);
        break;
      case vgdl::TerminationKind::SpriteCounter:
        cond.kind = ConditionKind::SpriteCounter;
        break;
      case vgdl::TerminationKind::MultiSpriteCounter:
        cond.kind = ConditionKind::MultiSpriteCounter;
        break;
    }
    for (const auto& name : t.sprites) inputs.push_back(node_for(g, name));
    ActionInfo action{t.win ? ActionKind::Win : ActionKind::Lose, t.win ? "win" : "lose", {}, 0};
    g.termination_mechanics.push_back(add_mechanic(g, std::move(inputs), cond, std::move(action),
                                                   {OriginKind::Termination, static_cast<int>(i)}));
  }

  for (std::size_t i = 0; i < game.sprites.size(); ++i) {
    const auto& s = game.sprites[i];
    if (!vgdl::is_shooting_avatar_class(s.sprite_class)) continue;
    if (std::find(g.avatars.begin(), g.avatars.end(), static_cast<NodeId>(i)) == g.avatars.end()) continue;
    auto params = game.resolved_params(s.name);
    auto stype = params.find("stype");
    if (stype == params.end()) continue;
    ActionInfo action{ActionKind::Spawn, "shoot", {{"stype", stype->second}}, 0};
    g.input_rules.push_back(add_mechanic(g, {static_cast<NodeId>(i)}, {ConditionKind::PlayerInput, 0},
                                         std::move(action),
                                         {OriginKind::InputRule, static_cast<int>(i)}));
  }

  auto mapped = [&](const std::string& name) {
    for (const auto& [ch, names] : game.level_mapping) {
      if (std::find(names.begin(), names.end(), name) != names.end()) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < game.sprites.size(); ++i) {
    const auto& s = game.sprites[i];
    if (!vgdl::is_spawner_class(s.sprite_class)) continue;
    if (game.has_children(s.name) && !mapped(s.name)) continue;
    auto params = game.resolved_params(s.name);
    auto stype = params.find("stype");
    if (stype == params.end()) continue;
    ActionInfo action{ActionKind::Spawn, "spawn", {{"stype", stype->second}}, 0};
    if (s.sprite_class == vgdl::SpriteClass::SpawnPoint) {
      if (auto total = params.find("total"); total != params.end() && total->second != "0") {
        action.params["total"] = total->second;
      }
    }
    g.behavior_rules.push_back(add_mechanic(g, {static_cast<NodeId>(i)}, {ConditionKind::Behavior, 0},
                                            std::move(action),
                                            {OriginKind::Behavior, static_cast<int>(i)}));
  }

  g.primitive_count = g.mechanics.size();
  return g;
}

}  // namespace atdelfi::graph
