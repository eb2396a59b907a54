#pragma once

// Directed mechanic graph: object, condition and action nodes, and the
// mechanic table that groups them into (objects -> condition -> action ->
// affected objects) units.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "atdelfi/vgdl.hpp"

namespace atdelfi::graph {

using NodeId = int;
using MechanicId = int;

enum class NodeKind { Object, Condition, Action };

enum class ConditionKind {
  Collision,
  SpriteCounter,
  MultiSpriteCounter,
  Timeout,
  PlayerInput,
  Behavior,  // a sprite acting on its own (spawn points, bombers)
};

enum class ActionKind { KillSprite, TransformTo, Spawn, StepBack, Win, Lose, Other };

std::string_view to_string(NodeKind k);
std::string_view to_string(ConditionKind k);
std::string_view to_string(ActionKind k);

/// Maps an interaction effect token onto the action it performs.
ActionKind action_kind_for_effect(std::string_view effect);

struct ObjectInfo {
  std::string sprite;
  vgdl::SpriteClass sprite_class = vgdl::SpriteClass::Immovable;
  std::optional<std::string> class_token;
  NodeId parent = -1;  // parent sprite's node, -1 at the hierarchy root
  bool builtin = false;  // Time and EOS
  vgdl::Params params;   // resolved down the parent chain

  bool operator==(const ObjectInfo&) const = default;
};

struct ConditionInfo {
  ConditionKind kind = ConditionKind::Collision;
  int limit = 0;  // counter threshold or timeout ticks

  bool operator==(const ConditionInfo&) const = default;
};

struct ActionInfo {
  ActionKind kind = ActionKind::Other;
  std::string effect;  // source token ("killSprite", "win", "shoot", ...)
  vgdl::Params params;
  int score_delta = 0;

  bool operator==(const ActionInfo&) const = default;
};

struct GraphNode {
  NodeId id = 0;
  NodeKind kind = NodeKind::Object;
  std::string label;
  std::variant<ObjectInfo, ConditionInfo, ActionInfo> payload;

  bool operator==(const GraphNode&) const = default;
};

struct Edge {
  NodeId from = 0;
  NodeId to = 0;

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

enum class OriginKind { Interaction, Termination, InputRule, Behavior, Merged };
std::string_view to_string(OriginKind k);

struct Origin {
  OriginKind kind = OriginKind::Interaction;
  /// Interaction/termination index; sprite index for InputRule/Behavior; -1 for Merged.
  int index = -1;

  bool operator==(const Origin&) const = default;
};

struct Mechanic {
  MechanicId id = 0;
  std::vector<NodeId> inputs;  // role order: subject, object / counted sprites / actor
  NodeId condition = 0;
  NodeId action = 0;
  std::vector<NodeId> outputs;  // sprites removed, moved or created
  int score_delta = 0;
  Origin origin;
  std::vector<MechanicId> merged_from;  // primitive ids, sorted; empty if primitive
  std::optional<MechanicId> absorbed_by;  // set on primitives replaced by a merge

  bool active() const { return !absorbed_by.has_value(); }
  bool operator==(const Mechanic&) const = default;
};

struct MechanicGraph {
  std::vector<GraphNode> nodes;   // id == index
  std::vector<Edge> edges;
  std::vector<Mechanic> mechanics;  // id == index
  std::vector<NodeId> avatars;
  std::vector<MechanicId> input_rules;
  std::vector<MechanicId> behavior_rules;
  std::vector<MechanicId> interaction_mechanics;  // by interaction index
  std::vector<MechanicId> termination_mechanics;  // by termination index
  NodeId time_node = -1;
  NodeId eos_node = -1;
  std::size_t primitive_count = 0;  // mechanics created by build_graph

  bool operator==(const MechanicGraph&) const = default;

  const ObjectInfo& object(NodeId id) const;
  const ConditionInfo& condition(const Mechanic& m) const;
  const ActionInfo& action(const Mechanic& m) const;
  const std::string& sprite(NodeId id) const { return object(id).sprite; }
  std::optional<NodeId> object_node(std::string_view sprite) const;
  /// Object nodes whose parent is `id`, in id order.
  std::vector<NodeId> children(NodeId id) const;
  /// True when `id` equals `ancestor` or descends from it.
  bool is_a(NodeId id, NodeId ancestor) const;
  int depth(NodeId id) const;
  bool is_terminal(const Mechanic& m) const;
  std::vector<MechanicId> active_mechanics() const;
  std::optional<MechanicId> input_rule_for(NodeId avatar) const;
  std::optional<MechanicId> behavior_for(NodeId sprite) const;
  /// Termination index of a terminal mechanic, if it is one.
  std::optional<std::size_t> termination_index(MechanicId id) const;
};

/// One object node per sprite, a Time node (plus EOS when referenced), and a
/// condition/action pair per interaction, termination, shooting avatar and
/// spawner sprite, in that order.
MechanicGraph build_graph(const vgdl::GameDescription& game);

/// Objects a mechanic's action touches, derived from its effect and inputs.
std::vector<NodeId> derive_outputs(const MechanicGraph& g, const ActionInfo& action,
                                   const std::vector<NodeId>& inputs);

/// Sprite name as shown to players: `name (ClassName)` for avatars,
/// `name (parent)` under a named parent, bare name at the hierarchy root.
std::string display_name(const MechanicGraph& g, NodeId id);

/// Adds a mechanic (condition + action nodes and their edges) to the graph.
MechanicId add_mechanic(MechanicGraph& g, std::vector<NodeId> inputs, ConditionInfo condition,
                        ActionInfo action, Origin origin);

}  // namespace atdelfi::graph
