#pragma once

// Deterministic forward model for the supported VGDL subset, plus the
// baseline agents and the episode runner that records event traces.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "atdelfi/mechanic_graph.hpp"

namespace atdelfi::sim {

using graph::MechanicId;
using Grid = std::vector<std::string>;

enum class Action { Up, Down, Left, Right, Use, Nil };
inline constexpr Action kActions[] = {Action::Up, Action::Down, Action::Left,
                                      Action::Right, Action::Use, Action::Nil};
std::string_view to_string(Action a);

enum class Status { Running, Won, Lost };
enum class Outcome { Won, Lost, TimedOut };
std::string_view to_string(Status s);
std::string_view to_string(Outcome o);
std::optional<Outcome> outcome_from_string(std::string_view s);

class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class UnsupportedSpriteClass : public SimulationError {
 public:
  using SimulationError::SimulationError;
};
class UnsupportedEffect : public SimulationError {
 public:
  using SimulationError::SimulationError;
};
class SteppedTerminalState : public SimulationError {
 public:
  SteppedTerminalState() : SimulationError("step called on a finished game") {}
};

struct SpriteInstance {
  int id = 0;
  int type = 0;  // object node id of the sprite
  int x = 0;
  int y = 0;
  int dx = 0;  // orientation
  int dy = 0;
  int prev_x = 0;
  int prev_y = 0;
  int cool = 0;     // ticks since the sprite last acted
  int spawned = 0;  // SpawnPoint output so far
  int born = 0;     // tick of creation
  bool alive = true;
  bool at_edge = false;  // tried to leave the level this tick

  bool operator==(const SpriteInstance&) const = default;
};

struct GameState {
  int tick = 0;
  int width = 0;
  int height = 0;
  std::vector<SpriteInstance> sprites;  // live sprites, id order
  int next_id = 0;
  int score = 0;
  Status status = Status::Running;
  std::uint64_t rng_seed = 0;
  std::minstd_rand rng;

  bool operator==(const GameState&) const = default;
  int count_of(int type) const;
};

struct TraceEvent {
  int tick = 0;
  MechanicId mechanic = 0;
  std::vector<int> sprites_involved;
  int score_delta = 0;

  bool operator==(const TraceEvent&) const = default;
};

struct EventTrace {
  std::string game;
  std::string level;
  std::string agent;
  std::uint64_t seed = 0;
  int max_ticks = 0;
  std::vector<TraceEvent> events;
  Outcome outcome = Outcome::TimedOut;
  int final_score = 0;
  int final_tick = 0;
  std::optional<MechanicId> terminal;  // terminal mechanic that ended the episode
  /// Snapshots kept for ticks within two of an event.
  std::map<int, Grid> frames;

  bool operator==(const EventTrace&) const = default;
  const Grid& snapshot(int tick) const { return frames.at(tick); }
};

/// Rule tables compiled from a game and its mechanic graph.
class Simulator {
 public:
  Simulator(const vgdl::GameDescription& game, const graph::MechanicGraph& graph, std::string name = {});

  GameState initial_state(const vgdl::LevelGrid& level, std::uint64_t seed) const;
  /// Advances one tick. Fired mechanics are appended to `events` when given.
  void step(GameState& state, Action action, std::vector<TraceEvent>* events = nullptr) const;
  Grid render(const GameState& state) const;

  const std::string& name() const { return name_; }
  const graph::MechanicGraph& graph() const { return graph_; }
  int type_count() const { return static_cast<int>(types_.size()); }
  bool is_a(int type, int ancestor) const;
  bool is_avatar(int type) const;

  enum class Effect { Kill, TransformTo, Clone, Spawn, StepBack, TurnAround, ReverseDirection };
  struct TypeInfo {
    std::string name;
    vgdl::SpriteClass cls = vgdl::SpriteClass::Immovable;
    int stype = -1;
    int cooldown = 1;
    double prob = 1.0;
    int total = 0;
    int move_interval = 1;
    int dx = 0;
    int dy = 0;
    bool singleton = false;
    bool avatar = false;
    char glyph = '?';
    std::optional<MechanicId> input_rule;
    std::optional<MechanicId> behavior;
  };
  struct Rule {
    int subject = 0;
    int object = 0;  // -1 for the level edge
    Effect effect = Effect::Kill;
    int stype = -1;
    int score = 0;
    MechanicId mechanic = 0;
  };
  struct Terminal {
    vgdl::TerminationKind kind = vgdl::TerminationKind::Timeout;
    std::vector<int> types;
    int limit = 0;
    bool win = false;
    MechanicId mechanic = 0;
  };

 private:
  struct StepContext;
  int spawn(GameState& s, int type, int x, int y, int dx, int dy) const;
  void move(GameState& s, SpriteInstance& sp, int dx, int dy) const;
  void act_avatar(GameState& s, std::size_t idx, Action a, StepContext& ctx) const;
  void act_npc(GameState& s, std::size_t idx, StepContext& ctx) const;
  void resolve_collisions(GameState& s, StepContext& ctx) const;
  void check_terminations(GameState& s, StepContext& ctx) const;

  std::string name_;
  graph::MechanicGraph graph_;
  std::vector<TypeInfo> types_;
  std::vector<std::vector<char>> isa_;
  std::vector<Rule> rules_;
  std::vector<Terminal> terminals_;
  std::map<char, std::vector<int>> mapping_;
};

enum class AgentKind { DoNothing, OneStepLookahead, BudgetedRollout };
std::string_view to_string(AgentKind k);
std::optional<AgentKind> agent_from_string(std::string_view s);

struct AgentConfig {
  AgentKind kind = AgentKind::DoNothing;
  int rollouts = 20;
  int depth = 10;
};

class Agent {
 public:
  virtual ~Agent() = default;
  virtual Action act(const Simulator& sim, const GameState& state) = 0;
};

std::unique_ptr<Agent> make_agent(const AgentConfig& config, std::uint64_t seed);

inline constexpr int kDefaultMaxTicks = 2000;

/// Plays one episode from the level's initial state.
EventTrace run_episode(const Simulator& sim, const vgdl::LevelGrid& level, const AgentConfig& agent,
                       std::uint64_t seed, int max_ticks = kDefaultMaxTicks);

}  // namespace atdelfi::sim
