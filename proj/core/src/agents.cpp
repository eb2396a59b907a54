#include <deque>
#include <limits>

#include "atdelfi/simulator.hpp"

namespace atdelfi::sim {

std::string_view to_string(AgentKind k) {
  switch (k) {
    case AgentKind::DoNothing: return "doNothing";
    case AgentKind::OneStepLookahead: return "oneStepLookahead";
    case AgentKind::BudgetedRollout: return "budgetedRollout";
  }
  return "doNothing";
}

std::optional<AgentKind> agent_from_string(std::string_view s) {
  for (auto k : {AgentKind::DoNothing, AgentKind::OneStepLookahead, AgentKind::BudgetedRollout}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

namespace {

class DoNothing final : public Agent {
 public:
  Action act(const Simulator&, const GameState&) override { return Action::Nil; }
};

class OneStepLookahead final : public Agent {
 public:
  Action act(const Simulator& sim, const GameState& state) override {
    Action best = Action::Nil;
    double best_value = -std::numeric_limits<double>::infinity();
    for (Action a : kActions) {
      GameState next = state;
      sim.step(next, a);
      double value = static_cast<double>(next.score - state.score);
      if (next.status == Status::Won) value = 1e9;
      if (next.status == Status::Lost) value = -1e9;
      if (value > best_value) {
        best = a;
        best_value = value;
      }
    }
    return best;
  }
};

class BudgetedRollout final : public Agent {
 public:
  BudgetedRollout(int rollouts, int depth, std::uint64_t seed) : rollouts_(rollouts), depth_(depth), rng_(seed) {}

  Action act(const Simulator& sim, const GameState& state) override {
    Action best = Action::Nil;
    double best_value = -std::numeric_limits<double>::infinity();
    for (Action a : kActions) {
      double total = 0;
      for (int r = 0; r < rollouts_; ++r) {
        GameState sim_state = state;
        sim.step(sim_state, a);
        for (int d = 1; d < depth_ && sim_state.status == Status::Running; ++d) {
          sim.step(sim_state, kActions[rng_() % std::size(kActions)]);
        }
        double value = sim_state.score - state.score;
        if (sim_state.status == Status::Won) value += 1000;
        if (sim_state.status == Status::Lost) value -= 1000;
        total += value;
      }
      const double mean = rollouts_ > 0 ? total / rollouts_ : 0.0;
      if (mean > best_value) {
        best = a;
        best_value = mean;
      }
    }
    return best;
  }

 private:
  int rollouts_;
  int depth_;
  std::mt19937_64 rng_;
};

}  // namespace

std::unique_ptr<Agent> make_agent(const AgentConfig& config, std::uint64_t seed) {
  switch (config.kind) {
    case AgentKind::DoNothing: return std::make_unique<DoNothing>();
    case AgentKind::OneStepLookahead: return std::make_unique<OneStepLookahead>();
    case AgentKind::BudgetedRollout:
      return std::make_unique<BudgetedRollout>(config.rollouts, config.depth, seed ^ 0x9e3779b97f4a7c15ULL);
  }
  return std::make_unique<DoNothing>();
}

EventTrace run_episode(const Simulator& sim, const vgdl::LevelGrid& level, const AgentConfig& agent_config,
                       std::uint64_t seed, int max_ticks) {
  EventTrace trace;
  trace.game = sim.name();
  trace.level = level.name;
  trace.agent = std::string(to_string(agent_config.kind));
  trace.seed = seed;
  trace.max_ticks = max_ticks;

  auto agent = make_agent(agent_config, seed);
  GameState state = sim.initial_state(level, seed);
  // Last three frames, so an event at tick t can keep t-2 and t-1.
  std::deque<std::pair<int, Grid>> recent{{0, sim.render(state)}};
  int keep_until = -1;
  while (state.status == Status::Running && state.tick < max_ticks) {
    const std::size_t before = trace.events.size();
    sim.step(state, agent->act(sim, state), &trace.events);
    recent.emplace_back(state.tick, sim.render(state));
    if (recent.size() > 3) recent.pop_front();
    if (trace.events.size() > before) {
      for (const auto& [tick, grid] : recent) trace.frames.emplace(tick, grid);
      keep_until = state.tick + 2;
    } else if (state.tick <= keep_until) {
      trace.frames.emplace(state.tick, recent.back().second);
    }
  }
  trace.final_score = state.score;
  trace.final_tick = state.tick;
  switch (state.status) {
    case Status::Won: trace.outcome = Outcome::Won; break;
    case Status::Lost: trace.outcome = Outcome::Lost; break;
    case Status::Running: trace.outcome = Outcome::TimedOut; break;
  }
  if (state.status != Status::Running && !trace.events.empty()) trace.terminal = trace.events.back().mechanic;
  return trace;
}

}  // namespace atdelfi::sim
