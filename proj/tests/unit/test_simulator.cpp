#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "atdelfi/serialize.hpp"
#include "atdelfi/simulator.hpp"
#include "common.hpp"
#include "random_games.hpp"

using namespace atdelfi;
using namespace atdelfi::sim;

namespace {

struct Built {
  vgdl::GameDescription game;
  graph::MechanicGraph graph;
  Simulator sim;
  vgdl::LevelGrid level;

  Built(const std::string& src, const std::string& lvl)
      : game(vgdl::parse_game(src)), graph(graph::build_graph(game)), sim(game, graph, "t"),
        level(vgdl::parse_level(lvl, game, "lvl")) {}
};

const char* kShooter = R"(BasicGame
    SpriteSet
        avatar > FlakAvatar stype=sam
        sam > Missile orientation=UP
        alien > Immovable
    InteractionSet
        alien sam > killSprite scoreChange=2
        sam EOS > killSprite
    TerminationSet
        SpriteCounter stype=alien limit=0 win=True
        SpriteCounter stype=avatar limit=0 win=False
    LevelMapping
        a > alien
        A > avatar
)";

const char* kStill = R"(BasicGame
    SpriteSet
        avatar > MovingAvatar
        rock > Immovable
        honey > Immovable
    InteractionSet
        avatar rock > stepBack
        honey avatar > killSprite scoreChange=1
    TerminationSet
        SpriteCounter stype=honey limit=0 win=True
        SpriteCounter stype=avatar limit=0 win=False
    LevelMapping
        r > rock
        h > honey
        A > avatar
)";

int score_sum(const EventTrace& t) {
  return std::accumulate(t.events.begin(), t.events.end(), 0,
                         [](int acc, const TraceEvent& e) { return acc + e.score_delta; });
}

}  // namespace

TEST(Simulator, InitialStateAndRender) {
  Built b(kStill, "rhr\n.A.\n");
  auto s = b.sim.initial_state(b.level, 1);
  EXPECT_EQ(s.tick, 0);
  EXPECT_EQ(s.sprites.size(), 4u);
  EXPECT_EQ(s.status, Status::Running);
  EXPECT_EQ(b.sim.render(s), (Grid{"rhr", ".A."}));
}

TEST(Simulator, NilIsFixedPointWithoutNpcs) {
  Built b(kStill, "rhr\n.A.\n");
  auto s = b.sim.initial_state(b.level, 1);
  for (int i = 0; i < 5; ++i) {
    auto before = b.sim.render(s);
    std::vector<TraceEvent> events;
    b.sim.step(s, Action::Nil, &events);
    EXPECT_TRUE(events.empty());
    EXPECT_EQ(b.sim.render(s), before);
  }
  EXPECT_EQ(s.tick, 5);
}

TEST(Simulator, StepBackAndKill) {
  Built b(kStill, "rhr\n.A.\n");
  auto s = b.sim.initial_state(b.level, 1);
  std::vector<TraceEvent> events;
  b.sim.step(s, Action::Up, &events);
  ASSERT_EQ(events.size(), 2u);
  EXPECT_EQ(events[0].mechanic, b.graph.interaction_mechanics[1]);
  EXPECT_EQ(events[0].score_delta, 1);
  EXPECT_EQ(events[1].mechanic, b.graph.termination_mechanics[0]);
  EXPECT_EQ(s.status, Status::Won);
  EXPECT_EQ(s.score, 1);
  EXPECT_THROW(b.sim.step(s, Action::Nil), SteppedTerminalState);

  Built wall(kStill, "r.h\nA..\n");
  auto w = wall.sim.initial_state(wall.level, 1);
  events.clear();
  wall.sim.step(w, Action::Up, &events);
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0].mechanic, wall.graph.interaction_mechanics[0]);
  EXPECT_EQ(wall.sim.render(w), (Grid{"r.h", "A.."}));
}

TEST(Simulator, FlakShootsAndScores) {
  Built b(kShooter, ".a.\n...\n.A.\n");
  auto s = b.sim.initial_state(b.level, 1);
  std::vector<TraceEvent> events;
  b.sim.step(s, Action::Use, &events);
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0].mechanic, *b.graph.input_rule_for(b.graph.avatars[0]));
  EXPECT_EQ(events[0].sprites_involved.size(), 2u);
  EXPECT_EQ(b.sim.render(s), (Grid{".a.", ".s.", ".A."}));
  events.clear();
  b.sim.step(s, Action::Nil, &events);
  ASSERT_EQ(events.size(), 2u);
  EXPECT_EQ(events[0].mechanic, b.graph.interaction_mechanics[0]);
  EXPECT_EQ(events[0].score_delta, 2);
  EXPECT_EQ(s.score, 2);
  EXPECT_EQ(s.status, Status::Won);
}

TEST(Simulator, MissileLeavesLevel) {
  Built b(kShooter, "..a\n...\n.A.\n");
  auto s = b.sim.initial_state(b.level, 1);
  std::vector<TraceEvent> events;
  for (int i = 0; i < 4 && s.status == Status::Running; ++i) b.sim.step(s, i == 0 ? Action::Use : Action::Nil, &events);
  ASSERT_FALSE(events.empty());
  EXPECT_EQ(events.back().mechanic, b.graph.interaction_mechanics[1]);
  EXPECT_EQ(b.sim.render(s), (Grid{"..a", "...", ".A."}));
}

TEST(Simulator, UnsupportedClass) {
  std::string src = kStill;
  src.replace(src.find("rock > Immovable"), 16, "rock > Portal");
  auto game = vgdl::parse_game(src);
  EXPECT_THROW(Simulator(game, graph::build_graph(game)), UnsupportedSpriteClass);
}

TEST(Simulator, UnsupportedEffect) {
  std::string src = kStill;
  src.replace(src.find("stepBack"), 8, "bounceForward");
  auto game = vgdl::parse_game(src);
  EXPECT_THROW(Simulator(game, graph::build_graph(game)), UnsupportedEffect);
}

TEST(Simulator, OutcomeNames) {
  for (auto o : {Outcome::Won, Outcome::Lost, Outcome::TimedOut}) EXPECT_EQ(outcome_from_string(to_string(o)), o);
  EXPECT_FALSE(outcome_from_string("draw").has_value());
  for (auto k : {AgentKind::DoNothing, AgentKind::OneStepLookahead, AgentKind::BudgetedRollout}) {
    EXPECT_EQ(agent_from_string(to_string(k)), k);
  }
}

TEST(Episodes, DeterministicAndConserving) {
  for (const auto& name : {"aliens", "zelda", "butterflies", "survive"}) {
    auto lg = testkit::bundled(name);
    Simulator sim(lg.game, lg.graph, lg.name);
    for (auto kind : {AgentKind::DoNothing, AgentKind::BudgetedRollout}) {
      auto a = run_episode(sim, lg.levels[0], {kind}, 3, 400);
      auto b = run_episode(sim, lg.levels[0], {kind}, 3, 400);
      EXPECT_EQ(io::trace_json(a), io::trace_json(b)) << name;
      EXPECT_EQ(a.final_score, score_sum(a)) << name;
    }
  }
}

TEST(Episodes, TimeoutOutcomeAndFrames) {
  auto lg = testkit::fixture("calm");
  Simulator sim(lg.game, lg.graph, lg.name);
  auto t = run_episode(sim, lg.levels[0], {AgentKind::DoNothing}, 1, 2000);
  EXPECT_EQ(t.outcome, Outcome::Won);
  EXPECT_EQ(t.final_tick, 40);
  ASSERT_EQ(t.events.size(), 1u);
  EXPECT_EQ(t.terminal, lg.graph.termination_mechanics[0]);
  for (int tick = 38; tick <= 40; ++tick) EXPECT_TRUE(t.frames.count(tick)) << tick;
  EXPECT_FALSE(t.frames.count(30));

  auto capped = run_episode(sim, lg.levels[0], {AgentKind::DoNothing}, 1, 10);
  EXPECT_EQ(capped.outcome, Outcome::TimedOut);
  EXPECT_EQ(capped.final_tick, 10);
  EXPECT_FALSE(capped.terminal.has_value());
}

TEST(Episodes, EventsReferToBaseMechanics) {
  auto lg = testkit::bundled("aliens");
  Simulator sim(lg.game, lg.graph, lg.name);
  auto t = run_episode(sim, lg.levels[0], {AgentKind::BudgetedRollout}, 1);
  ASSERT_FALSE(t.events.empty());
  int last = 0;
  for (const auto& e : t.events) {
    EXPECT_LT(static_cast<std::size_t>(e.mechanic), lg.graph.mechanics.size());
    EXPECT_GE(e.tick, last);
    last = e.tick;
    EXPECT_TRUE(t.frames.count(e.tick));
  }
}

TEST(Episodes, RandomGamesConserveScore) {
  std::mt19937_64 rng(17);
  testkit::RandomGameOptions opts;
  opts.simulate = true;
  opts.allow_growth = false;
  int played = 0;
  for (int i = 0; i < 60; ++i) {
    auto rg = testkit::random_game(rng, opts);
    auto game = vgdl::parse_game(rg.source);
    auto g = graph::build_graph(game);
    Simulator sim(game, g, "random");
    auto level = vgdl::parse_level(testkit::random_level(rng, game, 8, 6), game);
    for (auto kind : {AgentKind::DoNothing, AgentKind::OneStepLookahead}) {
      auto a = run_episode(sim, level, {kind}, static_cast<std::uint64_t>(i), 150);
      auto b = run_episode(sim, level, {kind}, static_cast<std::uint64_t>(i), 150);
      EXPECT_EQ(a, b) << rg.source;
      EXPECT_EQ(a.final_score, score_sum(a)) << rg.source;
      ++played;
    }
  }
  EXPECT_EQ(played, 120);
}
