#include <gtest/gtest.h>

#include "atdelfi/card.hpp"
#include "atdelfi/demos.hpp"
#include "common.hpp"

using namespace atdelfi;
using namespace atdelfi::demos;

namespace {

sim::EventTrace fake_trace(std::string agent, std::uint64_t seed, sim::Outcome outcome,
                           std::vector<std::pair<int, graph::MechanicId>> events, int final_tick) {
  sim::EventTrace t;
  t.game = "g";
  t.level = "lvl0";
  t.agent = std::move(agent);
  t.seed = seed;
  t.outcome = outcome;
  t.final_tick = final_tick;
  for (auto [tick, m] : events) t.events.push_back({tick, m, {}, 0});
  for (int tick = 0; tick <= final_tick; ++tick) t.frames[tick] = {std::to_string(tick)};
  return t;
}

}  // namespace

TEST(Demos, StoreOrder) {
  TraceStore store;
  store.add(fake_trace("b", 2, sim::Outcome::Lost, {}, 3));
  store.add(fake_trace("a", 5, sim::Outcome::Lost, {}, 3));
  store.add(fake_trace("a", 1, sim::Outcome::Lost, {}, 3));
  ASSERT_EQ(store.traces().size(), 3u);
  EXPECT_EQ(store.traces()[0].seed, 1u);
  EXPECT_EQ(store.traces()[1].seed, 5u);
  EXPECT_EQ(store.traces()[2].agent, "b");
}

TEST(Demos, PrefersWonTracesAndClampsWindow) {
  TraceStore store;
  store.add(fake_trace("a", 1, sim::Outcome::Lost, {{3, 7}}, 10));
  store.add(fake_trace("b", 1, sim::Outcome::Won, {{1, 7}, {6, 7}}, 2));
  auto clip = find_clip(store, 7);
  ASSERT_TRUE(clip.has_value());
  EXPECT_FALSE(clip->missing);
  EXPECT_EQ(clip->source->agent, "b");
  EXPECT_EQ(clip->source->tick, 1);
  // Ticks -1..3 clamp to 0..2, so the edges repeat.
  ASSERT_EQ(clip->frames.size(), static_cast<std::size_t>(kClipFrames));
  EXPECT_EQ(clip->frames.front(), Grid{"0"});
  EXPECT_EQ(clip->frames.back(), Grid{"2"});

  auto lost_only = find_clip(store, 9);
  EXPECT_FALSE(lost_only.has_value());
  TraceStore loose;
  loose.add(fake_trace("a", 1, sim::Outcome::Lost, {{3, 9}}, 10));
  auto fallback = find_clip(loose, 9);
  ASSERT_TRUE(fallback.has_value());
  EXPECT_EQ(fallback->frames[2], Grid{"3"});
  EXPECT_EQ(to_animation(*fallback), "1\n\f2\n\f3\n\f4\n\f5\n");
}

TEST(Demos, ReferencedOrder) {
  auto r = analysis::analyze(testkit::bundled("aliens").graph);
  auto refs = referenced_mechanics(r);
  std::vector<graph::MechanicId> expected;
  for (const auto* paths : {&r.win_paths, &r.lose_paths}) {
    for (const auto& p : *paths) expected.insert(expected.end(), p.mechanics.begin(), p.mechanics.end());
  }
  for (auto m : r.point_mechanics) {
    if (std::find(expected.begin(), expected.end(), m) == expected.end()) expected.push_back(m);
  }
  EXPECT_EQ(refs, expected);
}

TEST(Demos, MergedMechanicGetsClipPerPrimitive) {
  auto lg = testkit::bundled("aliens");
  auto r = analysis::analyze(lg.graph);
  const auto merged = r.merged.mechanics.back();
  ASSERT_EQ(merged.merged_from.size(), 2u);
  TraceStore store;
  store.add(fake_trace("x", 1, sim::Outcome::Lost, {{4, merged.merged_from[1]}}, 8));
  auto clips = extract_demos(r, store);
  std::vector<DemoClip> mine;
  for (const auto& c : clips) {
    if (c.mechanic == merged.id) mine.push_back(c);
  }
  ASSERT_EQ(mine.size(), 2u);
  EXPECT_TRUE(mine[0].missing);
  EXPECT_EQ(mine[0].primitive, merged.merged_from[0]);
  EXPECT_FALSE(mine[1].missing);
}

TEST(Card, MissingClipsAndNotes) {
  auto lg = testkit::bundled("survive");
  auto r = analysis::analyze(lg.graph);
  auto doc = instructions::render_doc(r);
  auto clips = extract_demos(r, TraceStore{});
  auto c = card::assemble_card(doc, clips, "survive");
  EXPECT_EQ(c.sections.size(), 4u);
  for (const auto& s : c.sections) {
    for (const auto& l : s.lines) {
      EXPECT_TRUE(l.no_demo);
      EXPECT_TRUE(l.clips.empty());
    }
  }
  auto md = card::to_markdown(c);
  EXPECT_NE(md.find(std::string(card::kNoDemo)), std::string::npos);
  EXPECT_NE(md.find("survive"), std::string::npos);
}

TEST(Card, NoScoringNote) {
  auto lg = testkit::fixture("calm");
  auto r = analysis::analyze(lg.graph);
  auto c = card::assemble_card(instructions::render_doc(r), {}, "calm");
  const auto& pts = c.section(instructions::Section::Points);
  EXPECT_TRUE(pts.lines.empty());
  EXPECT_EQ(pts.note, std::string(card::kNoScoring));
}

TEST(Card, ClipsAttachToLines) {
  auto lg = testkit::bundled("butterflies");
  auto r = analysis::analyze(lg.graph);
  sim::Simulator sim(lg.game, lg.graph, lg.name);
  EpisodePlan plan;
  plan.episodes = 1;
  auto store = run_plan(sim, lg.levels, plan);
  auto c = card::assemble_card(instructions::render_doc(r), extract_demos(r, store), "butterflies");
  const auto& win = c.section(instructions::Section::Winning);
  ASSERT_FALSE(win.lines.empty());
  for (const auto& l : win.lines) {
    EXPECT_FALSE(l.no_demo) << l.text;
    for (const auto& clip : l.clips) EXPECT_EQ(clip.frames.size(), static_cast<std::size_t>(kClipFrames));
  }
  EXPECT_NE(card::to_markdown(c).find("```"), std::string::npos);
}
