#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "atdelfi/instructions.hpp"
#include "common.hpp"

using namespace atdelfi;
using namespace atdelfi::instructions;

namespace {

InstructionDoc doc_for(const LoadedGame& lg, Diagnostics* diag = nullptr) {
  return render_doc(analysis::analyze(lg.graph, analysis::PathStrategy::LongestShortest, diag), diag);
}

InstructionDoc doc_for_source(const std::string& src, Diagnostics* diag = nullptr) {
  return render_doc(analysis::analyze(graph::build_graph(vgdl::parse_game(src)), analysis::PathStrategy::LongestShortest,
                                      diag),
                    diag);
}

std::vector<std::string> texts(const std::vector<Line>& lines) {
  std::vector<std::string> out;
  for (const auto& l : lines) out.push_back(l.text);
  return out;
}

const char* kTemplate = R"(BasicGame
    SpriteSet
        avatar > MovingAvatar
        egg > Immovable
        chick > Immovable
        wall > Immovable
        orb > Immovable
    InteractionSet
        egg avatar > transformTo stype=chick
        avatar wall > stepBack
        chick avatar > spawn stype=orb
        orb avatar > killSprite scoreChange=-3
        chick orb > bounceForward
    TerminationSet
        SpriteCounter stype=orb limit=2 win=True
        SpriteCounter stype=avatar limit=0 win=False
    LevelMapping
        A > avatar
        e > egg
)";

}  // namespace

TEST(Instructions, AliensGolden) {
  std::istringstream golden(testkit::read_file(testkit::fixtures_dir() + "/aliens_tutorial.golden"));
  std::string expected, line;
  while (std::getline(golden, line)) expected += (line.back() == ':' ? "" : "  ") + line + "\n";
  EXPECT_EQ(to_text(doc_for(testkit::bundled("aliens"))), expected);
  auto doc = doc_for(testkit::bundled("aliens"));
  EXPECT_EQ(doc.controls.size(), 2u);
  EXPECT_EQ(doc.winning.size(), 3u);
  EXPECT_EQ(doc.losing.size(), 3u);
  EXPECT_EQ(doc.points.size(), 2u);
  EXPECT_EQ(doc.controls[0].avatar, "avatar");
  EXPECT_FALSE(doc.controls[0].mechanic.has_value());
  EXPECT_TRUE(doc.winning[0].mechanic.has_value());
}

TEST(Instructions, Articles) {
  EXPECT_EQ(with_article("sam (missile)"), "a sam (missile)");
  EXPECT_EQ(with_article("alien"), "an alien");
  EXPECT_EQ(with_article("Orb"), "an Orb");
  EXPECT_EQ(with_article(""), "");
}

TEST(Instructions, Templates) {
  Diagnostics diag;
  auto doc = doc_for_source(kTemplate, &diag);
  EXPECT_EQ(texts(doc.winning),
            (std::vector<std::string>{
                "If chick and avatar (MovingAvatar) collide, then a new orb sprite will be created.",
                "If there are 2 or fewer orb sprites then you will win."}));
  EXPECT_EQ(texts(doc.points), std::vector<std::string>{
                                   "If the orb and the avatar (MovingAvatar) collide, then you will lose 3 points."});
  EXPECT_TRUE(diag.warnings.empty());
}

TEST(Instructions, StepBackAndFallback) {
  auto g = graph::build_graph(vgdl::parse_game(kTemplate));
  Diagnostics diag;
  EXPECT_EQ(render_mechanic(g, testkit::interaction(g, 0), &diag),
            "If egg and avatar (MovingAvatar) collide, then the egg sprite will turn into a chick sprite.");
  EXPECT_EQ(render_mechanic(g, testkit::interaction(g, 1), &diag),
            "If avatar (MovingAvatar) and wall collide, then the avatar (MovingAvatar) sprite will be pushed back.");
  EXPECT_TRUE(diag.warnings.empty());
  EXPECT_EQ(render_mechanic(g, testkit::interaction(g, 4), &diag),
            "If chick and orb collide, then bounceForward occurs.");
  ASSERT_EQ(diag.warnings.size(), 1u);
  EXPECT_NE(diag.warnings[0].find("bounceForward"), std::string::npos);
}

TEST(Instructions, PointPlurals) {
  auto g = graph::build_graph(vgdl::parse_game(kTemplate));
  auto pts = analysis::extract_point_rules(g);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(render_points(g, pts[0]), "If the orb and the avatar (MovingAvatar) collide, then you will lose 3 points.");
  auto aliens = analysis::analyze(testkit::bundled("aliens").graph);
  EXPECT_EQ(render_points(aliens.merged, aliens.point_mechanics[1]),
            "If the base and the sam (missile) collide, then you will gain 1 point.");
}

TEST(Instructions, TimeoutAndBehavior) {
  auto doc = doc_for(testkit::bundled("survive"));
  EXPECT_EQ(texts(doc.winning), std::vector<std::string>{"If time runs out after 300 ticks, then you will win."});
  auto hatch = doc_for(testkit::fixture("hatchery"));
  auto lose = texts(hatch.losing);
  EXPECT_NE(std::find(lose.begin(), lose.end(), "Over time, nest will spawn an egg."), lose.end());
}

TEST(Instructions, SharedMechanicListedOnce) {
  // Both avatars reach the goal through the same final rule.
  const char* src = R"(BasicGame
    SpriteSet
        hero > MovingAvatar
            red >
            blue >
        gem > Immovable
    InteractionSet
        gem hero > killSprite
    TerminationSet
        SpriteCounter stype=gem limit=0 win=True
        MultiSpriteCounter stype1=gem stype2=red limit=0 win=True
        SpriteCounter stype=hero limit=0 win=False
    LevelMapping
        r > red
        b > blue
        g > gem
)";
  auto doc = doc_for_source(src);
  std::vector<graph::MechanicId> ids;
  for (const auto& l : doc.winning) ids.push_back(*l.mechanic);
  std::sort(ids.begin(), ids.end());
  EXPECT_EQ(std::adjacent_find(ids.begin(), ids.end()), ids.end());
  EXPECT_EQ(doc.winning.size(), 3u);
}

TEST(Instructions, TextLayout) {
  auto text = to_text(doc_for(testkit::bundled("butterflies")));
  EXPECT_EQ(text.rfind("Controls:\n  As the avatar, use the four arrow keys to move.\nWinning:\n", 0), 0u);
  EXPECT_NE(text.find("\nPoints:\n  If the butterfly and the avatar (MovingAvatar) collide, then you will gain 2 points.\n"),
            std::string::npos);
}
