#include <gtest/gtest.h>

#include <random>

#include "atdelfi/vgdl.hpp"
#include "common.hpp"
#include "random_games.hpp"

using namespace atdelfi;
using namespace atdelfi::vgdl;

namespace {

const char* kMinimal = R"(BasicGame square_size=20
    SpriteSet
        wall > Immovable
        avatar > MovingAvatar
        enemy > RandomNPC cooldown=3
            bat >
            spider > speed=0.5
    InteractionSet
        avatar wall > stepBack
        avatar enemy > killSprite scoreChange=-2
    TerminationSet
        SpriteCounter stype=enemy limit=0 win=True
        SpriteCounter stype=avatar limit=0 win=False
    LevelMapping
        w > wall
        A > avatar
        b > bat
)";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto pos = s.find(from);
  if (pos != std::string::npos) s.replace(pos, from.size(), to);
  return s;
}

}  // namespace

TEST(Parser, Minimal) {
  auto g = parse_game(kMinimal);
  EXPECT_EQ(g.game_params.at("square_size"), "20");
  ASSERT_EQ(g.sprites.size(), 5u);
  EXPECT_EQ(g.sprites[3].name, "bat");
  EXPECT_EQ(g.sprites[3].parent, "enemy");
  EXPECT_EQ(g.sprites[3].sprite_class, SpriteClass::RandomNPC);
  EXPECT_FALSE(g.sprites[3].class_token.has_value());
  EXPECT_EQ(g.sprites[4].params.at("speed"), "0.5");
  EXPECT_EQ(g.resolved_params("spider").at("cooldown"), "3");
  ASSERT_EQ(g.interactions.size(), 2u);
  EXPECT_EQ(g.interactions[1].score_delta, -2);
  EXPECT_TRUE(g.interactions[1].params.empty());
  ASSERT_EQ(g.terminations.size(), 2u);
  EXPECT_TRUE(g.terminations[0].win);
  EXPECT_EQ(g.terminations[1].sprites, std::vector<std::string>{"avatar"});
  EXPECT_EQ(g.level_mapping.at('b'), std::vector<std::string>{"bat"});
  EXPECT_EQ(g.avatars(), std::vector<std::string>{"avatar"});
  EXPECT_TRUE(g.is_a("spider", "enemy"));
  EXPECT_FALSE(g.is_a("enemy", "spider"));
  EXPECT_EQ(hierarchy_depth(g), 1);
}

TEST(Parser, CommentsAndBlankLinesIgnored) {
  std::string src = std::string("# leading comment\n\n") + replace(kMinimal, "    InteractionSet\n",
                                                                     "\n    # rules\n    InteractionSet\n");
  EXPECT_EQ(parse_game(src), parse_game(kMinimal));
}

TEST(Parser, UnknownClassKeptOpaque) {
  auto g = parse_game(replace(kMinimal, "wall > Immovable", "wall > Portal"));
  EXPECT_EQ(g.find("wall")->sprite_class, SpriteClass::Opaque);
  EXPECT_EQ(g.find("wall")->class_token, "Portal");
}

TEST(Parser, UndefinedSpriteInInteraction) {
  try {
    parse_game(replace(kMinimal, "avatar wall > stepBack", "avatar ghost > stepBack"));
    FAIL() << "expected ReferenceError";
  } catch (const ReferenceError& e) {
    EXPECT_EQ(e.name(), "ghost");
    EXPECT_EQ(e.line(), 9);
  }
}

TEST(Parser, UndefinedSpriteInTermination) {
  EXPECT_THROW(parse_game(replace(kMinimal, "stype=enemy", "stype=ghost")), ReferenceError);
}

TEST(Parser, UndefinedSpriteInMapping) {
  EXPECT_THROW(parse_game(replace(kMinimal, "b > bat", "b > ghost")), ReferenceError);
}

TEST(Parser, MissingSection) {
  std::string src = kMinimal;
  src = src.substr(0, src.find("    LevelMapping"));
  try {
    parse_game(src);
    FAIL() << "expected MissingSection";
  } catch (const MissingSection& e) {
    EXPECT_EQ(e.section(), "LevelMapping");
  }
}

TEST(Parser, DuplicateSprite) {
  EXPECT_THROW(parse_game(replace(kMinimal, "wall > Immovable", "wall > Immovable\n        wall > Immovable")),
               SyntaxError);
}

TEST(Parser, MixedTabsRejected) {
  EXPECT_THROW(parse_game(replace(kMinimal, "        wall > Immovable", "\t    wall > Immovable")), SyntaxError);
}

TEST(Parser, BadParameter) {
  EXPECT_THROW(parse_game(replace(kMinimal, "cooldown=3", "cooldown")), SyntaxError);
}

TEST(Parser, EmptySource) { EXPECT_THROW(parse_game("  \n# nothing\n"), SyntaxError); }

TEST(Parser, NoBasicGameHeader) { EXPECT_THROW(parse_game(replace(kMinimal, "BasicGame", "Game")), SyntaxError); }

TEST(Parser, NoAvatar) {
  EXPECT_THROW(parse_game(replace(kMinimal, "avatar > MovingAvatar", "avatar > Immovable")),
               InvalidGame);
}

TEST(Parser, NoWinTermination) {
  EXPECT_THROW(parse_game(replace(kMinimal, "limit=0 win=True", "limit=0 win=False")), InvalidGame);
}

TEST(Parser, NoLoseTermination) {
  EXPECT_THROW(parse_game(replace(kMinimal, "limit=0 win=False", "limit=0 win=True")), InvalidGame);
}

TEST(Parser, MappingOntoGroupRejected) {
  EXPECT_THROW(parse_game(replace(replace(kMinimal, "enemy > RandomNPC cooldown=3", "enemy >"), "b > bat", "b > enemy")),
               InvalidGame);
}

TEST(Parser, EndOfScreenIsReserved) {
  EXPECT_THROW(parse_game(replace(kMinimal, "wall > Immovable", "EOS > Immovable")), SyntaxError);
  EXPECT_THROW(parse_game(replace(kMinimal, "avatar wall > stepBack", "EOS avatar > stepBack")), SyntaxError);
  auto g = parse_game(replace(kMinimal, "avatar wall > stepBack", "avatar EOS > stepBack"));
  EXPECT_TRUE(g.uses_end_of_screen());
}

TEST(Parser, MultiSpriteCounterAndTimeout) {
  auto g = parse_game(replace(kMinimal, "SpriteCounter stype=enemy limit=0 win=True",
                              "MultiSpriteCounter stype1=bat stype2=spider limit=1 win=True\n"
                              "        Timeout limit=100 win=True"));
  ASSERT_EQ(g.terminations.size(), 3u);
  EXPECT_EQ(g.terminations[0].kind, TerminationKind::MultiSpriteCounter);
  EXPECT_EQ(g.terminations[0].sprites, (std::vector<std::string>{"bat", "spider"}));
  EXPECT_EQ(g.terminations[0].limit, 1);
  EXPECT_EQ(g.terminations[1].kind, TerminationKind::Timeout);
  EXPECT_EQ(g.terminations[1].limit, 100);
}

TEST(Parser, BundledGamesRoundTrip) {
  for (const auto& name : {"aliens", "zelda", "butterflies", "survive"}) {
    auto g = testkit::bundled(name).game;
    EXPECT_EQ(parse_game(to_source(g)), g) << name;
  }
}

TEST(Parser, RandomGamesRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto rg = testkit::random_game(rng);
    auto g = parse_game(rg.source);
    EXPECT_EQ(parse_game(to_source(g)), g) << rg.source;
    EXPECT_EQ(to_source(parse_game(to_source(g))), to_source(g));
  }
}

TEST(Parser, DepthMatchesGenerator) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto rg = testkit::random_game(rng);
    EXPECT_EQ(hierarchy_depth(parse_game(rg.source)), rg.expected_depth) << rg.source;
  }
}

TEST(Parser, BundledDepths) {
  EXPECT_EQ(hierarchy_depth(testkit::bundled("aliens").game), 1);
  EXPECT_EQ(hierarchy_depth(testkit::bundled("survive").game), 0);
  EXPECT_EQ(hierarchy_depth(testkit::fixture("pacman").game), 3);
}

TEST(Level, Parses) {
  auto g = parse_game(kMinimal);
  auto lvl = parse_level("www\nwAb\n", g, "small");
  EXPECT_EQ(lvl.width, 3);
  EXPECT_EQ(lvl.height, 2);
  EXPECT_EQ(lvl.at(2, 1), 'b');
  EXPECT_EQ(lvl.name, "small");
}

TEST(Level, Ragged) {
  auto g = parse_game(kMinimal);
  try {
    parse_level("www\nwA\n", g);
    FAIL() << "expected RaggedLevel";
  } catch (const RaggedLevel& e) {
    EXPECT_EQ(e.row(), 1);
  }
  EXPECT_THROW(parse_level("", g), RaggedLevel);
}

TEST(Level, UnmappedChar) {
  auto g = parse_game(kMinimal);
  try {
    parse_level("www\nwAz\n", g);
    FAIL() << "expected UnmappedChar";
  } catch (const UnmappedChar& e) {
    EXPECT_EQ(e.row(), 1);
    EXPECT_EQ(e.col(), 2);
    EXPECT_EQ(e.character(), 'z');
  }
}
