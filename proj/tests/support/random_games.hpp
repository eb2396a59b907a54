#pragma once

// Random VGDL sources for property tests.

#include <cstdint>
#include <random>
#include <string>

#include "atdelfi/vgdl.hpp"

namespace atdelfi::testkit {

struct RandomGameOptions {
  int max_groups = 4;        // root sprite groups besides the avatar
  int max_interactions = 8;
  bool allow_growth = true;  // cloneSprite/spawn effects, unbounded spawn points
  bool simulate = false;     // keep to classes and effects the simulator supports
  bool timeout_win = true;   // allow a Timeout win terminal
  bool chain = false;        // partners and win targets favour sprites earlier rules touched
};

struct RandomGame {
  std::string source;
  int expected_depth = 0;  // deepest sprite nesting as generated
};

RandomGame random_game(std::mt19937_64& rng, const RandomGameOptions& opts = {});

/// Level text with the avatar placed once and other mapped sprites scattered.
std::string random_level(std::mt19937_64& rng, const vgdl::GameDescription& game, int width, int height);

}  // namespace atdelfi::testkit
