#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "atdelfi/pipeline.hpp"

namespace atdelfi::testkit {

inline std::string games_dir() { return ATDELFI_GAMES_DIR; }
inline std::string fixtures_dir() { return ATDELFI_FIXTURES_DIR; }

inline LoadedGame bundled(const std::string& name) { return load_game(games_dir() + "/" + name + ".vgdl"); }
inline LoadedGame fixture(const std::string& name) { return load_game(fixtures_dir() + "/" + name + ".vgdl"); }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Mechanic id of the interaction at `index` in declaration order.
inline graph::MechanicId interaction(const graph::MechanicGraph& g, std::size_t index) {
  return g.interaction_mechanics.at(index);
}

}  // namespace atdelfi::testkit
