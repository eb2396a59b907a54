#pragma once

// Brute-force reference for win path selection. Shares no code with the
// library's search: ancestry comes from the game's sprite list, and paths
// are found by enumerating simple paths.

#include <vector>

#include "atdelfi/analysis.hpp"

namespace atdelfi::testkit {

std::vector<analysis::CriticalPath> enumerate_win_paths(const vgdl::GameDescription& game,
                                                        const graph::MechanicGraph& g,
                                                        analysis::PathStrategy strategy);

}  // namespace atdelfi::testkit
