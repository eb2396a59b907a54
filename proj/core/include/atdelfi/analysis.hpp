#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atdelfi/mechanic_graph.hpp"

namespace atdelfi {

/// Non-fatal notes collected while analysing or rendering.
struct Diagnostics {
  std::vector<std::string> warnings;
  void warn(std::string msg) { warnings.push_back(std::move(msg)); }
};

}  // namespace atdelfi

namespace atdelfi::analysis {

using graph::MechanicGraph;
using graph::MechanicId;
using graph::NodeId;

struct ControlScheme {
  std::string avatar;
  vgdl::SpriteClass avatar_class = vgdl::SpriteClass::MovingAvatar;
  std::string movement_text;
  std::optional<std::string> action_text;

  bool operator==(const ControlScheme&) const = default;
};

enum class PathKind { Win, Lose };

struct CriticalPath {
  PathKind kind = PathKind::Win;
  std::vector<MechanicId> mechanics;  // terminal mechanic last
  std::size_t terminal = 0;           // termination index
  std::optional<std::string> avatar;  // avatar the win path starts from
  /// Win path whose terminal no avatar can reach; holds the terminal only.
  bool incomplete = false;

  bool operator==(const CriticalPath&) const = default;
};

enum class PathStrategy { Shortest, LongestShortest };

struct AnalysisResult {
  std::vector<ControlScheme> controls;
  std::vector<CriticalPath> win_paths;
  std::vector<CriticalPath> lose_paths;
  std::vector<MechanicId> point_mechanics;
  MechanicGraph merged;
};

/// Movement sentence for an avatar class (without the "As the X, " prefix).
std::string movement_text(vgdl::SpriteClass avatar_class);

std::vector<ControlScheme> extract_controls(const MechanicGraph& g, Diagnostics* diag = nullptr);

/// Output sprite `produced` can satisfy input sprite `consumed` of another
/// mechanic: same sprite, or `consumed` is an ancestor of `produced`.
bool feeds(const MechanicGraph& g, NodeId produced, NodeId consumed);
/// Mechanic `to` can follow mechanic `from` on a critical path.
bool precedes(const MechanicGraph& g, const graph::Mechanic& from, const graph::Mechanic& to);

/// Per win terminal: the shortest mechanic chain from each avatar, then the
/// longest of those across avatars (or the shortest, with Shortest).
/// Equal-length candidates resolve to the lexicographically smallest id sequence.
std::vector<CriticalPath> find_win_paths(const MechanicGraph& g,
                                         PathStrategy strategy = PathStrategy::LongestShortest);

/// Per lose terminal: every mechanic that can raise or lower the population
/// of a counted sprite, by id, followed by the terminal. Timeouts stand alone.
std::vector<CriticalPath> find_lose_paths(const MechanicGraph& g);

/// Collapses complete sibling sets of identical collision mechanics into one
/// parent-level mechanic, deepest level first, until nothing changes.
MechanicGraph merge_rules(const MechanicGraph& g);

/// Active mechanics with a nonzero score delta, by |delta| descending then id.
std::vector<MechanicId> extract_point_rules(const MechanicGraph& g);

/// Full pipeline over a freshly built graph: merge, then controls, paths and points.
AnalysisResult analyze(const MechanicGraph& base, PathStrategy strategy = PathStrategy::LongestShortest,
                       Diagnostics* diag = nullptr);

/// Primitive mechanics a (possibly merged) mechanic stands for.
std::vector<MechanicId> primitives_of(const MechanicGraph& g, MechanicId id);

}  // namespace atdelfi::analysis
