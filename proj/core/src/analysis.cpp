#include "atdelfi/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>

namespace atdelfi::analysis {

using graph::ActionKind;
using graph::ConditionKind;
using graph::Mechanic;

namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max();

const Mechanic& mech(const MechanicGraph& g, MechanicId id) {
  return g.mechanics.at(static_cast<std::size_t>(id));
}

}  // namespace

std::string movement_text(vgdl::SpriteClass avatar_class) {
  using vgdl::SpriteClass;
  switch (avatar_class) {
    case SpriteClass::MovingAvatar:
      return "use the four arrow keys to move.";
    case SpriteClass::HorizontalAvatar:
      return "use the left and right arrow keys to move.";
    case SpriteClass::VerticalAvatar:
      return "use the up and down arrow keys to move.";
    // FlakAvatar follows the worked Aliens card rather than the per-class table.
    case SpriteClass::FlakAvatar:
    case SpriteClass::OrientedAvatar:
    case SpriteClass::ShootAvatar:
      return "use the arrow keys to turn and move.";
    case SpriteClass::OngoingAvatar:
      return "use the arrow keys to change direction. You will not stop traveling in that "
             "direction until you change direction again.";
    case SpriteClass::OngoingShootAvatar:
      return "use the arrow keys to change direction.";
    case SpriteClass::OngoingTurningAvatar:
      return "use the arrow keys to change direction. You cannot do 180 degree turns!";
    default:
      return "use the arrow keys to move.";
  }
}

std::vector<ControlScheme> extract_controls(const MechanicGraph& g, Diagnostics* diag) {
  std::vector<ControlScheme> out;
  for (NodeId a : g.avatars) {
    const auto& obj = g.object(a);
    ControlScheme c;
    c.avatar = obj.sprite;
    c.avatar_class = obj.sprite_class;
    c.movement_text = movement_text(obj.sprite_class);
    if (!vgdl::is_avatar_class(obj.sprite_class) && diag) {
      diag->warn("unknown avatar class '" + obj.class_token.value_or("?") + "' for " + obj.sprite +
                 "; using generic controls");
    }
    if (auto rule = g.input_rule_for(a)) {
      const auto& m = mech(g, *rule);
      c.action_text = "Press space to shoot the " + graph::display_name(g, m.outputs.front()) + ".";
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool feeds(const MechanicGraph& g, NodeId produced, NodeId consumed) {
  return g.is_a(produced, consumed);
}

bool precedes(const MechanicGraph& g, const Mechanic& from, const Mechanic& to) {
  for (NodeId o : from.outputs) {
    for (NodeId i : to.inputs) {
      if (feeds(g, o, i)) return true;
    }
  }
  return false;
}

std::vector<CriticalPath> find_win_paths(const MechanicGraph& g, PathStrategy strategy) {
  const auto active = g.active_mechanics();
  const std::size_t n = g.mechanics.size();
  std::vector<std::vector<MechanicId>> succ(n), pred(n);
  for (MechanicId a : active) {
    for (MechanicId b : active) {
      if (a != b && precedes(g, mech(g, a), mech(g, b))) {
        succ[static_cast<std::size_t>(a)].push_back(b);
        pred[static_cast<std::size_t>(b)].push_back(a);
      }
    }
  }

  std::vector<CriticalPath> out;
  for (std::size_t t = 0; t < g.termination_mechanics.size(); ++t) {
    const MechanicId terminal = g.termination_mechanics[t];
    const auto& tm = mech(g, terminal);
    if (g.action(tm).kind != ActionKind::Win) continue;
    CriticalPath path{PathKind::Win, {terminal}, t, std::nullopt, false};
    if (g.condition(tm).kind == ConditionKind::Timeout) {
      out.push_back(std::move(path));
      continue;
    }

    std::vector<int> dist(n, kUnreachable);
    std::deque<MechanicId> queue{terminal};
    dist[static_cast<std::size_t>(terminal)] = 0;
    while (!queue.empty()) {
      MechanicId cur = queue.front();
      queue.pop_front();
      for (MechanicId p : pred[static_cast<std::size_t>(cur)]) {
        if (dist[static_cast<std::size_t>(p)] == kUnreachable) {
          dist[static_cast<std::size_t>(p)] = dist[static_cast<std::size_t>(cur)] + 1;
          queue.push_back(p);
        }
      }
    }

    std::vector<std::pair<std::vector<MechanicId>, NodeId>> candidates;
    for (NodeId a : g.avatars) {
      // Ids ascend, so the first hit at a distance is the smallest.
      std::optional<MechanicId> start;
      for (MechanicId m : active) {
        const auto& inputs = mech(g, m).inputs;
        bool touches = std::any_of(inputs.begin(), inputs.end(), [&](NodeId i) { return g.is_a(a, i); });
        if (!touches || dist[static_cast<std::size_t>(m)] == kUnreachable) continue;
        if (!start || dist[static_cast<std::size_t>(m)] < dist[static_cast<std::size_t>(*start)]) start = m;
      }
      if (!start) continue;
      std::vector<MechanicId> seq{*start};
      MechanicId cur = *start;
      while (cur != terminal) {
        MechanicId next = -1;
        for (MechanicId s : succ[static_cast<std::size_t>(cur)]) {
          if (dist[static_cast<std::size_t>(s)] == dist[static_cast<std::size_t>(cur)] - 1 &&
              (next < 0 || s < next)) {
            next = s;
          }
        }
        cur = next;
        seq.push_back(cur);
      }
      candidates.emplace_back(std::move(seq), a);
    }

    if (candidates.empty()) {
      path.incomplete = true;
      out.push_back(std::move(path));
      continue;
    }
    auto better = [&](const auto& x, const auto& y) {
      if (x.first.size() != y.first.size()) {
        return strategy == PathStrategy::LongestShortest ? x.first.size() > y.first.size()
                                                         : x.first.size() < y.first.size();
      }
      return x.first < y.first;
    };
    const auto& best = *std::min_element(candidates.begin(), candidates.end(), better);
    path.mechanics = best.first;
    path.avatar = g.sprite(best.second);
    out.push_back(std::move(path));
  }
  return out;
}

std::vector<CriticalPath> find_lose_paths(const MechanicGraph& g) {
  std::vector<CriticalPath> out;
  const auto active = g.active_mechanics();
  for (std::size_t t = 0; t < g.termination_mechanics.size(); ++t) {
    const MechanicId terminal = g.termination_mechanics[t];
    const auto& tm = mech(g, terminal);
    if (g.action(tm).kind != ActionKind::Lose) continue;
    CriticalPath path{PathKind::Lose, {}, t, std::nullopt, false};
    if (g.condition(tm).kind != ConditionKind::Timeout) {
      for (MechanicId m : active) {
        const auto& mm = mech(g, m);
        if (g.is_terminal(mm)) continue;
        auto kind = g.action(mm).kind;
        if (kind != ActionKind::KillSprite && kind != ActionKind::TransformTo && kind != ActionKind::Spawn) {
          continue;
        }
        bool related = false;
        for (NodeId o : mm.outputs) {
          for (NodeId c : tm.inputs) related = related || g.is_a(o, c) || g.is_a(c, o);
        }
        if (related) path.mechanics.push_back(m);
      }
    }
    path.mechanics.push_back(terminal);
    out.push_back(std::move(path));
  }
  return out;
}

std::vector<MechanicId> extract_point_rules(const MechanicGraph& g) {
  std::vector<MechanicId> out;
  for (MechanicId m : g.active_mechanics()) {
    if (mech(g, m).score_delta != 0) out.push_back(m);
  }
  std::stable_sort(out.begin(), out.end(), [&](MechanicId a, MechanicId b) {
    return std::abs(mech(g, a).score_delta) > std::abs(mech(g, b).score_delta);
  });
  return out;
}

AnalysisResult analyze(const MechanicGraph& base, PathStrategy strategy, Diagnostics* diag) {
  AnalysisResult r;
  r.merged = merge_rules(base);
  r.controls = extract_controls(r.merged, diag);
  r.win_paths = find_win_paths(r.merged, strategy);
  r.lose_paths = find_lose_paths(r.merged);
  r.point_mechanics = extract_point_rules(r.merged);
  return r;
}

std::vector<MechanicId> primitives_of(const MechanicGraph& g, MechanicId id) {
  const auto& m = mech(g, id);
  if (m.merged_from.empty()) return {id};
  return m.merged_from;
}

}  // namespace atdelfi::analysis
