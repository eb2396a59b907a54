#include <algorithm>

#include "atdelfi/analysis.hpp"

namespace atdelfi::analysis {

using graph::ConditionKind;
using graph::Mechanic;

namespace {

struct Group {
  NodeId parent = -1;
  std::size_t role = 0;  // input slot that moves up to the parent
  std::vector<MechanicId> members;
  MechanicId model = 0;
};

bool same_rule(const MechanicGraph& g, const Mechanic& a, const Mechanic& b, std::size_t role) {
  const std::size_t other = 1 - role;
  return a.inputs[other] == b.inputs[other] && a.score_delta == b.score_delta &&
         g.action(a).effect == g.action(b).effect && g.action(a).params == g.action(b).params;
}

bool is_collision(const MechanicGraph& g, const Mechanic& m) {
  return m.active() && g.condition(m).kind == ConditionKind::Collision && m.inputs.size() == 2;
}

std::optional<Group> find_group(const MechanicGraph& g) {
  std::optional<Group> best;
  for (const auto& m : g.mechanics) {
    if (!is_collision(g, m)) continue;
    for (std::size_t role = 0; role < 2; ++role) {
      const NodeId parent = g.object(m.inputs[role]).parent;
      if (parent < 0) continue;
      const auto kids = g.children(parent);
      if (kids.size() < 2) continue;
      Group grp{parent, role, {}, m.id};
      for (NodeId kid : kids) {
        auto it = std::find_if(g.mechanics.begin(), g.mechanics.end(), [&](const Mechanic& c) {
          return is_collision(g, c) && c.inputs[role] == kid && same_rule(g, m, c, role);
        });
        if (it == g.mechanics.end()) break;
        grp.members.push_back(it->id);
      }
      if (grp.members.size() != kids.size()) continue;
      std::sort(grp.members.begin(), grp.members.end());
      if (!best) {
        best = grp;
        continue;
      }
      int d = g.depth(parent), bd = g.depth(best->parent);
      if (d > bd || (d == bd && grp.members.front() < best->members.front())) best = grp;
    }
  }
  return best;
}

}  // namespace

MechanicGraph merge_rules(const MechanicGraph& base) {
  MechanicGraph g = base;
  while (auto grp = find_group(g)) {
    const Mechanic model = g.mechanics[static_cast<std::size_t>(grp->model)];
    std::vector<NodeId> inputs = model.inputs;
    inputs[grp->role] = grp->parent;
    std::vector<MechanicId> prims;
    for (MechanicId id : grp->members) {
      auto p = primitives_of(g, id);
      prims.insert(prims.end(), p.begin(), p.end());
    }
    std::sort(prims.begin(), prims.end());
    MechanicId merged = graph::add_mechanic(g, std::move(inputs), g.condition(model), g.action(model),
                                            {graph::OriginKind::Merged, -1});
    g.mechanics[static_cast<std::size_t>(merged)].merged_from = std::move(prims);
    for (MechanicId id : grp->members) g.mechanics[static_cast<std::size_t>(id)].absorbed_by = merged;
  }
  return g;
}

}  // namespace atdelfi::analysis
