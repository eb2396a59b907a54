#include "atdelfi/instructions.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace atdelfi::instructions {

using graph::ActionKind;
using graph::ConditionKind;
using graph::NodeId;

namespace {

const graph::Mechanic& mech(const MechanicGraph& g, MechanicId id) {
  return g.mechanics.at(static_cast<std::size_t>(id));
}

std::string name(const MechanicGraph& g, NodeId id) { return graph::display_name(g, id); }

// Counted sprites as players see them: abstract parents stand for their leaves.
std::vector<NodeId> leaves(const MechanicGraph& g, const std::vector<NodeId>& roots) {
  std::vector<NodeId> out;
  auto visit = [&](auto&& self, NodeId n) -> void {
    auto kids = g.children(n);
    if (kids.empty()) {
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
      return;
    }
    for (NodeId k : kids) self(self, k);
  };
  for (NodeId r : roots) visit(visit, r);
  return out;
}

std::string outcome(ActionKind k) { return k == ActionKind::Win ? "win" : "lose"; }

std::string collide(const MechanicGraph& g, const graph::Mechanic& m) {
  return "If " + name(g, m.inputs[0]) + " and " + name(g, m.inputs[1]) + " collide, then ";
}

}  // namespace

std::string_view to_string(Section s) {
  switch (s) {
    case Section::Controls: return "Controls";
    case Section::Winning: return "Winning";
    case Section::Losing: return "Losing";
    case Section::Points: return "Points";
  }
  return "Controls";
}

const std::vector<Line>& InstructionDoc::section(Section s) const {
  switch (s) {
    case Section::Controls: return controls;
    case Section::Winning: return winning;
    case Section::Losing: return losing;
    case Section::Points: return points;
  }
  return controls;
}

std::string with_article(const std::string& phrase) {
  if (phrase.empty()) return phrase;
  const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(phrase.front())));
  const bool vowel = c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
  return (vowel ? "an " : "a ") + phrase;
}

std::string render_mechanic(const MechanicGraph& g, MechanicId id, Diagnostics* diag) {
  const auto& m = mech(g, id);
  const auto& cond = g.condition(m);
  const auto& act = g.action(m);
  switch (cond.kind) {
    case ConditionKind::SpriteCounter:
    case ConditionKind::MultiSpriteCounter: {
      std::string list;
      for (NodeId n : leaves(g, m.inputs)) {
        if (!list.empty()) list += " or ";
        list += name(g, n) + " sprites";
      }
      std::string head = cond.limit == 0 ? "If there are no more " + list
                                         : "If there are " + std::to_string(cond.limit) + " or fewer " + list;
      return head + " then you will " + outcome(act.kind) + ".";
    }
    case ConditionKind::Timeout:
      return "If time runs out after " + std::to_string(cond.limit) + " ticks, then you will " +
             outcome(act.kind) + ".";
    case ConditionKind::PlayerInput:
      return "If you press space, then " + name(g, m.inputs[0]) + " will shoot " +
             with_article(name(g, m.outputs.front())) + ".";
    case ConditionKind::Behavior:
      return "Over time, " + name(g, m.inputs[0]) + " will spawn " + with_article(name(g, m.outputs.front())) + ".";
    case ConditionKind::Collision:
      break;
  }
  switch (act.kind) {
    case ActionKind::KillSprite:
      return collide(g, m) + "the " + name(g, m.inputs[0]) + " sprite will be destroyed.";
    case ActionKind::TransformTo:
      if (m.outputs.size() > 1) {
        return collide(g, m) + "the " + name(g, m.inputs[0]) + " sprite will turn into " +
               with_article(name(g, m.outputs[1])) + " sprite.";
      }
      break;
    case ActionKind::Spawn:
      return collide(g, m) + "a new " + name(g, m.outputs.front()) + " sprite will be created.";
    case ActionKind::StepBack:
      return collide(g, m) + "the " + name(g, m.inputs[0]) + " sprite will be pushed back.";
    case ActionKind::Win:
    case ActionKind::Lose:
      return collide(g, m) + "you will " + outcome(act.kind) + ".";
    case ActionKind::Other:
      break;
  }
  if (diag) diag->warn("no template for effect '" + act.effect + "'; using generic sentence");
  return collide(g, m) + act.effect + " occurs.";
}

std::string render_points(const MechanicGraph& g, MechanicId id) {
  const auto& m = mech(g, id);
  const int n = std::abs(m.score_delta);
  std::string text = "If the " + name(g, m.inputs[0]);
  if (m.inputs.size() > 1) text += " and the " + name(g, m.inputs[1]) + " collide";
  text += ", then you will ";
  text += m.score_delta < 0 ? "lose " : "gain ";
  return text + std::to_string(n) + (n == 1 ? " point." : " points.");
}

InstructionDoc render_doc(const analysis::AnalysisResult& analysis, Diagnostics* diag) {
  const auto& g = analysis.merged;
  InstructionDoc doc;
  for (const auto& c : analysis.controls) {
    doc.controls.push_back({"As the " + c.avatar + ", " + c.movement_text, std::nullopt, c.avatar});
    if (c.action_text) doc.controls.push_back({*c.action_text, std::nullopt, c.avatar});
  }
  auto add_paths = [&](std::vector<Line>& lines, const std::vector<analysis::CriticalPath>& paths) {
    for (const auto& p : paths) {
      for (MechanicId id : p.mechanics) {
        bool seen = std::any_of(lines.begin(), lines.end(), [&](const Line& l) { return l.mechanic == id; });
        if (!seen) lines.push_back({render_mechanic(g, id, diag), id, std::nullopt});
      }
    }
  };
  add_paths(doc.winning, analysis.win_paths);
  add_paths(doc.losing, analysis.lose_paths);
  for (MechanicId id : analysis.point_mechanics) doc.points.push_back({render_points(g, id), id, std::nullopt});
  return doc;
}

std::string to_text(const InstructionDoc& doc) {
  std::string out;
  for (Section s : kSections) {
    out += std::string(to_string(s)) + ":\n";
    for (const auto& l : doc.section(s)) out += "  " + l.text + "\n";
  }
  return out;
}

}  // namespace atdelfi::instructions
