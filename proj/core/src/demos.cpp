#include "atdelfi/demos.hpp"

#include <algorithm>
#include <tuple>

namespace atdelfi::demos {

void TraceStore::add(EventTrace trace) {
  auto key = [](const EventTrace& t) { return std::tie(t.agent, t.level, t.seed); };
  auto pos = std::upper_bound(traces_.begin(), traces_.end(), trace,
                              [&](const EventTrace& a, const EventTrace& b) { return key(a) < key(b); });
  traces_.insert(pos, std::move(trace));
}

std::vector<MechanicId> referenced_mechanics(const analysis::AnalysisResult& analysis) {
  std::vector<MechanicId> out;
  auto add = [&](MechanicId id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  for (const auto& p : analysis.win_paths) std::for_each(p.mechanics.begin(), p.mechanics.end(), add);
  for (const auto& p : analysis.lose_paths) std::for_each(p.mechanics.begin(), p.mechanics.end(), add);
  std::for_each(analysis.point_mechanics.begin(), analysis.point_mechanics.end(), add);
  return out;
}

std::optional<DemoClip> find_clip(const TraceStore& store, MechanicId primitive) {
  for (bool won_only : {true, false}) {
    for (const auto& trace : store.traces()) {
      if (won_only && trace.outcome != sim::Outcome::Won) continue;
      auto ev = std::find_if(trace.events.begin(), trace.events.end(),
                             [&](const sim::TraceEvent& e) { return e.mechanic == primitive; });
      if (ev == trace.events.end()) continue;
      DemoClip clip;
      clip.mechanic = clip.primitive = primitive;
      clip.missing = false;
      clip.source = ClipSource{trace.agent, trace.level, trace.seed, ev->tick};
      for (int k = ev->tick - kClipRadius; k <= ev->tick + kClipRadius; ++k) {
        clip.frames.push_back(trace.snapshot(std::clamp(k, 0, trace.final_tick)));
      }
      return clip;
    }
  }
  return std::nullopt;
}

std::vector<DemoClip> extract_demos(const analysis::AnalysisResult& analysis, const TraceStore& store) {
  std::vector<DemoClip> out;
  for (MechanicId id : referenced_mechanics(analysis)) {
    for (MechanicId prim : analysis::primitives_of(analysis.merged, id)) {
      DemoClip clip;
      if (auto found = find_clip(store, prim)) clip = std::move(*found);
      clip.mechanic = id;
      clip.primitive = prim;
      out.push_back(std::move(clip));
    }
  }
  return out;
}

std::string to_animation(const DemoClip& clip) {
  std::string out;
  for (std::size_t i = 0; i < clip.frames.size(); ++i) {
    if (i) out += '\f';
    for (const auto& row : clip.frames[i]) out += row + "\n";
  }
  return out;
}

}  // namespace atdelfi::demos
