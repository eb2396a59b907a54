#pragma once

// Picks a short snapshot window from recorded traces for every mechanic the
// tutorial mentions.

#include <optional>
#include <string>
#include <vector>

#include "atdelfi/analysis.hpp"
#include "atdelfi/simulator.hpp"

namespace atdelfi::demos {

using graph::MechanicId;
using sim::EventTrace;
using sim::Grid;

inline constexpr int kClipRadius = 2;
inline constexpr int kClipFrames = 2 * kClipRadius + 1;

struct ClipSource {
  std::string agent;
  std::string level;
  std::uint64_t seed = 0;
  int tick = 0;

  bool operator==(const ClipSource&) const = default;
};

struct DemoClip {
  MechanicId mechanic = 0;   // mechanic as listed in the tutorial (may be merged)
  MechanicId primitive = 0;  // rule whose event is shown
  std::vector<Grid> frames;  // kClipFrames snapshots, or empty when missing
  std::optional<ClipSource> source;
  bool missing = true;

  bool operator==(const DemoClip&) const = default;
};

/// Traces ordered by (agent, level, seed).
class TraceStore {
 public:
  void add(EventTrace trace);
  const std::vector<EventTrace>& traces() const { return traces_; }
  bool empty() const { return traces_.empty(); }

 private:
  std::vector<EventTrace> traces_;
};

/// Win path, lose path and point mechanics in that order, without repeats.
std::vector<MechanicId> referenced_mechanics(const analysis::AnalysisResult& analysis);

/// Window around the first firing of `primitive`: Won traces first, then any.
std::optional<DemoClip> find_clip(const TraceStore& store, MechanicId primitive);

/// One clip per primitive behind each referenced mechanic; missing clips
/// are kept with `missing` set.
std::vector<DemoClip> extract_demos(const analysis::AnalysisResult& analysis, const TraceStore& store);

/// Frames as plain text separated by form feeds.
std::string to_animation(const DemoClip& clip);

}  // namespace atdelfi::demos
