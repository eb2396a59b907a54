#pragma once

// Plain-English tutorial text rendered from an analysis result.

#include <optional>
#include <string>
#include <vector>

#include "atdelfi/analysis.hpp"

namespace atdelfi::instructions {

using graph::MechanicGraph;
using graph::MechanicId;

enum class Section { Controls, Winning, Losing, Points };
std::string_view to_string(Section s);

struct Line {
  std::string text;
  /// Source mechanic; empty for control lines.
  std::optional<MechanicId> mechanic;
  /// Source avatar; set for control lines only.
  std::optional<std::string> avatar;

  bool operator==(const Line&) const = default;
};

struct InstructionDoc {
  std::vector<Line> controls;
  std::vector<Line> winning;
  std::vector<Line> losing;
  std::vector<Line> points;

  const std::vector<Line>& section(Section s) const;
  bool operator==(const InstructionDoc&) const = default;
};

inline constexpr Section kSections[] = {Section::Controls, Section::Winning, Section::Losing,
                                        Section::Points};

/// `a`/`an` followed by the phrase.
std::string with_article(const std::string& phrase);

/// Sentence describing what a mechanic does (used on critical paths).
std::string render_mechanic(const MechanicGraph& g, MechanicId id, Diagnostics* diag = nullptr);

/// Sentence describing a mechanic's score change.
std::string render_points(const MechanicGraph& g, MechanicId id);

/// Controls, then win paths in order, lose paths, and point rules. A mechanic
/// shared by several paths of one section is listed once.
InstructionDoc render_doc(const analysis::AnalysisResult& analysis, Diagnostics* diag = nullptr);

/// Section headers ("Controls:") followed by their lines, two-space indented.
std::string to_text(const InstructionDoc& doc);

}  // namespace atdelfi::instructions
