#pragma once

// Tutorial card: instruction lines paired with their demonstration clips.

#include <optional>
#include <string>
#include <vector>

#include "atdelfi/demos.hpp"
#include "atdelfi/instructions.hpp"

namespace atdelfi::card {

inline constexpr std::string_view kNoDemo = "no demonstration available";
inline constexpr std::string_view kNoScoring = "This game has no scoring rules.";

struct CardLine {
  std::string text;
  std::optional<graph::MechanicId> mechanic;
  std::vector<demos::DemoClip> clips;  // present clips only
  bool no_demo = false;                // nothing to show for this line

  bool operator==(const CardLine&) const = default;
};

struct CardSection {
  instructions::Section section = instructions::Section::Controls;
  std::vector<CardLine> lines;
  std::optional<std::string> note;

  bool operator==(const CardSection&) const = default;
};

struct CardDocument {
  std::string game;
  std::vector<CardSection> sections;  // Controls, Winning, Losing, Points

  const CardSection& section(instructions::Section s) const;
  bool operator==(const CardDocument&) const = default;
};

CardDocument assemble_card(const instructions::InstructionDoc& doc, const std::vector<demos::DemoClip>& clips,
                           std::string game = {});

/// Markdown rendering with each clip's frames in a fenced block.
std::string to_markdown(const CardDocument& card);

}  // namespace atdelfi::card
