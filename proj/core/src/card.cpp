#include "atdelfi/card.hpp"

namespace atdelfi::card {

using instructions::Section;

const CardSection& CardDocument::section(Section s) const {
  for (const auto& sec : sections) {
    if (sec.section == s) return sec;
  }
  throw std::out_of_range("card has no section " + std::string(instructions::to_string(s)));
}

CardDocument assemble_card(const instructions::InstructionDoc& doc, const std::vector<demos::DemoClip>& clips,
                           std::string game) {
  CardDocument card;
  card.game = std::move(game);
  for (Section s : instructions::kSections) {
    CardSection sec;
    sec.section = s;
    for (const auto& line : doc.section(s)) {
      CardLine cl{line.text, line.mechanic, {}, false};
      if (line.mechanic) {
        for (const auto& c : clips) {
          if (c.mechanic == *line.mechanic && !c.missing) cl.clips.push_back(c);
        }
      }
      cl.no_demo = cl.clips.empty();
      sec.lines.push_back(std::move(cl));
    }
    if (s == Section::Points && sec.lines.empty()) sec.note = std::string(kNoScoring);
    card.sections.push_back(std::move(sec));
  }
  return card;
}

std::string to_markdown(const CardDocument& card) {
  std::string out = "# Tutorial card";
  if (!card.game.empty()) out += ": " + card.game;
  out += "\n";
  for (const auto& sec : card.sections) {
    out += "\n## " + std::string(instructions::to_string(sec.section)) + "\n\n";
    if (sec.note) out += *sec.note + "\n";
    for (const auto& line : sec.lines) {
      out += "- " + line.text + "\n";
      if (line.no_demo) {
        out += "\n  _" + std::string(kNoDemo) + "_\n\n";
        continue;
      }
      for (const auto& clip : line.clips) {
        const auto& src = *clip.source;
        out += "\n  " + src.agent + " on " + src.level + ", seed " + std::to_string(src.seed) + ", tick " +
               std::to_string(src.tick) + "\n\n  ```\n";
        for (std::size_t f = 0; f < clip.frames.size(); ++f) {
          if (f) out += "\n";
          for (const auto& row : clip.frames[f]) out += "  " + row + "\n";
        }
        out += "  ```\n\n";
      }
    }
  }
  return out;
}

}  // namespace atdelfi::card
