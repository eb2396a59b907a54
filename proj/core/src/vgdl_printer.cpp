#include <sstream>

#include "atdelfi/vgdl.hpp"

namespace atdelfi::vgdl {

namespace {

void write_params(std::ostringstream& out, const Params& params) {
  for (const auto& [k, v] : params) out << ' ' << k << '=' << v;
}

std::string indent(int level) { return std::string(static_cast<std::size_t>(level) * 4, ' '); }

}  // namespace

std::string to_source(const GameDescription& game) {
  std::ostringstream out;
  out << "BasicGame";
  write_params(out, game.game_params);
  out << '\n';

  out << indent(1) << "SpriteSet\n";
  for (const auto& s : game.sprites) {
    out << indent(2 + s.depth) << s.name << " >";
    if (s.class_token) out << ' ' << *s.class_token;
    write_params(out, s.params);
    out << '\n';
  }

  out << indent(1) << "InteractionSet\n";
  for (const auto& i : game.interactions) {
    out << indent(2) << i.subject << ' ' << i.object << " > " << i.effect;
    write_params(out, i.params);
    if (i.score_delta != 0) out << " scoreChange=" << i.score_delta;
    out << '\n';
  }

  out << indent(1) << "TerminationSet\n";
  for (const auto& t : game.terminations) {
    out << indent(2) << to_string(t.kind);
    if (t.kind == TerminationKind::SpriteCounter) {
      out << " stype=" << t.sprites.front();
    } else if (t.kind == TerminationKind::MultiSpriteCounter) {
      for (std::size_t k = 0; k < t.sprites.size(); ++k) out << " stype" << (k + 1) << '=' << t.sprites[k];
    }
    out << " limit=" << t.limit << " win=" << (t.win ? "True" : "False");
    write_params(out, t.params);
    out << '\n';
  }

  out << indent(1) << "LevelMapping\n";
  for (const auto& [ch, names] : game.level_mapping) {
    out << indent(2) << ch << " >";
    for (const auto& n : names) out << ' ' << n;
    out << '\n';
  }
  return out.str();
}

}  // namespace atdelfi::vgdl
