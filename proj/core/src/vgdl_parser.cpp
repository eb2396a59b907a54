#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "atdelfi/vgdl.hpp"

namespace atdelfi::vgdl {

namespace {

struct SourceLine {
  int number = 0;
  int level = 0;
  std::string_view text;  // comment stripped, trimmed
};

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '_';
  });
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void syntax(int line, const std::string& msg) {
  throw SyntaxError("line " + std::to_string(line) + ": " + msg, line);
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::optional<bool> parse_bool(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "true") return true;
  if (lower == "false") return false;
  return std::nullopt;
}

// Splits the source into non-blank logical lines and assigns indentation
// levels from a stack of indentation widths.
std::vector<SourceLine> lex_lines(std::string_view source) {
  std::vector<SourceLine> out;
  std::vector<std::size_t> widths{0};
  char indent_char = 0;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    auto end = source.find('\n', pos);
    if (end == std::string_view::npos) end = source.size();
    std::string_view raw = source.substr(pos, end - pos);
    pos = end + 1;
    ++number;

    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim_right(raw);
    std::size_t lead = 0;
    while (lead < raw.size() && (raw[lead] == ' ' || raw[lead] == '\t')) ++lead;
    if (lead == raw.size()) {
      if (end == source.size()) break;
      continue;
    }
    for (std::size_t i = 0; i < lead; ++i) {
      if (indent_char == 0) indent_char = raw[i];
      if (raw[i] != indent_char) syntax(number, "mixed tabs and spaces in indentation");
    }

    if (lead > widths.back()) {
      widths.push_back(lead);
    } else {
      while (lead < widths.back()) widths.pop_back();
      if (lead != widths.back()) syntax(number, "dedent does not match any outer indentation level");
    }
    out.push_back({number, static_cast<int>(widths.size()) - 1, raw.substr(lead)});
    if (end == source.size()) break;
  }
  return out;
}

struct KeyValue {
  std::string key;
  std::string value;
};

KeyValue parse_param(std::string_view token, int line) {
  auto eq = token.find('=');
  if (eq == std::string_view::npos) syntax(line, "expected key=value, got '" + std::string(token) + "'");
  auto key = token.substr(0, eq);
  auto value = token.substr(eq + 1);
  if (!is_identifier(key)) syntax(line, "bad parameter name '" + std::string(key) + "'");
  if (value.empty()) syntax(line, "parameter '" + std::string(key) + "' has no value");
  return {std::string(key), std::string(value)};
}

void add_param(Params& params, const KeyValue& kv, int line) {
  if (!params.emplace(kv.key, kv.value).second) syntax(line, "duplicate parameter '" + kv.key + "'");
}

struct Arrow {
  std::string_view left;
  std::string_view right;
  bool present = false;
};

Arrow split_arrow(std::string_view text) {
  auto gt = text.find('>');
  if (gt == std::string_view::npos) return {text, {}, false};
  return {text.substr(0, gt), text.substr(gt + 1), true};
}

enum class Section { None, Sprites, Interactions, Terminations, Mapping };

struct Parser {
  GameDescription game;
  std::vector<int> sprite_lines;
  std::vector<int> interaction_lines;
  std::vector<int> termination_lines;
  std::map<char, int> mapping_lines;
  // Sprite names on the current nesting path, by depth.
  std::vector<std::string> sprite_stack;
  bool seen[5] = {false, false, false, false, false};

  void parse_sprite(const SourceLine& ln) {
    const int depth = ln.level - 2;
    if (depth > static_cast<int>(sprite_stack.size())) syntax(ln.number, "sprite nested too deeply");
    sprite_stack.resize(static_cast<std::size_t>(depth));

    auto arrow = split_arrow(ln.text);
    auto left = split_ws(arrow.left);
    if (left.size() != 1 || !is_identifier(left[0])) syntax(ln.number, "expected a sprite name");
    if (left[0] == kEndOfScreen) syntax(ln.number, "'EOS' is reserved");

    SpriteDef def;
    def.name = std::string(left[0]);
    def.depth = depth;
    if (depth > 0) def.parent = sprite_stack.back();
    auto right = split_ws(arrow.right);
    for (std::size_t i = 0; i < right.size(); ++i) {
      if (right[i].find('=') == std::string_view::npos) {
        if (i != 0 || !is_identifier(right[i])) {
          syntax(ln.number, "unexpected token '" + std::string(right[i]) + "'");
        }
        def.class_token = std::string(right[i]);
      } else {
        add_param(def.params, parse_param(right[i], ln.number), ln.number);
      }
    }
    if (game.find(def.name) != nullptr) syntax(ln.number, "duplicate sprite '" + def.name + "'");
    sprite_stack.push_back(def.name);
    game.sprites.push_back(std::move(def));
    sprite_lines.push_back(ln.number);
  }

  void parse_interaction(const SourceLine& ln) {
    auto arrow = split_arrow(ln.text);
    if (!arrow.present) syntax(ln.number, "interaction needs '>'");
    auto left = split_ws(arrow.left);
    auto right = split_ws(arrow.right);
    if (left.size() != 2) syntax(ln.number, "interaction needs exactly two sprites before '>'");
    for (auto tok : left) {
      if (!is_identifier(tok)) syntax(ln.number, "bad sprite name '" + std::string(tok) + "'");
    }
    if (right.empty() || !is_identifier(right[0])) syntax(ln.number, "interaction needs an effect");
    InteractionDef def;
    def.subject = std::string(left[0]);
    def.object = std::string(left[1]);
    def.effect = std::string(right[0]);
    for (std::size_t i = 1; i < right.size(); ++i) {
      auto kv = parse_param(right[i], ln.number);
      if (kv.key == "scoreChange") {
        auto v = parse_int(kv.value);
        if (!v) syntax(ln.number, "scoreChange must be an integer");
        def.score_delta = *v;
      } else {
        add_param(def.params, kv, ln.number);
      }
    }
    game.interactions.push_back(std::move(def));
    interaction_lines.push_back(ln.number);
  }

  void parse_termination(const SourceLine& ln) {
    auto tokens = split_ws(ln.text);
    TerminationDef def;
    if (tokens[0] == "SpriteCounter") {
      def.kind = TerminationKind::SpriteCounter;
    } else if (tokens[0] == "MultiSpriteCounter") {
      def.kind = TerminationKind::MultiSpriteCounter;
    } else if (tokens[0] == "Timeout") {
      def.kind = TerminationKind::Timeout;
    } else {
      syntax(ln.number, "unknown termination '" + std::string(tokens[0]) + "'");
    }
    std::map<int, std::string> numbered;
    bool saw_win = false;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      auto kv = parse_param(tokens[i], ln.number);
      if (kv.key == "limit") {
        auto v = parse_int(kv.value);
        if (!v) syntax(ln.number, "limit must be an integer");
        def.limit = *v;
      } else if (kv.key == "win") {
        auto v = parse_bool(kv.value);
        if (!v) syntax(ln.number, "win must be True or False");
        def.win = *v;
        saw_win = true;
      } else if (kv.key == "stype" && def.kind == TerminationKind::SpriteCounter) {
        if (!def.sprites.empty()) syntax(ln.number, "duplicate stype");
        def.sprites.push_back(kv.value);
      } else if (kv.key.rfind("stype", 0) == 0 && def.kind == TerminationKind::MultiSpriteCounter &&
                 parse_int(std::string_view(kv.key).substr(5))) {
        int n = *parse_int(std::string_view(kv.key).substr(5));
        if (!numbered.emplace(n, kv.value).second) syntax(ln.number, "duplicate " + kv.key);
      } else {
        add_param(def.params, kv, ln.number);
      }
    }
    for (auto& [n, name] : numbered) def.sprites.push_back(name);
    if (!saw_win) syntax(ln.number, "termination needs win=True or win=False");
    switch (def.kind) {
      case TerminationKind::SpriteCounter:
        if (def.sprites.size() != 1) syntax(ln.number, "SpriteCounter needs exactly one stype");
        break;
      case TerminationKind::MultiSpriteCounter:
        if (def.sprites.size() < 2) syntax(ln.number, "MultiSpriteCounter needs stype1 and stype2");
        break;
      case TerminationKind::Timeout:
        if (def.limit <= 0) syntax(ln.number, "Timeout needs limit > 0");
        break;
    }
    game.terminations.push_back(std::move(def));
    termination_lines.push_back(ln.number);
  }

  void parse_mapping(const SourceLine& ln) {
    auto arrow = split_arrow(ln.text);
    if (!arrow.present) syntax(ln.number, "mapping needs '>'");
    auto left = split_ws(arrow.left);
    auto right = split_ws(arrow.right);
    if (left.size() != 1 || left[0].size() != 1) syntax(ln.number, "mapping key must be one character");
    const char key = left[0][0];
    if (key == kBlankCell) syntax(ln.number, "'.' is the blank cell and cannot be mapped");
    if (right.empty()) syntax(ln.number, "mapping needs at least one sprite");
    std::vector<std::string> names;
    for (auto tok : right) {
      if (!is_identifier(tok)) syntax(ln.number, "bad sprite name '" + std::string(tok) + "'");
      names.emplace_back(tok);
    }
    if (!game.level_mapping.emplace(key, std::move(names)).second) {
      syntax(ln.number, "duplicate mapping for '" + std::string(1, key) + "'");
    }
    mapping_lines[key] = ln.number;
  }

  void resolve_classes() {
    for (auto& s : game.sprites) {
      if (s.class_token) {
        s.sprite_class = sprite_class_from_token(*s.class_token).value_or(SpriteClass::Opaque);
        continue;
      }
      if (game.has_children(s.name)) {
        s.sprite_class = SpriteClass::Abstract;
        continue;
      }
      s.sprite_class = SpriteClass::Immovable;
      for (const SpriteDef* a = s.parent ? game.find(*s.parent) : nullptr; a != nullptr;
           a = a->parent ? game.find(*a->parent) : nullptr) {
        if (a->class_token) {
          s.sprite_class = a->sprite_class;
          break;
        }
      }
    }
  }

  void require_sprite(const std::string& name, int line, bool allow_eos) const {
    if (allow_eos && name == kEndOfScreen) return;
    if (game.find(name) == nullptr) throw ReferenceError(name, line);
  }

  void resolve_references() const {
    for (std::size_t i = 0; i < game.sprites.size(); ++i) {
      const auto& s = game.sprites[i];
      if (auto it = s.params.find("stype"); it != s.params.end()) {
        require_sprite(it->second, sprite_lines[i], false);
      }
    }
    for (std::size_t i = 0; i < game.interactions.size(); ++i) {
      const auto& in = game.interactions[i];
      require_sprite(in.subject, interaction_lines[i], true);
      require_sprite(in.object, interaction_lines[i], true);
      if (in.subject == kEndOfScreen) {
        syntax(interaction_lines[i], "EOS may only appear as the second sprite");
      }
      if (auto it = in.params.find("stype"); it != in.params.end()) {
        require_sprite(it->second, interaction_lines[i], false);
      }
    }
    for (std::size_t i = 0; i < game.terminations.size(); ++i) {
      for (const auto& name : game.terminations[i].sprites) {
        require_sprite(name, termination_lines[i], false);
      }
    }
    for (const auto& [key, names] : game.level_mapping) {
      for (const auto& name : names) {
        require_sprite(name, mapping_lines.at(key), false);
        if (game.find(name)->sprite_class == SpriteClass::Abstract) {
          throw InvalidGame("line " + std::to_string(mapping_lines.at(key)) +
                                ": level mapping targets abstract sprite '" + name + "'",
                            mapping_lines.at(key));
        }
      }
    }
  }

  void validate() const {
    if (game.avatars().empty()) throw InvalidGame("game has no avatar sprite", 0);
    bool win = false;
    bool lose = false;
    for (const auto& t : game.terminations) (t.win ? win : lose) = true;
    if (!win) throw InvalidGame("game has no winning termination", 0);
    if (!lose) throw InvalidGame("game has no losing termination", 0);
  }
};

}  // namespace

GameDescription parse_game(std::string_view source) {
  auto lines = lex_lines(source);
  if (lines.empty()) throw SyntaxError("empty game description", 0);

  Parser p;
  Section current = Section::None;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& ln = lines[i];
    if (ln.level == 0) {
      if (i != 0) syntax(ln.number, "only one top-level BasicGame block is allowed");
      auto tokens = split_ws(ln.text);
      if (tokens[0] != "BasicGame") syntax(ln.number, "expected 'BasicGame'");
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        add_param(p.game.game_params, parse_param(tokens[t], ln.number), ln.number);
      }
      continue;
    }
    if (i == 0) syntax(ln.number, "expected 'BasicGame' at column 0");
    if (ln.level == 1) {
      auto tokens = split_ws(ln.text);
      if (tokens.size() != 1) syntax(ln.number, "section header takes no arguments");
      if (tokens[0] == "SpriteSet") {
        current = Section::Sprites;
      } else if (tokens[0] == "InteractionSet") {
        current = Section::Interactions;
      } else if (tokens[0] == "TerminationSet") {
        current = Section::Terminations;
      } else if (tokens[0] == "LevelMapping") {
        current = Section::Mapping;
      } else {
        syntax(ln.number, "unknown section '" + std::string(tokens[0]) + "'");
      }
      auto idx = static_cast<std::size_t>(current);
      if (p.seen[idx]) syntax(ln.number, "duplicate section '" + std::string(tokens[0]) + "'");
      p.seen[idx] = true;
      p.sprite_stack.clear();
      continue;
    }
    if (current != Section::Sprites && ln.level != 2) syntax(ln.number, "unexpected indentation");
    switch (current) {
      case Section::Sprites: p.parse_sprite(ln); break;
      case Section::Interactions: p.parse_interaction(ln); break;
      case Section::Terminations: p.parse_termination(ln); break;
      case Section::Mapping: p.parse_mapping(ln); break;
      case Section::None: syntax(ln.number, "statement outside of a section");
    }
  }

  constexpr std::pair<Section, const char*> kRequired[] = {
      {Section::Sprites, "SpriteSet"},
      {Section::Interactions, "InteractionSet"},
      {Section::Terminations, "TerminationSet"},
      {Section::Mapping, "LevelMapping"},
  };
  for (const auto& [section, name] : kRequired) {
    if (!p.seen[static_cast<std::size_t>(section)]) throw MissingSection(name);
  }

  p.resolve_classes();
  p.resolve_references();
  p.validate();
  return std::move(p.game);
}

LevelGrid parse_level(std::string_view source, const GameDescription& game, std::string name) {
  LevelGrid grid;
  grid.name = std::move(name);
  std::size_t pos = 0;
  std::vector<std::string> rows;
  while (pos <= source.size()) {
    auto end = source.find('\n', pos);
    if (end == std::string_view::npos) end = source.size();
    std::string_view row = source.substr(pos, end - pos);
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    rows.emplace_back(row);
    if (end == source.size()) break;
    pos = end + 1;
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (rows.empty()) throw RaggedLevel(0, 1, 0);

  const auto width = rows.front().size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width || width == 0) {
      throw RaggedLevel(static_cast<int>(r), static_cast<int>(width), static_cast<int>(rows[r].size()));
    }
    for (std::size_t c = 0; c < width; ++c) {
      const char ch = rows[r][c];
      if (ch != kBlankCell && !game.level_mapping.contains(ch)) {
        throw UnmappedChar(static_cast<int>(r), static_cast<int>(c), ch);
      }
    }
  }
  grid.width = static_cast<int>(width);
  grid.height = static_cast<int>(rows.size());
  grid.cells = std::move(rows);
  return grid;
}

}  // namespace atdelfi::vgdl
