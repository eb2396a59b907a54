#include "atdelfi/vgdl.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <utility>

namespace atdelfi::vgdl {

namespace {

constexpr std::array<std::pair<SpriteClass, std::string_view>, 20> kClassNames{{
    {SpriteClass::Abstract, "Abstract"},
    {SpriteClass::Opaque, "Opaque"},
    {SpriteClass::Immovable, "Immovable"},
    {SpriteClass::Passive, "Passive"},
    {SpriteClass::Missile, "Missile"},
    {SpriteClass::Bomber, "Bomber"},
    {SpriteClass::SpawnPoint, "SpawnPoint"},
    {SpriteClass::RandomNPC, "RandomNPC"},
    {SpriteClass::Chaser, "Chaser"},
    {SpriteClass::Fleeing, "Fleeing"},
    {SpriteClass::Resource, "Resource"},
    {SpriteClass::MovingAvatar, "MovingAvatar"},
    {SpriteClass::HorizontalAvatar, "HorizontalAvatar"},
    {SpriteClass::FlakAvatar, "FlakAvatar"},
    {SpriteClass::ShootAvatar, "ShootAvatar"},
    {SpriteClass::OngoingAvatar, "OngoingAvatar"},
    {SpriteClass::OngoingShootAvatar, "OngoingShootAvatar"},
    {SpriteClass::OngoingTurningAvatar, "OngoingTurningAvatar"},
    {SpriteClass::OrientedAvatar, "OrientedAvatar"},
    {SpriteClass::VerticalAvatar, "VerticalAvatar"},
}};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string file_stem(const std::string& path) {
  auto slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

}  // namespace

std::string_view to_string(SpriteClass c) {
  for (const auto& [cls, name] : kClassNames) {
    if (cls == c) return name;
  }
  return "Opaque";
}

std::optional<SpriteClass> sprite_class_from_token(std::string_view token) {
  for (const auto& [cls, name] : kClassNames) {
    if (name == token && cls != SpriteClass::Abstract && cls != SpriteClass::Opaque) return cls;
  }
  return std::nullopt;
}

bool is_avatar_class(SpriteClass c) {
  switch (c) {
    case SpriteClass::MovingAvatar:
    case SpriteClass::HorizontalAvatar:
    case SpriteClass::FlakAvatar:
    case SpriteClass::ShootAvatar:
    case SpriteClass::OngoingAvatar:
    case SpriteClass::OngoingShootAvatar:
    case SpriteClass::OngoingTurningAvatar:
    case SpriteClass::OrientedAvatar:
    case SpriteClass::VerticalAvatar:
      return true;
    default:
      return false;
  }
}

bool is_shooting_avatar_class(SpriteClass c) {
  return c == SpriteClass::FlakAvatar || c == SpriteClass::ShootAvatar ||
         c == SpriteClass::OngoingShootAvatar;
}

bool is_spawner_class(SpriteClass c) {
  return c == SpriteClass::SpawnPoint || c == SpriteClass::Bomber;
}

bool is_avatar_sprite(const SpriteDef& s) {
  if (is_avatar_class(s.sprite_class)) return true;
  return s.sprite_class == SpriteClass::Opaque && s.class_token && s.class_token->ends_with("Avatar");
}

std::string_view to_string(TerminationKind k) {
  switch (k) {
    case TerminationKind::SpriteCounter: return "SpriteCounter";
    case TerminationKind::MultiSpriteCounter: return "MultiSpriteCounter";
    case TerminationKind::Timeout: return "Timeout";
  }
  return "SpriteCounter";
}

const SpriteDef* GameDescription::find(std::string_view name) const {
  auto it = std::find_if(sprites.begin(), sprites.end(),
                         [&](const SpriteDef& s) { return s.name == name; });
  return it == sprites.end() ? nullptr : &*it;
}

std::optional<std::size_t> GameDescription::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < sprites.size(); ++i) {
    if (sprites[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::string> GameDescription::children(std::string_view name) const {
  std::vector<std::string> out;
  for (const auto& s : sprites) {
    if (s.parent && *s.parent == name) out.push_back(s.name);
  }
  return out;
}

bool GameDescription::has_children(std::string_view name) const {
  return std::any_of(sprites.begin(), sprites.end(),
                     [&](const SpriteDef& s) { return s.parent && *s.parent == name; });
}

bool GameDescription::is_a(std::string_view name, std::string_view ancestor) const {
  const SpriteDef* cur = find(name);
  if (cur == nullptr) return name == ancestor;
  // Bounded by sprite count so a malformed (cyclic) table cannot hang us.
  for (std::size_t guard = 0; cur != nullptr && guard <= sprites.size(); ++guard) {
    if (cur->name == ancestor) return true;
    cur = cur->parent ? find(*cur->parent) : nullptr;
  }
  return false;
}

Params GameDescription::resolved_params(std::string_view name) const {
  std::vector<const SpriteDef*> chain;
  for (const SpriteDef* cur = find(name); cur != nullptr && chain.size() <= sprites.size();
       cur = cur->parent ? find(*cur->parent) : nullptr) {
    chain.push_back(cur);
  }
  Params out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    for (const auto& [k, v] : (*it)->params) out[k] = v;
  }
  return out;
}

std::vector<std::string> GameDescription::avatars() const {
  std::vector<std::string> out;
  for (const auto& s : sprites) {
    if (is_avatar_sprite(s) && !has_children(s.name)) out.push_back(s.name);
  }
  return out;
}

bool GameDescription::uses_end_of_screen() const {
  return std::any_of(interactions.begin(), interactions.end(), [](const InteractionDef& i) {
    return i.subject == kEndOfScreen || i.object == kEndOfScreen;
  });
}

ReferenceError::ReferenceError(const std::string& name, int line)
    : VgdlError("line " + std::to_string(line) + ": unknown sprite '" + name + "'", line),
      name_(name) {}

MissingSection::MissingSection(const std::string& section)
    : VgdlError("missing section '" + section + "'", 0), section_(section) {}

RaggedLevel::RaggedLevel(int row, int expected, int actual)
    : VgdlError("level row " + std::to_string(row) + " has " + std::to_string(actual) +
                    " cells, expected " + std::to_string(expected),
                row + 1),
      row_(row) {}

UnmappedChar::UnmappedChar(int row, int col, char ch)
    : VgdlError("level row " + std::to_string(row) + ", column " + std::to_string(col) +
                    ": character '" + std::string(1, ch) + "' is not in the LevelMapping",
                row + 1),
      row_(row),
      col_(col),
      ch_(ch) {}

int hierarchy_depth(const GameDescription& game) {
  int best = 0;
  for (const auto& s : game.sprites) best = std::max(best, s.depth);
  return best;
}

GameDescription load_game_file(const std::string& path) { return parse_game(read_file(path)); }

LevelGrid load_level_file(const std::string& path, const GameDescription& game) {
  return parse_level(read_file(path), game, file_stem(path));
}

}  // namespace atdelfi::vgdl
