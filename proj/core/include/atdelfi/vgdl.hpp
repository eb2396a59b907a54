#pragma once

// Game description model and parser for the VGDL-style language used by
// atdelfi. The grammar is documented in docs/formats.md.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace atdelfi::vgdl {

enum class SpriteClass {
  Abstract,  // grouping parent without its own class token
  Opaque,    // class token we do not know; kept for analysis only
  Immovable,
  Passive,
  Missile,
  Bomber,
  SpawnPoint,
  RandomNPC,
  Chaser,
  Fleeing,
  Resource,
  MovingAvatar,
  HorizontalAvatar,
  FlakAvatar,
  ShootAvatar,
  OngoingAvatar,
  OngoingShootAvatar,
  OngoingTurningAvatar,
  OrientedAvatar,
  VerticalAvatar,
};

std::string_view to_string(SpriteClass c);
/// Known class for a token, or nullopt for anything else (including "Abstract"/"Opaque").
std::optional<SpriteClass> sprite_class_from_token(std::string_view token);
bool is_avatar_class(SpriteClass c);
/// Avatar classes whose `use` action fires their `stype` projectile.
bool is_shooting_avatar_class(SpriteClass c);
/// Non-avatar classes that create sprites on their own (SpawnPoint, Bomber).
bool is_spawner_class(SpriteClass c);

struct SpriteDef;
/// Avatar-class sprite, or an unknown class whose token ends in "Avatar".
bool is_avatar_sprite(const SpriteDef& s);

/// key=value pairs as written; ordered so printing is stable.
using Params = std::map<std::string, std::string>;

/// Reserved pseudo-sprite standing for the edge of the level.
inline constexpr std::string_view kEndOfScreen = "EOS";

struct SpriteDef {
  std::string name;
  /// Resolved class: own token, else nearest ancestor's, else Abstract (has
  /// children) or Immovable (leaf).
  SpriteClass sprite_class = SpriteClass::Immovable;
  /// Class token exactly as written on this line, if any.
  std::optional<std::string> class_token;
  Params params;  // own params only; see resolved_params()
  std::optional<std::string> parent;
  int depth = 0;

  bool operator==(const SpriteDef&) const = default;
};

struct InteractionDef {
  std::string subject;
  std::string object;
  std::string effect;  // effect token, e.g. killSprite
  Params params;       // without scoreChange
  int score_delta = 0;

  bool operator==(const InteractionDef&) const = default;
};

enum class TerminationKind { SpriteCounter, MultiSpriteCounter, Timeout };
std::string_view to_string(TerminationKind k);

struct TerminationDef {
  TerminationKind kind = TerminationKind::SpriteCounter;
  std::vector<std::string> sprites;  // empty for Timeout
  int limit = 0;
  bool win = false;
  Params params;  // anything besides stype*/limit/win

  bool operator==(const TerminationDef&) const = default;
};

struct GameDescription {
  Params game_params;                 // parameters on the BasicGame line
  std::vector<SpriteDef> sprites;     // pre-order declaration order
  std::vector<InteractionDef> interactions;
  std::vector<TerminationDef> terminations;
  std::map<char, std::vector<std::string>> level_mapping;

  bool operator==(const GameDescription&) const = default;

  const SpriteDef* find(std::string_view name) const;
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Direct children in declaration order.
  std::vector<std::string> children(std::string_view name) const;
  bool has_children(std::string_view name) const;
  /// True when `name` equals `ancestor` or descends from it.
  bool is_a(std::string_view name, std::string_view ancestor) const;
  /// Params inherited down the parent chain, child values overriding.
  Params resolved_params(std::string_view name) const;
  /// Names of avatar-class sprites that have no children.
  std::vector<std::string> avatars() const;
  bool uses_end_of_screen() const;
};

struct LevelGrid {
  std::string name;
  int width = 0;
  int height = 0;
  std::vector<std::string> cells;  // `height` rows of `width` characters

  char at(int x, int y) const { return cells[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]; }
  bool operator==(const LevelGrid&) const = default;
};

/// Blank cell in level files.
inline constexpr char kBlankCell = '.';

// --- errors ----------------------------------------------------------------

class VgdlError : public std::runtime_error {
 public:
  VgdlError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
  /// 1-based source line, or 0 when not tied to a line.
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class SyntaxError : public VgdlError {
 public:
  using VgdlError::VgdlError;
};

class ReferenceError : public VgdlError {
 public:
  ReferenceError(const std::string& name, int line);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class MissingSection : public VgdlError {
 public:
  explicit MissingSection(const std::string& section);
  const std::string& section() const noexcept { return section_; }

 private:
  std::string section_;
};

/// Structurally parsed but violates a game-level invariant (no avatar,
/// no win or lose termination, mapping onto an abstract sprite).
class InvalidGame : public VgdlError {
 public:
  using VgdlError::VgdlError;
};

class RaggedLevel : public VgdlError {
 public:
  RaggedLevel(int row, int expected, int actual);
  int row() const noexcept { return row_; }

 private:
  int row_;
};

class UnmappedChar : public VgdlError {
 public:
  UnmappedChar(int row, int col, char ch);
  int row() const noexcept { return row_; }
  int col() const noexcept { return col_; }
  char character() const noexcept { return ch_; }

 private:
  int row_;
  int col_;
  char ch_;
};

// --- operations ------------------------------------------------------------

GameDescription parse_game(std::string_view source);
LevelGrid parse_level(std::string_view source, const GameDescription& game, std::string name = {});
int hierarchy_depth(const GameDescription& game);

/// Canonical source text; parse_game(to_source(g)) == g.
std::string to_source(const GameDescription& game);

GameDescription load_game_file(const std::string& path);
LevelGrid load_level_file(const std::string& path, const GameDescription& game);

}  // namespace atdelfi::vgdl
