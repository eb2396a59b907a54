#include "atdelfi/simulator.hpp"

#include <algorithm>
#include <cstdlib>

namespace atdelfi::sim {

using vgdl::SpriteClass;

std::string_view to_string(Action a) {
  switch (a) {
    case Action::Up: return "Up";
    case Action::Down: return "Down";
    case Action::Left: return "Left";
    case Action::Right: return "Right";
    case Action::Use: return "Use";
    case Action::Nil: return "Nil";
  }
  return "Nil";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Running: return "Running";
    case Status::Won: return "Won";
    case Status::Lost: return "Lost";
  }
  return "Running";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Won: return "Won";
    case Outcome::Lost: return "Lost";
    case Outcome::TimedOut: return "TimedOut";
  }
  return "TimedOut";
}

std::optional<Outcome> outcome_from_string(std::string_view s) {
  for (auto o : {Outcome::Won, Outcome::Lost, Outcome::TimedOut}) {
    if (to_string(o) == s) return o;
  }
  return std::nullopt;
}

int GameState::count_of(int type) const {
  return static_cast<int>(std::count_if(sprites.begin(), sprites.end(),
                                        [&](const SpriteInstance& s) { return s.alive && s.type == type; }));
}

struct Simulator::StepContext {
  int tick = 0;
  std::vector<TraceEvent>* events = nullptr;

  void emit(GameState& s, MechanicId m, std::vector<int> involved, int score) const {
    s.score += score;
    if (events) events->push_back({tick, m, std::move(involved), score});
  }
};

namespace {

bool chance(GameState& s, double p) {
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  return static_cast<double>(s.rng() % 1000000) < p * 1e6;
}

void direction(Action a, int& dx, int& dy) {
  dx = dy = 0;
  switch (a) {
    case Action::Up: dy = -1; break;
    case Action::Down: dy = 1; break;
    case Action::Left: dx = -1; break;
    case Action::Right: dx = 1; break;
    default: break;
  }
}

}  // namespace

int Simulator::spawn(GameState& s, int type, int x, int y, int dx, int dy) const {
  SpriteInstance sp;
  sp.id = s.next_id++;
  sp.type = type;
  sp.x = sp.prev_x = x;
  sp.y = sp.prev_y = y;
  sp.dx = dx;
  sp.dy = dy;
  sp.born = s.tick;
  s.sprites.push_back(sp);
  return sp.id;
}

void Simulator::move(GameState& s, SpriteInstance& sp, int dx, int dy) const {
  if (dx == 0 && dy == 0) return;
  const int nx = sp.x + dx, ny = sp.y + dy;
  if (nx < 0 || ny < 0 || nx >= s.width || ny >= s.height) {
    sp.at_edge = true;
    return;
  }
  sp.x = nx;
  sp.y = ny;
}

GameState Simulator::initial_state(const vgdl::LevelGrid& level, std::uint64_t seed) const {
  GameState s;
  s.width = level.width;
  s.height = level.height;
  s.rng_seed = seed;
  s.rng.seed(static_cast<std::minstd_rand::result_type>((seed ^ (seed >> 32)) & 0xffffffffu));
  for (int y = 0; y < level.height; ++y) {
    for (int x = 0; x < level.width; ++x) {
      auto it = mapping_.find(level.at(x, y));
      if (it == mapping_.end()) continue;
      for (int type : it->second) {
        const auto& t = types_[static_cast<std::size_t>(type)];
        spawn(s, type, x, y, t.dx, t.dy);
      }
    }
  }
  return s;
}

void Simulator::act_avatar(GameState& s, std::size_t idx, Action a, StepContext& ctx) const {
  const auto& t = types_[static_cast<std::size_t>(s.sprites[idx].type)];
  int dx = 0, dy = 0;
  direction(a, dx, dy);
  {
    auto& sp = s.sprites[idx];
    switch (t.cls) {
      case SpriteClass::HorizontalAvatar:
      case SpriteClass::FlakAvatar:
        move(s, sp, dx, 0);
        break;
      case SpriteClass::VerticalAvatar:
        move(s, sp, 0, dy);
        break;
      case SpriteClass::OrientedAvatar:
      case SpriteClass::ShootAvatar:
        if (dx || dy) {
          sp.dx = dx;
          sp.dy = dy;
        }
        move(s, sp, dx, dy);
        break;
      case SpriteClass::OngoingAvatar:
      case SpriteClass::OngoingShootAvatar:
      case SpriteClass::OngoingTurningAvatar:
        if ((dx || dy) && !(t.cls == SpriteClass::OngoingTurningAvatar && dx == -sp.dx && dy == -sp.dy)) {
          sp.dx = dx;
          sp.dy = dy;
        }
        move(s, sp, sp.dx, sp.dy);
        break;
      default:
        move(s, sp, dx, dy);
        break;
    }
    ++sp.cool;
  }
  if (a != Action::Use || !t.input_rule || t.stype < 0) return;
  if (s.sprites[idx].cool < t.cooldown) return;
  const auto& proj = types_[static_cast<std::size_t>(t.stype)];
  if (proj.singleton && s.count_of(t.stype) > 0) return;
  const auto sp = s.sprites[idx];
  int px = sp.x, py = sp.y - 1, pdx = proj.dx, pdy = proj.dy;
  if (t.cls != SpriteClass::FlakAvatar) {
    px = sp.x + sp.dx;
    py = sp.y + sp.dy;
    pdx = sp.dx;
    pdy = sp.dy;
  }
  if (px < 0 || py < 0 || px >= s.width || py >= s.height) return;
  s.sprites[idx].cool = 0;
  int created = spawn(s, t.stype, px, py, pdx, pdy);
  ctx.emit(s, *t.input_rule, {sp.id, created}, 0);
}

void Simulator::act_npc(GameState& s, std::size_t idx, StepContext& ctx) const {
  const auto& t = types_[static_cast<std::size_t>(s.sprites[idx].type)];
  auto& sp = s.sprites[idx];
  ++sp.cool;
  switch (t.cls) {
    case SpriteClass::Missile:
    case SpriteClass::Bomber:
      if (sp.cool >= t.move_interval) {
        sp.cool = 0;
        move(s, sp, sp.dx, sp.dy);
      }
      if (t.cls == SpriteClass::Bomber && t.behavior && t.stype >= 0 && chance(s, t.prob)) {
        const auto& st = types_[static_cast<std::size_t>(t.stype)];
        const int self = sp.id, x = sp.x, y = sp.y;
        int created = spawn(s, t.stype, x, y, st.dx, st.dy);
        ctx.emit(s, *t.behavior, {self, created}, 0);
      }
      break;
    case SpriteClass::SpawnPoint: {
      if (sp.cool < t.cooldown || !t.behavior || t.stype < 0) break;
      sp.cool = 0;
      if (!chance(s, t.prob)) break;
      ++sp.spawned;
      if (t.total > 0 && sp.spawned >= t.total) sp.alive = false;
      const auto& st = types_[static_cast<std::size_t>(t.stype)];
      const int self = sp.id, x = sp.x, y = sp.y;
      int created = spawn(s, t.stype, x, y, st.dx, st.dy);
      ctx.emit(s, *t.behavior, {self, created}, 0);
      break;
    }
    case SpriteClass::Chaser:
    case SpriteClass::Fleeing: {
      if (sp.cool < t.cooldown || t.stype < 0) break;
      sp.cool = 0;
      const SpriteInstance* target = nullptr;
      int best = 0;
      for (const auto& o : s.sprites) {
        if (!o.alive || !is_a(o.type, t.stype)) continue;
        int d = std::abs(o.x - sp.x) + std::abs(o.y - sp.y);
        if (!target || d < best) {
          target = &o;
          best = d;
        }
      }
      if (!target) break;
      const bool chase = t.cls == SpriteClass::Chaser;
      int choice = -1, choice_d = best;
      for (int k = 0; k < 4; ++k) {
        int dx = 0, dy = 0;
        direction(kActions[k], dx, dy);
        int nx = sp.x + dx, ny = sp.y + dy;
        if (nx < 0 || ny < 0 || nx >= s.width || ny >= s.height) continue;
        int d = std::abs(target->x - nx) + std::abs(target->y - ny);
        if (chase ? d < choice_d : d > choice_d) {
          choice = k;
          choice_d = d;
        }
      }
      if (choice >= 0) {
        int dx = 0, dy = 0;
        direction(kActions[choice], dx, dy);
        move(s, sp, dx, dy);
      }
      break;
    }
    case SpriteClass::RandomNPC: {
      if (sp.cool < t.cooldown) break;
      sp.cool = 0;
      int dx = 0, dy = 0;
      direction(kActions[s.rng() % 4], dx, dy);
      move(s, sp, dx, dy);
      break;
    }
    default:
      break;
  }
}

void Simulator::resolve_collisions(GameState& s, StepContext& ctx) const {
  std::vector<std::size_t> subjects, objects;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& r : rules_) {
    subjects.clear();
    objects.clear();
    pairs.clear();
    for (std::size_t i = 0; i < s.sprites.size(); ++i) {
      const auto& sp = s.sprites[i];
      if (!sp.alive) continue;
      if (is_a(sp.type, r.subject) && (r.object >= 0 || sp.at_edge)) subjects.push_back(i);
      if (r.object >= 0 && is_a(sp.type, r.object)) objects.push_back(i);
    }
    if (subjects.empty()) continue;
    if (r.object < 0) {
      for (auto i : subjects) pairs.emplace_back(i, i);
    } else {
      for (auto i : subjects) {
        for (auto j : objects) {
          if (i != j && s.sprites[i].x == s.sprites[j].x && s.sprites[i].y == s.sprites[j].y) pairs.emplace_back(i, j);
        }
      }
    }
    for (auto [i, j] : pairs) {
      if (!s.sprites[i].alive || !s.sprites[j].alive) continue;
      const SpriteInstance sub = s.sprites[i];
      std::vector<int> involved{sub.id};
      if (r.object >= 0) involved.push_back(s.sprites[j].id);
      switch (r.effect) {
        case Effect::Kill:
          s.sprites[i].alive = false;
          break;
        case Effect::TransformTo:
          s.sprites[i].alive = false;
          involved.push_back(spawn(s, r.stype, sub.x, sub.y, sub.dx, sub.dy));
          break;
        case Effect::Clone:
          involved.push_back(spawn(s, sub.type, sub.x, sub.y, sub.dx, sub.dy));
          break;
        case Effect::Spawn: {
          const auto& st = types_[static_cast<std::size_t>(r.stype)];
          involved.push_back(spawn(s, r.stype, sub.x, sub.y, st.dx, st.dy));
          break;
        }
        case Effect::StepBack:
          s.sprites[i].x = sub.prev_x;
          s.sprites[i].y = sub.prev_y;
          break;
        case Effect::TurnAround:
          if (sub.y + 1 < s.height) s.sprites[i].y = sub.y + 1;
          s.sprites[i].dx = -sub.dx;
          s.sprites[i].dy = -sub.dy;
          break;
        case Effect::ReverseDirection:
          s.sprites[i].dx = -sub.dx;
          s.sprites[i].dy = -sub.dy;
          break;
      }
      ctx.emit(s, r.mechanic, std::move(involved), r.score);
    }
  }
}

void Simulator::check_terminations(GameState& s, StepContext& ctx) const {
  for (const auto& t : terminals_) {
    bool fire = false;
    if (t.kind == vgdl::TerminationKind::Timeout) {
      fire = s.tick >= t.limit;
    } else {
      int count = 0;
      for (const auto& sp : s.sprites) {
        if (std::any_of(t.types.begin(), t.types.end(), [&](int ty) { return is_a(sp.type, ty); })) ++count;
      }
      fire = count <= t.limit;
    }
    if (fire) {
      s.status = t.win ? Status::Won : Status::Lost;
      ctx.emit(s, t.mechanic, {}, 0);
      return;
    }
  }
}

void Simulator::step(GameState& s, Action action, std::vector<TraceEvent>* events) const {
  if (s.status != Status::Running) throw SteppedTerminalState();
  s.tick += 1;
  StepContext ctx{s.tick, events};
  for (auto& sp : s.sprites) {
    sp.prev_x = sp.x;
    sp.prev_y = sp.y;
    sp.at_edge = false;
  }
  const std::size_t existing = s.sprites.size();
  for (std::size_t i = 0; i < existing; ++i) {
    if (types_[static_cast<std::size_t>(s.sprites[i].type)].avatar) act_avatar(s, i, action, ctx);
  }
  for (std::size_t i = 0; i < existing; ++i) {
    const auto& sp = s.sprites[i];
    if (sp.alive && !types_[static_cast<std::size_t>(sp.type)].avatar) act_npc(s, i, ctx);
  }
  resolve_collisions(s, ctx);
  std::erase_if(s.sprites, [](const SpriteInstance& sp) { return !sp.alive; });
  check_terminations(s, ctx);
}

Grid Simulator::render(const GameState& s) const {
  Grid g(static_cast<std::size_t>(s.height), std::string(static_cast<std::size_t>(s.width), vgdl::kBlankCell));
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& sp : s.sprites) {
      const auto& t = types_[static_cast<std::size_t>(sp.type)];
      if (!sp.alive || t.avatar != (pass == 1)) continue;
      g[static_cast<std::size_t>(sp.y)][static_cast<std::size_t>(sp.x)] = t.glyph;
    }
  }
  return g;
}

}  // namespace atdelfi::sim
