// Copyright 2026 The gamevec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "gamevec/games/backgammon.hpp"

#include <algorithm>
#include <cstdio>

#include "gamevec/errors.hpp"

namespace gamevec::backgammon {
namespace {

int sign_of(int role) { return role == 0 ? 1 : -1; }

bool die_available(const Core& core, int die) {
  for (int i = 0; i < core.num_remaining; ++i) {
    if (core.remaining[i] == die) return true;
  }
  return false;
}

void consume_die(Core& core, int die) {
  for (int i = 0; i < core.num_remaining; ++i) {
    if (core.remaining[i] == die) {
      core.remaining[i] = core.remaining[core.num_remaining - 1];
      core.remaining[--core.num_remaining] = 0;
      std::sort(core.remaining.begin(), core.remaining.begin() + core.num_remaining);
      return;
    }
  }
}

bool all_home(const Core& core, int role) {
  if (core.bar[role] > 0) return false;
  for (int q = 7; q <= kNumPoints; ++q) {
    if (own_checkers(core, role, q) > 0) return false;
  }
  return true;
}

bool any_move(const Core& core) {
  for (int source = kBarSource; source < kNumSources; ++source) {
    for (int die = 1; die <= 6; ++die) {
      if (movable(core, source, die)) return true;
    }
  }
  return false;
}

void end_turn(Core& core, RngKey key) {
  core.role_to_move = static_cast<std::int8_t>(1 - core.role_to_move);
  roll(core, key);
}

float payoff(const Core& core, int winner) {
  const int loser = 1 - winner;
  if (core.borne_off[loser] > 0) return 1.0f;
  if (core.bar[loser] > 0) return 3.0f;
  for (int q = 1; q <= 6; ++q) {
    if (opponent_checkers(core, winner, q) > 0) return 3.0f;
  }
  return 2.0f;
}

}  // namespace

std::array<std::int8_t, kNumPoints> Core::opening_position() {
  std::array<std::int8_t, kNumPoints> p{};
  // Role 0 on its points 24, 13, 8, 6; role 1 mirrored.
  p[23] = 2;
  p[12] = 5;
  p[7] = 3;
  p[5] = 5;
  p[0] = -2;
  p[11] = -5;
  p[16] = -3;
  p[18] = -5;
  return p;
}

void Core::hash_into(Hasher& h) const {
  h.add_all<std::int8_t>(points);
  h.add_all<std::int8_t>(bar);
  h.add_all<std::int8_t>(borne_off);
  h.add_all<std::int8_t>(dice);
  h.add_all<std::int8_t>(remaining);
  h.add(num_remaining);
  h.add(role_to_move);
}

int own_checkers(const Core& core, int role, int q) {
  const int v = core.points[absolute_index(role, q)] * sign_of(role);
  return v > 0 ? v : 0;
}

int opponent_checkers(const Core& core, int role, int q) {
  const int v = core.points[absolute_index(role, q)] * sign_of(role);
  return v < 0 ? -v : 0;
}

int checker_total(const Core& core, int role) {
  int total = core.bar[role] + core.borne_off[role];
  for (int q = 1; q <= kNumPoints; ++q) total += own_checkers(core, role, q);
  return total;
}

void roll(Core& core, RngKey key) {
  const auto [a, b] = key.split();
  const auto d1 = static_cast<std::int8_t>(a.uniform_int(6) + 1);
  const auto d2 = static_cast<std::int8_t>(b.uniform_int(6) + 1);
  core.dice = {d1, d2};
  core.remaining = {0, 0, 0, 0};
  if (d1 == d2) {
    core.remaining = {d1, d1, d1, d1};
    core.num_remaining = 4;
  } else {
    core.remaining[0] = std::min(d1, d2);
    core.remaining[1] = std::max(d1, d2);
    core.num_remaining = 2;
  }
}

Core initial(RngKey key) {
  Core core;
  roll(core, key);
  return core;
}

int role_to_move(const Core& core) { return core.role_to_move; }

bool movable(const Core& core, int source, int die) {
  if (source <= kNoOpSource || source >= kNumSources || die < 1 || die > 6) return false;
  if (!die_available(core, die)) return false;
  const int me = core.role_to_move;
  if (core.bar[me] > 0) {
    if (source != kBarSource) return false;
    return opponent_checkers(core, me, kNumPoints + 1 - die) < 2;
  }
  if (source == kBarSource) return false;
  const int q = source - 1;
  if (own_checkers(core, me, q) == 0) return false;
  const int dest = q - die;
  if (dest >= 1) return opponent_checkers(core, me, dest) < 2;
  if (!all_home(core, me)) return false;
  if (dest == 0) return true;
  // Overshooting bear-off is allowed only from the furthest occupied point.
  for (int higher = q + 1; higher <= 6; ++higher) {
    if (own_checkers(core, me, higher) > 0) return false;
  }
  return true;
}

void legal_actions(const Core& core, std::span<std::uint8_t> mask) {
  std::fill(mask.begin(), mask.end(), std::uint8_t{0});
  bool found = false;
  for (int source = kBarSource; source < kNumSources; ++source) {
    for (int die = 1; die <= 6; ++die) {
      if (movable(core, source, die)) {
        mask[encode_action(source, die)] = 1;
        found = true;
      }
    }
  }
  if (!found) {
    for (int i = 0; i < core.num_remaining; ++i) {
      mask[encode_action(kNoOpSource, core.remaining[i])] = 1;
    }
  }
}

Outcome apply(Core& core, int action, RngKey key) {
  const int me = core.role_to_move;
  const int source = action_source(action);
  const int die = action_die(action);
  if (source == kNoOpSource) {
    end_turn(core, key);
    return {};
  }
  const int s = sign_of(me);
  int q;
  if (source == kBarSource) {
    --core.bar[me];
    q = kNumPoints + 1;
  } else {
    q = source - 1;
    core.points[absolute_index(me, q)] = static_cast<std::int8_t>(
        core.points[absolute_index(me, q)] - s);
  }
  const int dest = q - die;
  if (dest <= 0) {
    ++core.borne_off[me];
  } else {
    auto& cell = core.points[absolute_index(me, dest)];
    if (cell == -s) {
      cell = 0;
      ++core.bar[1 - me];
    }
    cell = static_cast<std::int8_t>(cell + s);
  }
  consume_die(core, die);
  if (core.borne_off[me] == kCheckers) return Outcome::win_for(me, payoff(core, me));
  if (core.num_remaining == 0) end_turn(core, key);
  return {};
}

Outcome transition(Core& core, int action, RngKey key) {
  if (action < 0 || action >= kNumActions) throw IllegalAction("backgammon: action out of range");
  const int source = action_source(action);
  const int die = action_die(action);
  const bool legal = source == kNoOpSource ? (die_available(core, die) && !any_move(core))
                                           : movable(core, source, die);
  if (!legal) {
    throw IllegalAction("backgammon: (source " + std::to_string(source) + ", die " +
                        std::to_string(die) + ") is not playable");
  }
  return apply(core, action, key);
}

void observe(const Core& core, int role, std::span<float> out) {
  for (int q = 1; q <= kNumPoints; ++q) {
    out[q - 1] = static_cast<float>(own_checkers(core, role, q) - opponent_checkers(core, role, q));
  }
  out[24] = core.bar[role];
  out[25] = core.bar[1 - role];
  out[26] = core.borne_off[role];
  out[27] = core.borne_off[1 - role];
  for (int d = 1; d <= 6; ++d) out[27 + d] = 0.0f;
  for (int i = 0; i < core.num_remaining; ++i) out[27 + core.remaining[i]] += 1.0f;
}

std::string render(const Core& core) {
  // Absolute points; X is role 0, O is role 1.
  std::string s;
  char buf[32];
  auto cell = [&](int index) {
    const int v = core.points[index];
    if (v == 0) {
      std::snprintf(buf, sizeof buf, " %2d:  . ", index + 1);
    } else {
      std::snprintf(buf, sizeof buf, " %2d:%c%2d ", index + 1, v > 0 ? 'X' : 'O', v > 0 ? v : -v);
    }
    s += buf;
  };
  for (int i = 12; i < 24; ++i) cell(i);
  s += '\n';
  for (int i = 11; i >= 0; --i) cell(i);
  s += '\n';
  std::snprintf(buf, sizeof buf, "bar X:%d O:%d", core.bar[0], core.bar[1]);
  s += buf;
  std::snprintf(buf, sizeof buf, "  off X:%d O:%d", core.borne_off[0], core.borne_off[1]);
  s += buf;
  std::snprintf(buf, sizeof buf, "  dice %d-%d  to move: %c", core.dice[0], core.dice[1],
                core.role_to_move == 0 ? 'X' : 'O');
  s += buf;
  s += "\nremaining:";
  for (int i = 0; i < core.num_remaining; ++i) s += ' ' + std::to_string(core.remaining[i]);
  s += '\n';
  return s;
}

}  // namespace gamevec::backgammon
