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


#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "gamevec/games/common.hpp"

namespace gamevec::backgammon {

inline constexpr int kNumPoints = 24;
inline constexpr int kCheckers = 15;
inline constexpr int kNumSources = 26;
inline constexpr int kNumActions = kNumSources * 6;
inline constexpr int kObservationSize = 34;

inline constexpr int kNoOpSource = 0;
inline constexpr int kBarSource = 1;

// Actions are source * 6 + (die - 1). Source 0 is the no-op, 1 the bar, and
// 2..25 the mover's own points 1..24 counted in pips from bearing off.
constexpr int encode_action(int source, int die) { return source * 6 + die - 1; }
constexpr int action_source(int action) { return action / 6; }
constexpr int action_die(int action) { return action % 6 + 1; }

// points[i] is absolute point i + 1: positive counts are role 0 checkers,
// negative counts role 1. Role 0 moves from point 24 toward point 1 (home
// board 1..6); role 1 moves the opposite way (home board 19..24).
struct Core {
  std::array<std::int8_t, kNumPoints> points = opening_position();
  std::array<std::int8_t, 2> bar{};
  std::array<std::int8_t, 2> borne_off{};
  std::array<std::int8_t, 2> dice{};
  std::array<std::int8_t, 4> remaining{};
  std::int8_t num_remaining = 0;
  std::int8_t role_to_move = 0;

  friend bool operator==(const Core&, const Core&) = default;
  void hash_into(Hasher& h) const;

  static std::array<std::int8_t, kNumPoints> opening_position();
};

// Absolute index (0..23) of `role`'s relative point q (1..24).
constexpr int absolute_index(int role, int q) { return role == 0 ? q - 1 : kNumPoints - q; }
// Checkers of `role` on its relative point q (0 when the point is the opponent's).
int own_checkers(const Core& core, int role, int q);
int opponent_checkers(const Core& core, int role, int q);
// Points + bar + borne off for `role`.
int checker_total(const Core& core, int role);

// Rolls two dice into `core` for the side to move.
void roll(Core& core, RngKey key);

Core initial(RngKey key);
int role_to_move(const Core& core);
// True when (source, die) is a playable micro-move, ignoring the no-op.
bool movable(const Core& core, int source, int die);
void legal_actions(const Core& core, std::span<std::uint8_t> mask);
Outcome apply(Core& core, int action, RngKey key);
Outcome transition(Core& core, int action, RngKey key);
// 24 signed point counts from the observer's side, bar (mine, theirs),
// borne off (mine, theirs), remaining moves per die value 1..6.
void observe(const Core& core, int role, std::span<float> out);
std::string render(const Core& core);

}  // namespace gamevec::backgammon
