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
#include <vector>

#include "gamevec/games/common.hpp"

namespace gamevec::go {

inline constexpr int kSize = 9;
inline constexpr int kNumPoints = kSize * kSize;
inline constexpr int kPassAction = kNumPoints;
inline constexpr int kNumActions = kNumPoints + 1;
inline constexpr int kHistory = 8;
inline constexpr int kObservationSize = kNumPoints * (2 * kHistory + 1);

struct Rules {
  float komi = 6.5f;
  // Tromp-Taylor allows self-capture; the default masks it.
  bool allow_suicide = false;

  friend bool operator==(const Rules&, const Rules&) = default;
};

using Board = std::array<std::int8_t, kNumPoints>;

// Role 0 plays black and moves first. Superko is positional: a placement may
// not recreate any earlier whole-board colouring of the episode.
struct Core {
  Board board = empty_board();
  // past[0] is the board before the most recent move, past[6] seven moves back.
  std::array<Board, kHistory - 1> past = filled_history();
  std::int8_t role_to_move = 0;
  std::int8_t consecutive_passes = 0;
  std::uint64_t position_hash = 0;
  // Sorted hashes of every position seen this episode, including the current one.
  std::vector<std::uint64_t> seen_positions{0};
  Rules rules;

  friend bool operator==(const Core&, const Core&) = default;
  void hash_into(Hasher& h) const;

  static Board empty_board() {
    Board b;
    b.fill(kEmpty);
    return b;
  }
  static std::array<Board, kHistory - 1> filled_history() {
    std::array<Board, kHistory - 1> h;
    h.fill(empty_board());
    return h;
  }
};

struct Score {
  float black = 0.0f;
  float white = 0.0f;  // includes komi
};

Core initial(RngKey key, const Rules& rules = {});
int role_to_move(const Core& core);
std::uint64_t zobrist(int point, int role);
std::uint64_t position_hash(const Board& board);
void legal_actions(const Core& core, std::span<std::uint8_t> mask);
Outcome apply(Core& core, int action, RngKey key);
Outcome transition(Core& core, int action, RngKey key = RngKey());
// Area score: stones plus empty regions bordered by one colour only.
Score tromp_taylor_score(const Board& board, float komi);
// Liberty count of the chain at `point` (0 for an empty point).
int liberties(const Board& board, int point);
// Planes: for t = 0..7 (newest first) my stones, opponent stones; then colour
// (1 when the observer plays black).
void observe(const Core& core, int role, std::span<float> out);
std::string render(const Core& core);

}  // namespace gamevec::go
