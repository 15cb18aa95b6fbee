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

namespace gamevec::play2048 {

inline constexpr int kNumCells = 16;
inline constexpr int kNumActions = 4;
inline constexpr int kMaxExponent = 31;
inline constexpr int kObservationSize = kNumCells * kMaxExponent;

enum Direction : int { kLeft = 0, kUp = 1, kRight = 2, kDown = 3 };

// Cell (row * 4 + col) holds a tile exponent: 0 is empty, k is the tile 2^k.
using Board = std::array<std::int8_t, kNumCells>;

struct Core {
  Board board{};
  std::uint64_t score = 0;  // running sum of rewards; diagnostic only

  friend bool operator==(const Core&, const Core&) = default;
  void hash_into(Hasher& h) const;
};

struct Slide {
  Board board;
  std::uint32_t reward = 0;  // sum of the values of tiles created by merges
  bool moved = false;
};

// Deterministic part of a move. Tiles pair from the movement side and a merged
// tile does not merge again in the same move.
Slide slide(const Board& board, int direction);
// Places one 2 (p = 0.9) or 4 tile on a uniformly chosen empty cell.
void spawn(Board& board, RngKey key);

Core initial(RngKey key);
int role_to_move(const Core& core);
void legal_actions(const Core& core, std::span<std::uint8_t> mask);
Outcome apply(Core& core, int action, RngKey key);
Outcome transition(Core& core, int action, RngKey key);
// One-hot exponent planes: plane k - 1 marks cells holding 2^k.
void observe(const Core& core, int role, std::span<float> out);
std::string render(const Core& core);

}  // namespace gamevec::play2048
