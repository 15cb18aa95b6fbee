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

namespace gamevec::othello {

inline constexpr int kNumCells = 64;
inline constexpr int kPassAction = 64;
inline constexpr int kNumActions = 65;
inline constexpr int kObservationSize = 8 * 8 * 2;

// Bitboards, bit (row * 8 + col). Role 0 plays black and moves first.
struct Core {
  std::array<std::uint64_t, 2> discs{(1ULL << 28) | (1ULL << 35), (1ULL << 27) | (1ULL << 36)};
  std::int8_t role_to_move = 0;
  std::int8_t consecutive_passes = 0;

  friend bool operator==(const Core&, const Core&) = default;
  void hash_into(Hasher& h) const;
};

Core initial(RngKey key);
int role_to_move(const Core& core);
// Bitboard of placements available to `role`.
std::uint64_t placements(const Core& core, int role);
// Discs flipped by `role` placing at `cell` (zero when the placement is illegal).
std::uint64_t flips(const Core& core, int role, int cell);
void legal_actions(const Core& core, std::span<std::uint8_t> mask);
Outcome apply(Core& core, int action, RngKey key);
Outcome transition(Core& core, int action, RngKey key = RngKey());
int disc_count(const Core& core, int role);
void observe(const Core& core, int role, std::span<float> out);
std::string render(const Core& core);

}  // namespace gamevec::othello
