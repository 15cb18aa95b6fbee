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

namespace gamevec::kuhn_poker {

inline constexpr int kNumActions = 4;
inline constexpr int kObservationSize = 7;

enum Action : int { kCall = 0, kBet = 1, kFold = 2, kCheck = 3 };
enum Card : int { kJack = 0, kQueen = 1, kKing = 2 };

// Role 0 acts first. Both players ante one chip; a bet or call adds one.
struct Core {
  std::array<std::int8_t, 2> hands{kJack, kQueen};
  std::array<std::int8_t, 3> history{-1, -1, -1};
  std::int8_t history_length = 0;
  std::array<std::int8_t, 2> committed{1, 1};
  std::int8_t role_to_move = 0;

  friend bool operator==(const Core&, const Core&) = default;
  void hash_into(Hasher& h) const;
};

Core deal(int card0, int card1);
Core initial(RngKey key);
int role_to_move(const Core& core);
void legal_actions(const Core& core, std::span<std::uint8_t> mask);
Outcome apply(Core& core, int action, RngKey key);
Outcome transition(Core& core, int action, RngKey key = RngKey());
// Own hand one-hot (3), own chips beyond the ante one-hot (2), opponent chips
// beyond the ante one-hot (2).
void observe(const Core& core, int role, std::span<float> out);
std::string render(const Core& core);

}  // namespace gamevec::kuhn_poker
