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

namespace gamevec::leduc_holdem {

inline constexpr int kNumActions = 3;
inline constexpr int kObservationSize = 34;
inline constexpr int kMaxChips = 13;
inline constexpr int kMaxRaisesPerRound = 2;

enum Action : int { kCall = 0, kRaise = 1, kFold = 2 };

// Deck cards 0..5 are J J Q Q K K; a card's rank is card / 2.
constexpr int rank_of(int card) { return card / 2; }

// Role 0 acts first in both rounds. Each player antes one chip; raises are
// 2 chips in round 1 and 4 in round 2.
struct Core {
  std::array<std::int8_t, 2> hands{0, 2};
  std::int8_t public_card = -1;
  std::int8_t round = 1;
  std::int8_t raises_this_round = 0;
  std::int8_t actions_this_round = 0;
  std::array<std::int8_t, 2> committed{1, 1};
  std::int8_t role_to_move = 0;

  friend bool operator==(const Core&, const Core&) = default;
  void hash_into(Hasher& h) const;
};

Core deal(int card0, int card1);
Core initial(RngKey key);
int role_to_move(const Core& core);
void legal_actions(const Core& core, std::span<std::uint8_t> mask);
// Closing round 1 reveals the public card, drawn from `key` among the four
// cards not in either hand.
Outcome apply(Core& core, int action, RngKey key);
Outcome transition(Core& core, int action, RngKey key);
// Showdown result for role 0: +1 win, -1 loss, 0 split.
int showdown_winner(const Core& core);
// Own hand rank one-hot (3), public rank one-hot (3), own chips one-hot
// 0..13 (14), opponent chips one-hot 0..13 (14).
void observe(const Core& core, int role, std::span<float> out);
std::string render(const Core& core);

}  // namespace gamevec::leduc_holdem
